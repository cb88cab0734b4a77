static volatile int in[6] = {-7, 3, 0, 0x80000000, -1, 1000003};
int out[48];

int main(void) {
  int k = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; j += 2) {
      int a = in[i], b = in[j];
      int q, r;
      unsigned qu, ru;
      __asm__ volatile("div %0, %1, %2" : "=r"(q) : "r"(a), "r"(b));
      __asm__ volatile("rem %0, %1, %2" : "=r"(r) : "r"(a), "r"(b));
      __asm__ volatile("divu %0, %1, %2" : "=r"(qu) : "r"(a), "r"(b));
      __asm__ volatile("remu %0, %1, %2" : "=r"(ru) : "r"(a), "r"(b));
      out[k++ % 48] = q ^ r;
      out[k++ % 48] = (int)(qu + ru);
    }
  }
  return 0;
}
