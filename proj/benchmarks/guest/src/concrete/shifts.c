static volatile int in[2] = {-0x12345678, 0x0f0f0f0f};
static volatile unsigned amount[6] = {0, 1, 7, 31, 32, 45};
unsigned out[24];

int main(void) {
  int k = 0;
  for (int i = 0; i < 6; ++i) {
    unsigned s = amount[i];
    int x = in[0];
    unsigned y = (unsigned)in[1];
    /* Shift amounts are masked to five bits in hardware. */
    __asm__ volatile("sll %0, %1, %2" : "=r"(out[k]) : "r"(x), "r"(s));
    __asm__ volatile("srl %0, %1, %2" : "=r"(out[k + 1]) : "r"(x), "r"(s));
    __asm__ volatile("sra %0, %1, %2" : "=r"(out[k + 2]) : "r"(x), "r"(s));
    out[k + 3] = y << (s & 31);
    k += 4;
  }
  out[k - 1] ^= (unsigned)in[0] >> 3;
  return 0;
}
