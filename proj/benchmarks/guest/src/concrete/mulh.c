static volatile int in[5] = {-2, 0x7fffffff, (int)0x80000000, 12345, -99999};
unsigned out[100];

int main(void) {
  int k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      int a = in[i], b = in[j];
      out[k++] = (unsigned)(a * b);
      out[k++] = (unsigned)(((long long)a * b) >> 32);
      out[k++] = (unsigned)(((unsigned long long)(unsigned)a * (unsigned)b) >> 32);
      out[k++] = (unsigned)(((long long)a * (long long)(unsigned)b) >> 32);
    }
  return 0;
}
