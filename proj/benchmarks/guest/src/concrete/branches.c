static volatile int vals[8] = {-5, 0, 5, -2147483647 - 1, 2147483647, 17, -17, 1};
unsigned out[8];

int main(void) {
  for (int i = 0; i < 8; ++i) {
    unsigned m = 0;
    for (int j = 0; j < 8; ++j) {
      int a = vals[i], b = vals[j];
      if (a < b) m += 1;
      if (a >= b) m += 3;
      if ((unsigned)a < (unsigned)b) m += 7;
      if ((unsigned)a >= (unsigned)b) m += 11;
      if (a == b) m += 13;
      if (a != b) m ^= 0x100;
      m = (m << 1) | (m >> 31);
    }
    out[i] = m;
  }
  return 0;
}
