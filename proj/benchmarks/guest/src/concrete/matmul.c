static volatile int a[16] = {1, -2, 3, 4, 5, 6, -7, 8, 9, 10, 11, -12, 13, 14, 15, 16};
int c[16];

int main(void) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += a[i * 4 + k] * a[k * 4 + j];
      c[i * 4 + j] = s;
    }
  return 0;
}
