static volatile int v[6] = {-1, 0, 1, 2047, -2048, 0x7fffffff};
unsigned out[72];

int main(void) {
  int k = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      out[k++] = v[i] < v[j];
      out[k++] = (unsigned)v[i] < (unsigned)v[j];
    }
  return 0;
}
