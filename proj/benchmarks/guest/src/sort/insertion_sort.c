#include "rvsym.h"

#ifndef N
#define N 4
#endif

static unsigned char a[N];

int main(void) {
  rvsym_make_symbolic(a, N);
  for (int i = 1; i < N; ++i) {
    unsigned char key = a[i];
    int j = i - 1;
    while (j >= 0 && a[j] > key) {
      a[j + 1] = a[j];
      --j;
    }
    a[j + 1] = key;
  }
  return 0;
}
