#include "rvsym.h"

#ifndef N
#define N 4
#endif

static unsigned char a[N];

int main(void) {
  rvsym_make_symbolic(a, N);
  for (int i = 0; i < N - 1; ++i)
    for (int j = 0; j < N - 1 - i; ++j)
      if (a[j] > a[j + 1]) {
        unsigned char t = a[j];
        a[j] = a[j + 1];
        a[j + 1] = t;
      }
  return 0;
}
