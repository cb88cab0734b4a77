#include "rvsym.h"

static unsigned char in[2];

__attribute__((noinline)) static int classify(unsigned v) {
  if (v < 64) return 0;
  if (v < 128) return 1;
  if (v < 192) return 2;
  return 3;
}

int main(void) {
  rvsym_make_symbolic(in, 2);
  int ca = classify(in[0]);
  int cb = classify(in[1]);
  if (ca == cb) rvsym_putchar('s');
  else if (ca > cb) rvsym_putchar('g');
  return ca * 4 + cb;
}
