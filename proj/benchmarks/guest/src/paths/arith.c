#include "rvsym.h"

static unsigned char in[2];
static volatile unsigned sink;

int main(void) {
  rvsym_make_symbolic(in, 2);
  unsigned a = in[0], b = in[1];
  if (a / 3 == 5) sink = 1;
  if (a % 7 == 0) sink = 2;
  if (((a * b) >> 8) > 20) sink = 3;
  if ((a << 3) > 1000) sink = 4;
  if ((a >> 2) == (b >> 2)) sink = 5;
  if ((signed char)b < -100) sink = 6;
  if (b != 0 && a / b == 3) sink = 7;
  return 0;
}
