#include "rvsym.h"

static unsigned char in[2];

int main(void) {
  rvsym_make_symbolic(in, 2);
  unsigned a = in[0], b = in[1];
  if (a < b) rvsym_putchar('<');
  if (a + b > 300) rvsym_putchar('+');
  if (a == b) rvsym_putchar('=');
  if ((a ^ b) & 0x10) rvsym_putchar('^');
  if (a * 3 == b) rvsym_putchar('*');
  if (b - a == 7) rvsym_putchar('-');
  return 0;
}
