#include "rvsym.h"

static unsigned char x;

int main(void) {
  rvsym_make_symbolic(&x, 1);
  if (x < 10) rvsym_putchar('a');
  if (x > 200) rvsym_putchar('b');
  if (x & 1) rvsym_putchar('c');
  if (x == 77) rvsym_putchar('d');
  if ((x & 0xf0) == 0x40) rvsym_putchar('e');
  return 0;
}
