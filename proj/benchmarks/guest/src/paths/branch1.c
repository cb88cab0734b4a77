#include "rvsym.h"

static unsigned char x;

int main(void) {
  rvsym_make_symbolic(&x, 1);
  if (x == 'A') rvsym_putchar('!');
  return 0;
}
