#include "rvsym.h"

int main(void) {
  rvsym_puts("hello, world\n");
  return 0;
}
