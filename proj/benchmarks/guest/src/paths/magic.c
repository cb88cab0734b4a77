#include "rvsym.h"

static char word[2];

int main(void) {
  rvsym_make_symbolic(word, 2);
  if (word[0] == 'o') {
    rvsym_putchar('1');
    if (word[1] == 'k') {
      rvsym_putchar('2');
      return 1;
    }
  }
  if (word[1] < 0) rvsym_putchar('3');
  return 0;
}
