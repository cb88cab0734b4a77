static volatile unsigned start = 27;
unsigned steps, peak;

int main(void) {
  unsigned x = start;
  while (x != 1) {
    x = (x & 1) ? 3 * x + 1 : x / 2;
    if (x > peak) peak = x;
    ++steps;
  }
  return (int)steps;
}
