static volatile unsigned pairs[10] = {1071, 462, 270, 192, 17, 5, 0, 9, 1u << 31, 6};
unsigned out[5];

__attribute__((noinline)) static unsigned gcd(unsigned a, unsigned b) {
  while (b) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int main(void) {
  for (int i = 0; i < 5; ++i) out[i] = gcd(pairs[2 * i], pairs[2 * i + 1]);
  return 0;
}
