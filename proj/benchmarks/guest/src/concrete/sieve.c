#define LIMIT 300
static unsigned char composite[LIMIT];
unsigned primes[64];
unsigned count;

int main(void) {
  for (unsigned i = 2; i < LIMIT; ++i) {
    if (composite[i]) continue;
    if (count < 64) primes[count] = i;
    ++count;
    for (unsigned j = i * i; j < LIMIT; j += i) composite[j] = 1;
  }
  return (int)count;
}
