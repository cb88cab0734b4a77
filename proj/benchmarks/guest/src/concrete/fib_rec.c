static volatile int n = 15;
int result;

__attribute__((noinline)) static int fib(int k) { return k < 2 ? k : fib(k - 1) + fib(k - 2); }

int main(void) {
  result = fib(n);
  return result & 0x7f;
}
