static volatile int seed = 3;

__attribute__((noinline)) static int fill(int *buf, int n) {
  int s = 0;
  for (int i = 0; i < n; ++i) {
    buf[i] = (i * seed) ^ 0x55;
    s += buf[i];
  }
  return s;
}

__attribute__((noinline)) static int nest(int depth) {
  int local[20];
  int s = fill(local, 20);
  return depth ? s + nest(depth - 1) : s;
}

int main(void) { return nest(6) & 0xff; }
