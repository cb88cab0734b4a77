static volatile int ops[12] = {0, 1, 2, 3, 4, 5, 6, 7, 3, 2, 1, 9};
int acc[12];

int main(void) {
  int x = 100;
  for (int i = 0; i < 12; ++i) {
    switch (ops[i]) {
      case 0: x += 17; break;
      case 1: x *= 3; break;
      case 2: x -= 250; break;
      case 3: x ^= 0x5a5a; break;
      case 4: x = x >> 2; break;
      case 5: x = -x; break;
      case 6: x |= 0x1000; break;
      case 7: x &= 0xffff; break;
      default: x = 1; break;
    }
    acc[i] = x;
  }
  return 0;
}
