static volatile int in[4] = {123456789, -987654, 0x7fffffff, -1};
int out[12];

int main(void) {
  int a = in[0], b = in[1], c = in[2], d = in[3];
  out[0] = a + b;
  out[1] = a - b;
  out[2] = c + 1;
  out[3] = a ^ b;
  out[4] = a | d;
  out[5] = a & b;
  out[6] = b - c;
  out[7] = ~a;
  out[8] = -b;
  out[9] = a + 2047;
  out[10] = a - 2048;
  out[11] = (a & 0x7ff) ^ 0x555;
  return out[0] & 0xff;
}
