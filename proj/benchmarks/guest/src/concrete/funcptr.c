typedef unsigned (*op_fn)(unsigned, unsigned);

__attribute__((noinline)) static unsigned op_add(unsigned a, unsigned b) { return a + b; }
__attribute__((noinline)) static unsigned op_mul(unsigned a, unsigned b) { return a * b; }
__attribute__((noinline)) static unsigned op_rot(unsigned a, unsigned b) { return (a << (b & 31)) | (a >> ((32 - b) & 31)); }

static op_fn volatile table[3] = {op_add, op_mul, op_rot};
unsigned out[9];

int main(void) {
  unsigned v = 0x1234567u;
  for (int i = 0; i < 9; ++i) {
    v = table[i % 3](v, (unsigned)i + 5);
    out[i] = v;
  }
  return 0;
}
