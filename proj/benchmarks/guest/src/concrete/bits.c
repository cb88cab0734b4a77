static volatile unsigned words[6] = {0, 1, 0x80000000u, 0xdeadbeefu, 0xffffffffu, 0x00f0f0f0u};
unsigned pop[6], clz[6], rev[6];

int main(void) {
  for (int i = 0; i < 6; ++i) {
    unsigned x = words[i], c = 0, z = 0, r = 0;
    for (unsigned y = x; y; y &= y - 1) ++c;
    for (int b = 31; b >= 0 && !((x >> b) & 1); --b) ++z;
    for (int b = 0; b < 32; ++b) r |= ((x >> b) & 1u) << (31 - b);
    pop[i] = c;
    clz[i] = z;
    rev[i] = r;
  }
  return 0;
}
