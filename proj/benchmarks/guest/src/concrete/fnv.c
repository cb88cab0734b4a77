static volatile char text[] = "concolic execution of machine code";
unsigned hashes[4];

int main(void) {
  for (int round = 0; round < 4; ++round) {
    unsigned h = 2166136261u + (unsigned)round;
    for (volatile char *p = text; *p; ++p) {
      h ^= (unsigned char)*p;
      h *= 16777619u;
    }
    hashes[round] = h;
  }
  return 0;
}
