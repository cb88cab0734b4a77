struct rec {
  char tag;
  short id;
  int value;
  unsigned char raw[5];
};

static volatile int seed = 7;
struct rec recs[4];
struct rec copy[4];

int main(void) {
  for (int i = 0; i < 4; ++i) {
    recs[i].tag = (char)('a' + i);
    recs[i].id = (short)(-i * 1000 - seed);
    recs[i].value = seed * (i + 1) * 1111;
    for (int j = 0; j < 5; ++j) recs[i].raw[j] = (unsigned char)(i * 16 + j + seed);
  }
  for (int i = 0; i < 4; ++i) copy[3 - i] = recs[i];
  return copy[0].id & 0xff;
}
