static volatile unsigned char bytes[16] = {0x80, 0x7f, 0xff, 0x01, 0x34, 0x12, 0xcd, 0xab,
                                           0x00, 0x80, 0xff, 0x7f, 0x11, 0x22, 0x33, 0x44};
int out[24];
unsigned short halves[4];
unsigned char scratch[8];

int main(void) {
  volatile signed char *sb = (volatile signed char *)bytes;
  volatile short *sh = (volatile short *)bytes;
  volatile unsigned short *uh = (volatile unsigned short *)bytes;
  volatile unsigned *w = (volatile unsigned *)bytes;
  for (int i = 0; i < 4; ++i) {
    out[i] = sb[i];
    out[4 + i] = bytes[i];
    out[8 + i] = sh[i];
    out[12 + i] = uh[i + 4];
    out[16 + i] = (int)w[i];
  }
  for (int i = 0; i < 4; ++i) halves[i] = (unsigned short)(w[i] >> 8);
  for (int i = 0; i < 8; ++i) scratch[i] = (unsigned char)(w[i / 4] >> (i * 3));
  out[20] = *(volatile unsigned *)scratch;
  return 0;
}
