static volatile unsigned char data[] = "123456789";
unsigned crc;

int main(void) {
  unsigned c = 0xffffffffu;
  for (int i = 0; i < 9; ++i) {
    c ^= data[i];
    for (int k = 0; k < 8; ++k) c = (c >> 1) ^ (0xedb88320u & -(c & 1));
  }
  crc = ~c;
  return crc == 0xcbf43926u ? 0 : 1;
}
