unsigned out[8];

int main(void) {
  unsigned x;
  __asm__ volatile("lui %0, 0xfffff" : "=r"(x));
  out[0] = x;
  __asm__ volatile("lui %0, 0x80000" : "=r"(x));
  out[1] = x;
  __asm__ volatile("auipc %0, 0" : "=r"(x));
  out[2] = x;
  __asm__ volatile("auipc %0, 0x12345" : "=r"(x));
  out[3] = x;
  __asm__ volatile("li %0, 0x7ffff800" : "=r"(x));
  out[4] = x;
  __asm__ volatile("li %0, -2048" : "=r"(x));
  out[5] = x;
  __asm__ volatile("slti %0, %1, -1" : "=r"(x) : "r"(out[5]));
  out[6] = x;
  __asm__ volatile("sltiu %0, %1, -1" : "=r"(x) : "r"(out[0]));
  out[7] = x;
  return 0;
}
