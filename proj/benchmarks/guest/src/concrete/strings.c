static volatile char msg[] = "the quick brown fox";
char buf[32];
int len;

int main(void) {
  while (msg[len]) ++len;
  for (int i = 0; i < len; ++i) {
    char c = msg[len - 1 - i];
    buf[i] = (c >= 'a' && c <= 'z') ? (char)(c - 32) : c;
  }
  return len;
}
