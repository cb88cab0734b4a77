static volatile int v = 37;
int main(void) { return v + 5; }
