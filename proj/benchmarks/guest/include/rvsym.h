/* Guest-side hypercall interface. Guests are freestanding RV32IM programs;
 * every request to the engine goes through ECALL with the number in a7. */
#ifndef RVSYM_H
#define RVSYM_H

#define RVSYM_SYS_EXIT 1
#define RVSYM_SYS_MAKE_SYMBOLIC 2
#define RVSYM_SYS_PUTCHAR 3

static inline long rvsym_hypercall(long n, long arg0, long arg1) {
  register long a7 __asm__("a7") = n;
  register long a0 __asm__("a0") = arg0;
  register long a1 __asm__("a1") = arg1;
  __asm__ volatile("ecall" : "+r"(a0) : "r"(a7), "r"(a1) : "memory");
  return a0;
}

/* Marks len bytes at p as symbolic input. Under concrete execution the
 * bytes keep their current values. */
static inline void rvsym_make_symbolic(void *p, unsigned long len) {
  rvsym_hypercall(RVSYM_SYS_MAKE_SYMBOLIC, (long)p, (long)len);
}

static inline void rvsym_putchar(int c) { rvsym_hypercall(RVSYM_SYS_PUTCHAR, c, 0); }

static inline void rvsym_puts(const char *s) {
  while (*s) rvsym_putchar(*s++);
}

__attribute__((noreturn)) static inline void rvsym_exit(int code) {
  rvsym_hypercall(RVSYM_SYS_EXIT, code, 0);
  __builtin_unreachable();
}

#endif
