static const int table[16] = {-40, -7, -1, 0, 3, 9, 12, 20, 33, 41, 50, 51, 70, 88, 90, 101};
static volatile int keys[6] = {-40, 101, 12, 13, -1000, 51};
int found[6];

int main(void) {
  for (int k = 0; k < 6; ++k) {
    int lo = 0, hi = 15, at = -1;
    while (lo <= hi) {
      int mid = (lo + hi) >> 1;
      if (table[mid] == keys[k]) {
        at = mid;
        break;
      }
      if (table[mid] < keys[k]) lo = mid + 1;
      else hi = mid - 1;
    }
    found[k] = at;
  }
  return 0;
}
