int arr[12] = {9, -3, 27, 0, 14, 14, -100, 55, 2, 8, 1, -1};

int main(void) {
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11 - i; ++j)
      if (arr[j] > arr[j + 1]) {
        int t = arr[j];
        arr[j] = arr[j + 1];
        arr[j + 1] = t;
      }
  return 0;
}
