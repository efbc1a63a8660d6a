#include <iostream>

int main() {
  std::cout << "latreg\n";
  return 0;
}
