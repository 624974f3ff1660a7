#include <iostream>
int main() { std::cout << "weylkit\n"; return 0; }
