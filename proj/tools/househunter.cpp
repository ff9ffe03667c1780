#include <iostream>

int main() {
    std::cout << "househunter (work in progress)\n";
    return 0;
}
