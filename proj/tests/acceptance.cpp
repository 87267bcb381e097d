#include <iostream>

#include "orbita/selftest.hpp"

int main() { return orbita::run_selftest(std::cout, std::nullopt); }
