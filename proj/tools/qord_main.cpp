#include <iostream>

#include "qord/cli.hpp"

int main(int argc, char** argv) { return qord::run(argc, argv, std::cout, std::cerr); }
