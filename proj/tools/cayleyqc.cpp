#include <iostream>

#include "cayleyqc/cli.hpp"

int main(int argc, char** argv) { return cayleyqc::cli::run(argc, argv, std::cout, std::cerr); }
