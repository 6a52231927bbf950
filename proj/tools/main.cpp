// main.cpp — mirrorcoh command-line tool

#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
    return mirrorcoh::cli::main_entry(argc, argv, std::cout, std::cerr);
}
