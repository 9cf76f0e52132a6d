#include <iostream>

#include "conj_app/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gmc::app::run(args, std::cout, std::cerr);
}
