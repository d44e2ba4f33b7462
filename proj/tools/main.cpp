#include <iostream>
#include <string>
#include <vector>

#include "triplecover/cli_app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return triplecover::cli::run(args, std::cout, std::cerr);
}
