#include <string>
#include <vector>

#include "barviz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return barviz::cli_dispatch(args);
}
