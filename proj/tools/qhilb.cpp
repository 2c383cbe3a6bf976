#include <iostream>
#include <string>
#include <vector>

#include <qhilb/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qhilb::cli::run(args, std::cout, std::cerr);
}
