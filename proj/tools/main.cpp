#include <iostream>
#include <string>
#include <vector>

#include "tzdyn/cli.hpp"

int main(int argc, char** argv)
{
    return tzdyn::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
