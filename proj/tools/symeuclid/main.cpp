#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    symeuclid::cli::Config config;
    try {
        config = symeuclid::cli::config_from_environment();
    } catch (const symeuclid::Error& e) {
        std::cerr << "usage error: SYMEUCLID_MAX_SWEEP: " << e.what() << '\n';
        return symeuclid::cli::exit_usage;
    }
    return symeuclid::cli::run(args, std::cout, std::cerr, config);
}
