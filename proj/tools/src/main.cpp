#include "cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
    try {
        return koszulkit::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "koszulkit: internal error: " << e.what() << '\n';
        return koszulkit::cli::kUsage;
    }
}
