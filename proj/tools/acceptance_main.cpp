// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// With arguments, runs only the listed criterion numbers.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "altchar/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int k = 1; k < argc; ++k) {
        try {
            ids.push_back(std::stoi(argv[k]));
        } catch (const std::exception&) {
            std::cerr << "usage: altchar_acceptance [criterion ...]\n";
            return 2;
        }
    }
    if (ids.empty()) {
        for (int id = 1; id <= altchar::kCriterionCount; ++id) ids.push_back(id);
    }
    int failures = 0;
    try {
        for (const auto& r : altchar::run_acceptance(ids, &std::cout)) failures += r.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
