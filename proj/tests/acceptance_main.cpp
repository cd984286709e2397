// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.

#include <iostream>

#include "wit/reproduce.hpp"

int main() {
    auto results = wit::repro::run_all(std::cout);
    const bool ok = wit::repro::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}
