// Acceptance suite: one line per exit criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "pprod/acceptance.hpp"

int main(int argc, char** argv) {
    pprod::acceptance::Options opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
    const auto results = pprod::acceptance::run_all(opts, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
