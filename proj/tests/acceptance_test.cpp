// Standalone acceptance runner: prints one pass/fail line per criterion and
// exits nonzero on any failure. Pass --quick to skip the long batteries.

#include <cstring>
#include <iostream>

#include "acceptance_suite.hpp"

int main(int argc, char** argv) {
    auto level = sumclique::acceptance::Level::Full;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) level = sumclique::acceptance::Level::Quick;
    int failures = sumclique::acceptance::run_suite(level, std::cout);
    return failures == 0 ? 0 : 1;
}
