#pragma once

#include <ostream>

namespace sumclique::acceptance {

// Quick runs the sub-minute battery (criteria 1-9 and 12); Full adds the
// long-running statistical and determinism batteries (10, 11, 13, 14).
enum class Level { Quick, Full };

// Runs the acceptance battery, printing one [PASS]/[FAIL] line per criterion
// (skipped criteria print [SKIP]). Returns the number of failures.
int run_suite(Level level, std::ostream& out);

}  // namespace sumclique::acceptance
