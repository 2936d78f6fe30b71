#pragma once

#include <cstdint>

#include "sumclique/exactmath.hpp"
#include "sumclique/group.hpp"

namespace sumclique {

// X +' X = { x + y : x, y in X, x != y } (restricted sumset over the group).
GroupSet restricted_sumset(const GroupSet& x);

// X + Y = { x + y : x in X, y in Y }.
GroupSet sumset(const GroupSet& x, const GroupSet& y);

// kX - lX with k,l >= 0, k + l >= 1 (iterated signed sumset; 1X - 0X = X).
GroupSet signed_iterated_sum(const GroupSet& x, unsigned k, unsigned l);

// M(B): ordered quadruples (b1,b2,b3,b4) with b1 != b2, b3 != b4 and
// b1 + b2 = b3 + b4. Computed from the representation histogram in O(|B|^2).
std::uint64_t summing_quadruple_count(const GroupSet& b);

struct DoublingStats {
    std::uint64_t k = 0;        // |X|
    std::uint64_t m = 0;        // |X +' X|
    Fraction ratio{0, 1};       // m / k
};

// Requires |X| >= 1.
DoublingStats doubling_stats(const GroupSet& x);

}  // namespace sumclique
