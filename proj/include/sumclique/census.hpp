#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sumclique/exactmath.hpp"
#include "sumclique/group.hpp"

namespace sumclique {

// Exact census of k-subsets by restricted-sumset size, the expectation of the
// k-clique count of a uniformly random Cayley sum graph, and log-domain
// evaluation of the analytic counting bounds.

struct CensusTable {
    GroupSpec group;
    std::uint32_t k = 0;
    std::map<std::uint32_t, BigInt> counts;  // m -> #subsets, nonzero entries only
    BigInt total = 0;                        // equals C(N, k)
};

inline constexpr std::uint64_t kDefaultCensusBudget = 1'000'000'000;

// Exact counts by exhaustive enumeration (lexicographic, incremental sumset
// maintenance). With symmetry_reduction the enumeration only evaluates
// affine-orbit representatives (x -> ax+b with a invertible; invertible
// affine maps for boolean groups) and multiplies by orbit sizes; the result
// is identical and is validated against direct mode in tests. k > N yields an
// empty table. Throws BudgetExceededError when C(N,k) exceeds the budget.
CensusTable census(const GroupSpec& g, std::uint32_t k, bool symmetry_reduction = false,
                   std::uint64_t budget = kDefaultCensusBudget);

struct ExpectationReport {
    std::uint32_t k = 0;
    BigRat expectation;   // sum over m of counts[m] * 2^-m, exact
    BigRat markov_bound;  // min(1, expectation)
};

ExpectationReport expected_cliques(const CensusTable& table);

// "m,count" rows, ascending m, with a header line.
std::string census_csv(const CensusTable& table);

// Base-2 logarithms of the four subset-counting bounds. Cyclic groups use
//   bb1: (1 + 4m/k) log2 N + k log2(2em/k) + k^(31/32) log2 e   [m <= k^(31/30)/2]
//   bb2: (1 + 4m/k) log2 N + 4k log2 k
// and boolean groups (N = 2^n) use
//   bb1a: (4m log2 k / k) n + k log2(em/k) + k^(31/32) log2 e   [m <= k^(31/30)]
//   bb2a: (4m log2 k / k) n + 4k log2 k.
// Inapplicable bounds are left empty.
struct CountBoundReport {
    GroupSpec::Kind kind = GroupSpec::Kind::Cyclic;
    std::uint64_t n_value = 0;
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::optional<double> log2_bb1;
    std::optional<double> log2_bb2;
    std::optional<double> log2_bb1a;
    std::optional<double> log2_bb2a;
};

CountBoundReport evaluate_count_bounds(GroupSpec::Kind kind, std::uint64_t n_value,
                                       std::uint64_t k, std::uint64_t m);

// Log-domain evaluation of the two-piece tail sum over m in [7k, k(k-1)/2],
// split at floor(k^(31/30)/2), with k = floor(20 log2 N) for cyclic groups
// and k = floor(11 log2 N log2 log2 N) for boolean ones. The vanishing error
// terms in the per-m exponents are evaluated at zero; the two scalar
// inequalities driving the argument are checked over an integer grid
// C in [7, 10^6]. passes <=> log2_tail <= -2 log2 N. Requires N >= 2^10.
struct TailSumReport {
    GroupSpec::Kind kind = GroupSpec::Kind::Cyclic;
    std::uint64_t n_value = 0;
    std::uint64_t k_used = 0;
    double log2_tail = 0.0;
    bool passes = false;
    double scalar_max_2e = 0.0;  // max of log2(2eC)/C - 1, must be <= -0.2499
    double scalar_max_e = 0.0;   // max of log2(eC)/C - 1, must be <= -0.39
    bool scalar_2e_ok = false;
    bool scalar_e_ok = false;
};

TailSumReport tail_sum_bound(GroupSpec::Kind kind, std::uint64_t n_value);

}  // namespace sumclique
