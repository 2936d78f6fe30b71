#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sumclique/exactmath.hpp"
#include "sumclique/group.hpp"

namespace sumclique {

// Linear subspaces of F_2^n: counting, canonical enumeration, intersection
// pair counts, and the moment analysis of the statistic counting subspaces
// whose nonzero part lies inside a random set.

// k linearly independent n-bit row vectors in reduced echelon form: row i's
// lowest set bit is its pivot, pivots strictly increase with i, and no row
// has a set bit at another row's pivot. Unique per subspace.
struct SubspaceBasis {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> rows;
};

inline constexpr std::uint64_t kDefaultSubspaceBudget = 100'000'000;

// Number of k-dimensional subspaces of F_2^n (Gaussian binomial).
BigInt count_subspaces(std::uint32_t n, std::uint32_t k);

// Calls fn once per k-dimensional subspace in a fixed order (pivot profiles
// in lexicographic order, then free entries in integer order). Requires
// n <= 32; throws BudgetExceededError when the subspace count exceeds budget.
void for_each_subspace(std::uint32_t n, std::uint32_t k,
                       const std::function<void(const SubspaceBasis&)>& fn,
                       std::uint64_t budget = kDefaultSubspaceBudget);

std::vector<SubspaceBasis> enumerate_subspaces(std::uint32_t n, std::uint32_t k,
                                               std::uint64_t budget = kDefaultSubspaceBudget);

enum class PairCountMode { Formula, BruteForce };

// Ordered pairs (V, W) of k-dimensional subspaces with dim(V cap W) = l.
// Formula mode evaluates the exact product expression; brute-force mode
// enumerates all pairs and measures intersections by rank (budget applies
// to the number of pairs).
BigInt intersection_pair_count(std::uint32_t n, std::uint32_t k, std::uint32_t l,
                               PairCountMode mode = PairCountMode::Formula,
                               std::uint64_t budget = kDefaultSubspaceBudget);

// Number of k-dimensional subspaces H with H \ {0} contained in A (linear
// subspaces only, cosets are not counted). A positive value certifies a
// clique of size 2^k in the Cayley sum graph of A, since H +. H = H \ {0}.
BigInt subspace_clique_statistic(const GroupSet& a, std::uint32_t k,
                                 std::uint64_t budget = kDefaultSubspaceBudget);

// Subspace dimension targeted by the random-set clique argument in ambient
// dimension n: floor(log2 n + log2 log2 n - 1), clamped at zero.
std::uint32_t clique_target_dimension(std::uint32_t n);

struct MomentReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    BigInt subspace_count;               // M
    BigRat mean_exact;                   // M * 2^-(2^k - 1)
    BigRat mean_lower_bound;             // 2^(nk - k^2 - 2^k)
    BigRat variance_bound;               // 8k * 2^((2k-1)n - 2^(k+1))
    BigRat chebyshev_bound;              // 8k * 2^(2k^2 - n) = variance_bound / mean_lower_bound^2
    std::uint32_t target_dimension = 0;  // clique_target_dimension(n)
    bool concentrated = false;           // chebyshev_bound < 1
};

// Exact moment data for the subspace statistic over a density-1/2 random
// set. Requires 1 <= k <= n and k <= 60 (exponents must fit a machine word).
MomentReport moment_report(std::uint32_t n, std::uint32_t k);

}  // namespace sumclique
