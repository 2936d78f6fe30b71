#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "sumclique/cayley.hpp"
#include "sumclique/exactmath.hpp"
#include "sumclique/group.hpp"

namespace sumclique {

// Seeded randomness: reproducible subset sampling, Monte Carlo clique-number
// distributions, and the two randomized constructions (popular-sum
// refinement, small-doubling witness).

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

// Per-trial engine: a fixed avalanche mix of (master_seed, trial_index)
// seeds the generator, so results depend only on the seed pair, never on
// thread layout or call order.
std::mt19937_64 make_rng(const SeedSpec& seed);

// Uniform integer in [0, bound), bound >= 1, by rejection (no modulo bias).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Each element included independently with probability density (exact
// rational Bernoulli; no floating point involved).
GroupSet random_subset(const GroupSpec& g, const Fraction& density, const SeedSpec& seed);

enum class BaselineModel { CayleySum, Binomial };

struct TrialOutcome {
    std::uint64_t trial = 0;
    std::uint32_t omega = 0;
    bool exact = true;
    std::uint64_t nodes = 0;
};

struct DistributionReport {
    GroupSpec group;
    BaselineModel baseline = BaselineModel::CayleySum;
    std::uint64_t trials = 0;
    std::vector<TrialOutcome> per_trial;               // by trial index
    std::map<std::uint32_t, std::uint64_t> histogram;  // omega -> count, exact trials only
    std::vector<std::uint64_t> budget_hits;            // trials whose search hit the node budget
    std::uint32_t median_omega = 0;                    // lower median over exact trials, 0 if none
};

// Clique numbers of `trials` independent random graphs: either Cayley sum
// graphs of density-1/2 random subsets, or Erdos-Renyi G(N, 1/2) edges drawn
// directly. Trials are independently seeded by index and may run in parallel.
DistributionReport clique_number_distribution(const GroupSpec& g, std::uint64_t trials,
                                              std::uint64_t master_seed,
                                              std::uint64_t node_budget = kDefaultNodeBudget,
                                              BaselineModel baseline = BaselineModel::CayleySum,
                                              unsigned override_threads = 0);

// Seed-independent data for the popular-sum refinement of a fixed set A:
// ordered-pair popularity of every sum, the unpopularity-graph degrees, and
// the anchor element (minimum unpopular degree, ties to the smallest value).
struct RefinementContext {
    GroupSet a;
    std::uint64_t k = 0;                    // |A|
    std::uint64_t m = 0;                    // |A +. A|
    std::uint64_t popularity_threshold = 0;  // Q = floor(k^(1/5))
    double pick_density = 0.0;               // q = k^(-1/15)
    Element a_star = 0;
    std::uint64_t a_star_unpopular_degree = 0;
    std::vector<std::uint32_t> popularity;   // per sum value: ordered pairs (w,z), w != z
};

RefinementContext make_refinement_context(const GroupSet& a);

struct RefinementResult {
    Element a_star = 0;
    GroupSet a0;               // the sampled X
    GroupSet a1;               // A minus the uncovered part Z
    std::uint32_t retries = 0;  // draws consumed
    bool met_target = false;    // size score reached the slacked target
    double size_score = 0.0;    // |X| + k^(11/15) |Z| of the returned draw
    double size_target = 0.0;   // 8 k^(-1/15) m  (factor-2 slack on the mean)
};

// Draws X inside A at density k^(-1/15) until |X| + k^(11/15)|Z| meets the
// slacked target or the cap is reached (the best draw is returned, flagged).
// Z collects the a whose anchored sum a*+a is missed by X +. X, so
// a* + A1 is contained in A0 +. A0 by construction, on every draw.
RefinementResult popular_sum_refinement(const RefinementContext& ctx, const SeedSpec& seed,
                                        std::uint32_t retry_cap = 100);
RefinementResult popular_sum_refinement(const GroupSet& a, const SeedSpec& seed,
                                        std::uint32_t retry_cap = 100);

struct WitnessResult {
    GroupSet b;
    std::uint32_t retries = 0;     // draws consumed
    std::uint64_t achieved_m = 0;  // |B +. B|
    double p = 0.0;                // sampling density 3 eps^-1 sqrt(ln(6/eps)/2k)
    double size_bound = 0.0;       // (3 ln(1/eps)/eps) sqrt(k), the enforced cap
    double size_bound_log2 = 0.0;  // same expression under log base 2, reported only
};

// Rejection-samples B inside A at density p until both guarantees hold:
// |B| <= (3 ln(1/eps)/eps) sqrt(k) and |B +. B| >= (1-eps)|A| (checked in
// exact arithmetic). Natural logarithms throughout; the base-2 reading of
// the size cap is reported alongside. Requires eps in (0, 1/4] and k large
// enough that p <= 1; throws BudgetExceededError when the cap runs out.
WitnessResult small_doubling_witness(const GroupSet& a, const Fraction& epsilon,
                                     const SeedSpec& seed, std::uint32_t retry_cap = 50);

inline constexpr std::uint64_t kDefaultSevenDoublingMinCard = std::uint64_t(1) << 20;

// Witness at eps = 1/9, padded with the smallest unused elements of A until
// |C| lands in [k/8, 8k/63]; then |C +. C| >= 7|C| is asserted. The card
// floor keeps the witness size bound below k/8.
GroupSet seven_doubling_subset(const GroupSet& a, const SeedSpec& seed,
                               std::uint64_t min_card = kDefaultSevenDoublingMinCard,
                               std::uint32_t retry_cap = 50);

}  // namespace sumclique
