#include "sumclique/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sumclique/parallel.hpp"
#include "sumclique/sumset.hpp"

namespace sumclique {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
double canonical_double(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

BigRat to_bigrat(const Fraction& f) {
    BigRat r(BigInt(static_cast<long>(f.num)), BigInt(static_cast<long>(f.den)));
    r.canonicalize();
    return r;
}

}  // namespace

std::mt19937_64 make_rng(const SeedSpec& seed) {
    std::uint64_t state = seed.master_seed;
    std::uint64_t h = splitmix64(state);
    state = h ^ (seed.trial_index + 0x9E3779B97F4A7C15ull);
    return std::mt19937_64(splitmix64(state));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("uniform draw from an empty range");
    if (bound == 1) return 0;
    std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

GroupSet random_subset(const GroupSpec& g, const Fraction& density, const SeedSpec& seed) {
    if (density.num < 0 || density.num > density.den)
        throw PreconditionError("density must lie in [0, 1]");
    GroupSet s(g);
    if (density.num == 0) return s;
    if (density.num == density.den) return full_set(g);
    std::mt19937_64 rng = make_rng(seed);
    std::uint64_t num = static_cast<std::uint64_t>(density.num);
    std::uint64_t den = static_cast<std::uint64_t>(density.den);
    for (Element e = 0; e < g.order; ++e)
        if (uniform_below(rng, den) < num) s.bits.set(e);
    return s;
}

DistributionReport clique_number_distribution(const GroupSpec& g, std::uint64_t trials,
                                              std::uint64_t master_seed, std::uint64_t node_budget,
                                              BaselineModel baseline, unsigned override_threads) {
    if (trials < 1) throw PreconditionError("at least one trial is required");
    DistributionReport rep;
    rep.group = g;
    rep.baseline = baseline;
    rep.trials = trials;
    rep.per_trial.resize(trials);
    parallel_for_index(
        trials,
        [&](std::size_t t) {
            SeedSpec seed{master_seed, t};
            CliqueResult res;
            if (baseline == BaselineModel::CayleySum) {
                GroupSet a = random_subset(g, Fraction(1, 2), seed);
                res = max_clique(build_cayley_sum_graph(a), node_budget);
            } else {
                std::mt19937_64 rng = make_rng(seed);
                AdjacencyMatrix adj(g.order);
                for (std::uint32_t i = 0; i < g.order; ++i)
                    for (std::uint32_t j = i + 1; j < g.order; ++j)
                        if (uniform_below(rng, 2) == 1) adj.set_edge(i, j);
                res = max_clique(adj, node_budget);
            }
            rep.per_trial[t] = TrialOutcome{t, res.omega, res.exact, res.nodes};
        },
        override_threads);

    std::vector<std::uint32_t> exact_omegas;
    for (const TrialOutcome& out : rep.per_trial) {
        if (out.exact) {
            ++rep.histogram[out.omega];
            exact_omegas.push_back(out.omega);
        } else {
            rep.budget_hits.push_back(out.trial);
        }
    }
    std::sort(exact_omegas.begin(), exact_omegas.end());
    rep.median_omega = exact_omegas.empty() ? 0 : exact_omegas[(exact_omegas.size() - 1) / 2];
    return rep;
}

RefinementContext make_refinement_context(const GroupSet& a) {
    RefinementContext ctx;
    ctx.a = a;
    ctx.k = a.card();
    if (ctx.k < 2) throw PreconditionError("refinement requires at least two elements");
    std::vector<Element> elems = a.elements();
    const GroupSpec& g = a.group;

    ctx.popularity.assign(g.order, 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            ctx.popularity[add_raw(g, elems[i], elems[j])] += 2;  // both orderings
    ctx.m = 0;
    for (std::uint32_t c : ctx.popularity)
        if (c > 0) ++ctx.m;

    ctx.popularity_threshold = static_cast<std::uint64_t>(std::pow(double(ctx.k), 0.2));
    ctx.pick_density = std::pow(double(ctx.k), -1.0 / 15.0);

    // anchor: minimum degree in the graph joining x,y when x+y is unpopular
    // (fewer than Q ordered pairs realize it); ties go to the smaller value.
    std::uint64_t best_deg = 0;
    bool have = false;
    for (Element x : elems) {
        std::uint64_t deg = 0;
        for (Element y : elems) {
            if (y == x) continue;
            if (ctx.popularity[add_raw(g, x, y)] < ctx.popularity_threshold) ++deg;
        }
        if (!have || deg < best_deg) {
            have = true;
            best_deg = deg;
            ctx.a_star = x;
        }
    }
    ctx.a_star_unpopular_degree = best_deg;
    return ctx;
}

RefinementResult popular_sum_refinement(const RefinementContext& ctx, const SeedSpec& seed,
                                        std::uint32_t retry_cap) {
    if (retry_cap < 1) throw PreconditionError("retry cap must be positive");
    const GroupSpec& g = ctx.a.group;
    std::vector<Element> elems = ctx.a.elements();
    std::mt19937_64 rng = make_rng(seed);

    RefinementResult res;
    res.a_star = ctx.a_star;
    res.size_target = 8.0 * std::pow(double(ctx.k), -1.0 / 15.0) * double(ctx.m);
    double scale = std::pow(double(ctx.k), 11.0 / 15.0);

    GroupSet best_x;
    std::vector<Element> best_z;
    double best_score = 0;
    bool have_best = false;

    for (std::uint32_t draw = 1; draw <= retry_cap; ++draw) {
        GroupSet x(g);
        for (Element e : elems)
            if (canonical_double(rng) < ctx.pick_density) x.bits.set(e);
        GroupSet xx = restricted_sumset(x);
        std::vector<Element> z;
        for (Element e : elems)
            if (!xx.contains(add(g, ctx.a_star, e))) z.push_back(e);
        double score = double(x.card()) + scale * double(z.size());
        if (!have_best || score < best_score) {
            have_best = true;
            best_score = score;
            best_x = x;
            best_z = z;
        }
        res.retries = draw;
        if (score <= res.size_target) break;
    }

    res.a0 = best_x;
    res.a1 = ctx.a;
    for (Element e : best_z) res.a1.bits.reset(e);
    res.size_score = best_score;
    res.met_target = best_score <= res.size_target;
    return res;
}

RefinementResult popular_sum_refinement(const GroupSet& a, const SeedSpec& seed,
                                        std::uint32_t retry_cap) {
    return popular_sum_refinement(make_refinement_context(a), seed, retry_cap);
}

WitnessResult small_doubling_witness(const GroupSet& a, const Fraction& epsilon,
                                     const SeedSpec& seed, std::uint32_t retry_cap) {
    if (epsilon.num <= 0 || 4 * epsilon.num > epsilon.den)
        throw PreconditionError("epsilon must lie in (0, 1/4]");
    std::uint64_t k = a.card();
    if (k == 0) throw PreconditionError("witness sampling requires a nonempty set");

    double eps = epsilon.to_double();
    double p = (3.0 / eps) * std::sqrt(std::log(6.0 / eps) / (2.0 * double(k)));
    if (p > 1.0)
        throw PreconditionError("sampling density exceeds 1; the set is too small for this epsilon");

    WitnessResult res;
    res.p = p;
    res.size_bound = (3.0 * std::log(1.0 / eps) / eps) * std::sqrt(double(k));
    res.size_bound_log2 = (3.0 * std::log2(1.0 / eps) / eps) * std::sqrt(double(k));

    BigRat required = (BigRat(1) - to_bigrat(epsilon)) * BigRat(static_cast<unsigned long>(k));
    std::vector<Element> elems = a.elements();
    std::mt19937_64 rng = make_rng(seed);
    for (std::uint32_t draw = 1; draw <= retry_cap; ++draw) {
        GroupSet b(a.group);
        for (Element e : elems)
            if (canonical_double(rng) < p) b.bits.set(e);
        std::uint64_t mb = restricted_sumset(b).card();
        if (double(b.card()) <= res.size_bound &&
            BigRat(static_cast<unsigned long>(mb)) >= required) {
            res.b = b;
            res.retries = draw;
            res.achieved_m = mb;
            return res;
        }
    }
    throw BudgetExceededError("witness sampling did not succeed within " +
                              std::to_string(retry_cap) + " draws");
}

GroupSet seven_doubling_subset(const GroupSet& a, const SeedSpec& seed, std::uint64_t min_card,
                               std::uint32_t retry_cap) {
    std::uint64_t k = a.card();
    if (k < min_card)
        throw PreconditionError("set of " + std::to_string(k) +
                                " elements is below the configured floor " + std::to_string(min_card));

    WitnessResult w = small_doubling_witness(a, Fraction(1, 9), seed, retry_cap);
    std::uint64_t lo = (k + 7) / 8;       // ceil(k/8)
    std::uint64_t hi = (8 * k) / 63;      // floor(8k/63)
    if (lo > hi) throw PreconditionError("doubling window is empty at this cardinality");
    if (w.b.card() > hi)
        throw PreconditionError("witness exceeds the doubling window; the set is too small");

    std::uint64_t target = std::max<std::uint64_t>(w.b.card(), lo);
    GroupSet c = w.b;
    std::uint64_t have = c.card();
    for (Element e : a.elements()) {
        if (have >= target) break;
        if (!c.contains(e)) {
            c.bits.set(e);
            ++have;
        }
    }
    if (restricted_sumset(c).card() < 7 * target)
        throw std::logic_error("seven-fold doubling postcondition failed");
    return c;
}

}  // namespace sumclique
