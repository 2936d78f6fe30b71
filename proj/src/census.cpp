#include "sumclique/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "sumclique/parallel.hpp"

namespace sumclique {

namespace {

// Depth-first enumeration of k-subsets in lexicographic order. The restricted
// sumset is maintained incrementally: cnt_[s] is the number of unordered pairs
// of distinct chosen elements summing to s, live_ the number of nonzero cells.
class DirectEnumerator {
  public:
    DirectEnumerator(const GroupSpec& g, std::uint32_t k)
        : g_(g), k_(k), cnt_(g.order, 0), slot_(k < 2 ? 1 : k * (k - 1) / 2 + 1, 0) {
        path_.reserve(k);
    }

    // Accumulates all k-subsets whose least element is `first`.
    void run(Element first) {
        push(first);
        dfs(first + 1);
        pop();
    }

    const std::vector<std::uint64_t>& counts() const { return slot_; }

  private:
    void push(Element x) {
        for (Element y : path_) {
            Element s = add_raw(g_, x, y);
            if (cnt_[s]++ == 0) ++live_;
        }
        path_.push_back(x);
    }

    void pop() {
        Element x = path_.back();
        path_.pop_back();
        for (Element y : path_) {
            Element s = add_raw(g_, x, y);
            if (--cnt_[s] == 0) --live_;
        }
    }

    void dfs(std::uint64_t next) {
        if (path_.size() == k_) {
            ++slot_[live_];
            return;
        }
        std::uint64_t need = k_ - path_.size();
        for (std::uint64_t x = next; x + need <= g_.order; ++x) {
            push(static_cast<Element>(x));
            dfs(x + 1);
            pop();
        }
    }

    GroupSpec g_;
    std::uint32_t k_;
    std::vector<std::uint16_t> cnt_;
    std::vector<Element> path_;
    std::uint32_t live_ = 0;
    std::vector<std::uint64_t> slot_;
};

// Element permutations generating the invertible affine maps of the group:
// x -> x+1 and x -> ux (u a unit) for cyclic groups; coordinate translations
// and transvections for boolean ones. Restricted sumset size is invariant
// under all of them, since pair sums are mapped bijectively.
std::vector<std::vector<Element>> affine_generators(const GroupSpec& g) {
    std::uint32_t n = g.order;
    std::vector<std::vector<Element>> gens;
    auto from_map = [&](auto&& f) {
        std::vector<Element> tab(n);
        for (std::uint32_t x = 0; x < n; ++x) tab[x] = static_cast<Element>(f(x));
        gens.push_back(std::move(tab));
    };
    if (g.is_cyclic()) {
        if (n > 1) from_map([&](std::uint32_t x) { return (x + 1) % n; });
        for (std::uint32_t u = 2; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            from_map([&](std::uint32_t x) { return std::uint32_t((std::uint64_t(u) * x) % n); });
        }
    } else {
        for (std::uint32_t i = 0; i < g.dim; ++i)
            from_map([&](std::uint32_t x) { return x ^ (1u << i); });
        for (std::uint32_t i = 0; i < g.dim; ++i)
            for (std::uint32_t j = 0; j < g.dim; ++j) {
                if (i == j) continue;
                from_map([&](std::uint32_t x) { return x ^ (((x >> j) & 1u) << i); });
            }
    }
    return gens;
}

std::uint64_t apply_generator(const std::vector<Element>& tab, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask != 0) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t(1) << tab[static_cast<std::size_t>(b)];
    }
    return out;
}

std::uint32_t sumset_size_of_mask(const GroupSpec& g, std::uint64_t mask) {
    std::vector<Element> elems;
    while (mask != 0) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        elems.push_back(static_cast<Element>(b));
    }
    std::vector<Element> sums;
    sums.reserve(elems.size() * (elems.size() - 1) / 2 + 1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            sums.push_back(add_raw(g, elems[i], elems[j]));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return static_cast<std::uint32_t>(sums.size());
}

// Enumerates k-subsets as bitmasks and counts only orbit representatives
// (numerically least mask of the affine orbit), weighted by orbit size. The
// orbit walk aborts as soon as a smaller mask is discovered.
class OrbitEnumerator {
  public:
    OrbitEnumerator(const GroupSpec& g, std::uint32_t k, const std::vector<std::vector<Element>>& gens)
        : g_(g), k_(k), gens_(gens), slot_(k < 2 ? 1 : k * (k - 1) / 2 + 1, 0) {}

    void run(Element first) {
        dfs(std::uint64_t(1) << first, first + 1, 1);
    }

    const std::vector<std::uint64_t>& counts() const { return slot_; }

  private:
    void dfs(std::uint64_t mask, std::uint32_t next, std::uint32_t chosen) {
        if (chosen == k_) {
            visit(mask);
            return;
        }
        std::uint32_t need = k_ - chosen;
        for (std::uint32_t x = next; x + need <= g_.order; ++x)
            dfs(mask | (std::uint64_t(1) << x), x + 1, chosen + 1);
    }

    void visit(std::uint64_t mask) {
        seen_.clear();
        seen_.insert(mask);
        frontier_.assign(1, mask);
        while (!frontier_.empty()) {
            std::uint64_t cur = frontier_.back();
            frontier_.pop_back();
            for (const auto& tab : gens_) {
                std::uint64_t img = apply_generator(tab, cur);
                if (img < mask) return;  // a smaller orbit member exists
                if (seen_.insert(img).second) frontier_.push_back(img);
            }
        }
        slot_[sumset_size_of_mask(g_, mask)] += seen_.size();
    }

    GroupSpec g_;
    std::uint32_t k_;
    const std::vector<std::vector<Element>>& gens_;
    std::vector<std::uint64_t> slot_;
    std::unordered_set<std::uint64_t> seen_;
    std::vector<std::uint64_t> frontier_;
};

double log2_e() { return std::log2(std::exp(1.0)); }

// Accumulates log2(sum of 2^t) over added exponents t.
struct Log2Sum {
    double acc = -std::numeric_limits<double>::infinity();

    void add(double t) {
        if (std::isinf(t) && t < 0) return;
        if (std::isinf(acc) && acc < 0) {
            acc = t;
            return;
        }
        double hi = std::max(acc, t);
        double lo = std::min(acc, t);
        acc = hi + std::log2(1.0 + std::exp2(lo - hi));
    }
};

std::uint32_t boolean_log2(std::uint64_t n_value) {
    if (n_value == 0 || (n_value & (n_value - 1)) != 0)
        throw PreconditionError("boolean group order must be a power of two, got " + std::to_string(n_value));
    return static_cast<std::uint32_t>(std::countr_zero(n_value));
}

}  // namespace

CensusTable census(const GroupSpec& g, std::uint32_t k, bool symmetry_reduction, std::uint64_t budget) {
    CensusTable table;
    table.group = g;
    table.k = k;
    if (k > g.order) return table;  // no k-subsets at all

    BigInt total = binomial(g.order, k);
    if (total > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceededError("census of " + total.get_str() + " subsets exceeds budget " +
                                  std::to_string(budget));
    table.total = total;

    if (k == 0) {
        table.counts[0] = 1;
        return table;
    }
    if (symmetry_reduction && g.order > 64)
        throw PreconditionError("symmetry-reduced census supports orders up to 64");

    // Partition work by the least chosen element, strided over a fixed number
    // of blocks; merged counts are sums and do not depend on the schedule.
    std::uint32_t nfirst = g.order - k + 1;
    std::size_t nblocks = std::min<std::size_t>(nfirst, std::size_t(8) * worker_count());
    std::vector<std::vector<std::uint64_t>> block_counts(nblocks);
    auto gens = symmetry_reduction ? affine_generators(g) : std::vector<std::vector<Element>>{};
    parallel_for_index(nblocks, [&](std::size_t b) {
        if (symmetry_reduction) {
            OrbitEnumerator e(g, k, gens);
            for (std::uint32_t first = static_cast<std::uint32_t>(b); first < nfirst;
                 first += static_cast<std::uint32_t>(nblocks))
                e.run(static_cast<Element>(first));
            block_counts[b] = e.counts();
        } else {
            DirectEnumerator e(g, k);
            for (std::uint32_t first = static_cast<std::uint32_t>(b); first < nfirst;
                 first += static_cast<std::uint32_t>(nblocks))
                e.run(static_cast<Element>(first));
            block_counts[b] = e.counts();
        }
    });

    std::vector<std::uint64_t> merged(k < 2 ? 1 : k * (k - 1) / 2 + 1, 0);
    for (const auto& bc : block_counts)
        for (std::size_t m = 0; m < bc.size(); ++m) merged[m] += bc[m];
    for (std::size_t m = 0; m < merged.size(); ++m)
        if (merged[m] != 0) table.counts[static_cast<std::uint32_t>(m)] = BigInt(static_cast<unsigned long>(merged[m]));
    return table;
}

ExpectationReport expected_cliques(const CensusTable& table) {
    ExpectationReport rep;
    rep.k = table.k;
    BigRat acc(0);
    for (const auto& [m, count] : table.counts) acc += BigRat(count) * pow2_rat(-static_cast<long>(m));
    rep.expectation = acc;
    rep.markov_bound = acc < BigRat(1) ? acc : BigRat(1);
    return rep;
}

std::string census_csv(const CensusTable& table) {
    std::ostringstream out;
    out << "m,count\n";
    for (const auto& [m, count] : table.counts) out << m << "," << count.get_str() << "\n";
    return out.str();
}

CountBoundReport evaluate_count_bounds(GroupSpec::Kind kind, std::uint64_t n_value, std::uint64_t k,
                                       std::uint64_t m) {
    if (k < 2) throw PreconditionError("count bounds require k >= 2");
    if (m + 1 < k) throw PreconditionError("count bounds require m >= k - 1");
    if (n_value < 2) throw PreconditionError("count bounds require group order >= 2");

    CountBoundReport rep;
    rep.kind = kind;
    rep.n_value = n_value;
    rep.k = k;
    rep.m = m;

    double kd = static_cast<double>(k);
    double md = static_cast<double>(m);
    double log2k = std::log2(kd);
    double refined_cap = std::pow(kd, 31.0 / 30.0);
    double small_power = std::pow(kd, 31.0 / 32.0);

    if (kind == GroupSpec::Kind::Cyclic) {
        double log2n = std::log2(static_cast<double>(n_value));
        double translate_cost = (1.0 + 4.0 * md / kd) * log2n;
        rep.log2_bb2 = translate_cost + 4.0 * kd * log2k;
        if (md <= refined_cap / 2.0)
            rep.log2_bb1 = translate_cost + kd * std::log2(2.0 * std::exp(1.0) * md / kd) +
                           small_power * log2_e();
    } else {
        double dim = static_cast<double>(boolean_log2(n_value));
        double subspace_cost = (4.0 * md * log2k / kd) * dim;
        rep.log2_bb2a = subspace_cost + 4.0 * kd * log2k;
        if (md <= refined_cap)
            rep.log2_bb1a = subspace_cost + kd * std::log2(std::exp(1.0) * md / kd) +
                            small_power * log2_e();
    }
    return rep;
}

TailSumReport tail_sum_bound(GroupSpec::Kind kind, std::uint64_t n_value) {
    if (n_value < 1024) throw PreconditionError("tail sum evaluation requires order >= 2^10");

    TailSumReport rep;
    rep.kind = kind;
    rep.n_value = n_value;

    double log2n;
    std::uint64_t k;
    if (kind == GroupSpec::Kind::Cyclic) {
        log2n = std::log2(static_cast<double>(n_value));
        k = static_cast<std::uint64_t>(20.0 * log2n);
    } else {
        log2n = static_cast<double>(boolean_log2(n_value));
        k = static_cast<std::uint64_t>(11.0 * log2n * std::log2(log2n));
    }
    rep.k_used = k;

    double kd = static_cast<double>(k);
    double log2k = std::log2(kd);
    std::uint64_t m_lo = 7 * k;
    std::uint64_t m_hi = k * (k - 1) / 2;
    std::uint64_t split = static_cast<std::uint64_t>(std::pow(kd, 31.0 / 30.0) / 2.0);

    Log2Sum tail;
    if (kind == GroupSpec::Kind::Cyclic) {
        for (std::uint64_t m = m_lo; m <= std::min(split, m_hi); ++m) {
            double md = static_cast<double>(m);
            tail.add(md * ((4.0 / kd + 1.0 / md) * log2n +
                           (kd / md) * std::log2(2.0 * std::exp(1.0) * md / kd) - 1.0));
        }
        for (std::uint64_t m = std::max(m_lo, split); m <= m_hi; ++m)
            tail.add(static_cast<double>(m) * (4.0 * log2n / kd - 1.0));
    } else {
        for (std::uint64_t m = m_lo; m <= std::min(split, m_hi); ++m) {
            double md = static_cast<double>(m);
            tail.add(md * (4.0 * log2k * log2n / kd +
                           (kd / md) * std::log2(std::exp(1.0) * md / kd) - 1.0));
        }
        for (std::uint64_t m = std::max(m_lo, split); m <= m_hi; ++m)
            tail.add(static_cast<double>(m) * (4.0 * log2k * log2n / kd - 1.0));
    }
    rep.log2_tail = tail.acc;
    rep.passes = rep.log2_tail <= -2.0 * log2n;

    double max_2e = -std::numeric_limits<double>::infinity();
    double max_e = -std::numeric_limits<double>::infinity();
    for (std::uint64_t c = 7; c <= 1'000'000; ++c) {
        double cd = static_cast<double>(c);
        max_2e = std::max(max_2e, std::log2(2.0 * std::exp(1.0) * cd) / cd - 1.0);
        max_e = std::max(max_e, std::log2(std::exp(1.0) * cd) / cd - 1.0);
    }
    rep.scalar_max_2e = max_2e;
    rep.scalar_max_e = max_e;
    rep.scalar_2e_ok = max_2e <= -0.2499;
    rep.scalar_e_ok = max_e <= -0.39;
    return rep;
}

}  // namespace sumclique
