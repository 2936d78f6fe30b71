#include "sumclique/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "sumclique/parallel.hpp"

namespace sumclique {

namespace {

BigInt pow2_int(std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

void require_dims(std::uint32_t n, std::uint32_t k) {
    if (k > n)
        throw PreconditionError("subspace dimension " + std::to_string(k) +
                                " exceeds ambient dimension " + std::to_string(n));
}

std::vector<std::vector<std::uint32_t>> pivot_profiles(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> profiles;
    if (k == 0) {
        profiles.emplace_back();
        return profiles;
    }
    std::vector<std::uint32_t> p(k);
    for (std::uint32_t i = 0; i < k; ++i) p[i] = i;
    while (true) {
        profiles.push_back(p);
        std::uint32_t i = k;
        while (i > 0 && p[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++p[i - 1];
        for (std::uint32_t j = i; j < k; ++j) p[j] = p[j - 1] + 1;
    }
    return profiles;
}

// Visits every echelon-canonical basis with the given pivot columns.
template <class Fn>
void scan_profile(std::uint32_t n, std::uint32_t k, const std::vector<std::uint32_t>& pivots, Fn&& fn) {
    std::uint32_t pivot_mask = 0;
    for (std::uint32_t p : pivots) pivot_mask |= std::uint32_t(1) << p;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_bits;  // (row, column)
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t q = pivots[i] + 1; q < n; ++q)
            if (((pivot_mask >> q) & 1u) == 0) free_bits.emplace_back(i, q);

    SubspaceBasis basis;
    basis.n = n;
    basis.k = k;
    basis.rows.assign(k, 0);
    std::uint64_t combos = std::uint64_t(1) << free_bits.size();
    for (std::uint64_t assign = 0; assign < combos; ++assign) {
        for (std::uint32_t i = 0; i < k; ++i) basis.rows[i] = std::uint32_t(1) << pivots[i];
        for (std::size_t b = 0; b < free_bits.size(); ++b)
            if ((assign >> b) & 1u) basis.rows[free_bits[b].first] |= std::uint32_t(1) << free_bits[b].second;
        fn(basis);
    }
}

std::uint32_t rank_f2(const std::vector<std::uint32_t>& rows) {
    std::uint32_t by_top_bit[32] = {0};
    std::uint32_t rank = 0;
    for (std::uint32_t v : rows) {
        while (v != 0) {
            std::uint32_t b = 31u - std::uint32_t(std::countl_zero(v));
            if (by_top_bit[b] == 0) {
                by_top_bit[b] = v;
                ++rank;
                break;
            }
            v ^= by_top_bit[b];
        }
    }
    return rank;
}

void check_enumerable(std::uint32_t n, std::uint32_t k, const BigInt& total, std::uint64_t budget) {
    if (n > 32) throw PreconditionError("subspace enumeration supports ambient dimension <= 32");
    if (total > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceededError("enumeration of " + total.get_str() + " subspaces exceeds budget " +
                                  std::to_string(budget));
}

}  // namespace

BigInt count_subspaces(std::uint32_t n, std::uint32_t k) {
    require_dims(n, k);
    BigInt num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num *= pow2_int(n) - pow2_int(i);
        den *= pow2_int(k) - pow2_int(i);
    }
    BigInt m = num / den;
    if (m * den != num) throw std::logic_error("subspace count product is not divisible");
    if (m < pow2_int(std::uint64_t(k) * (n - k)))
        throw std::logic_error("subspace count fell below its lower bound");
    return m;
}

void for_each_subspace(std::uint32_t n, std::uint32_t k,
                       const std::function<void(const SubspaceBasis&)>& fn, std::uint64_t budget) {
    require_dims(n, k);
    check_enumerable(n, k, count_subspaces(n, k), budget);
    for (const auto& pivots : pivot_profiles(n, k)) scan_profile(n, k, pivots, fn);
}

std::vector<SubspaceBasis> enumerate_subspaces(std::uint32_t n, std::uint32_t k, std::uint64_t budget) {
    std::vector<SubspaceBasis> out;
    for_each_subspace(n, k, [&](const SubspaceBasis& b) { out.push_back(b); }, budget);
    return out;
}

BigInt intersection_pair_count(std::uint32_t n, std::uint32_t k, std::uint32_t l, PairCountMode mode,
                               std::uint64_t budget) {
    require_dims(n, k);
    if (l > k) throw PreconditionError("intersection dimension exceeds subspace dimension");

    if (mode == PairCountMode::Formula) {
        BigInt num = 1;
        for (std::uint32_t i = 0; i + l < 2 * k; ++i) num *= pow2_int(n) - pow2_int(i);
        if (num <= 0) return 0;  // a factor 2^n - 2^i with i >= n: no such pairs
        BigInt den = 1;
        for (std::uint32_t j = l; j < k; ++j) {
            BigInt f = pow2_int(k) - pow2_int(j);
            den *= f * f;
        }
        for (std::uint32_t i = 0; i < l; ++i) den *= pow2_int(l) - pow2_int(i);
        BigInt count = num / den;
        if (count * den != num) throw std::logic_error("pair count product is not divisible");
        if (count > pow2_int(std::uint64_t(n) * (2 * k - l)))
            throw std::logic_error("pair count exceeds its crude upper bound");
        return count;
    }

    BigInt m = count_subspaces(n, k);
    check_enumerable(n, k, m * m, budget);
    auto bases = enumerate_subspaces(n, k, budget);
    std::uint64_t pairs = 0;
    std::vector<std::uint32_t> stacked;
    for (const auto& v : bases)
        for (const auto& w : bases) {
            stacked.assign(v.rows.begin(), v.rows.end());
            stacked.insert(stacked.end(), w.rows.begin(), w.rows.end());
            // dim(V cap W) = dim V + dim W - dim(V + W)
            if (2 * k - rank_f2(stacked) == l) ++pairs;
        }
    return BigInt(static_cast<unsigned long>(pairs));
}

BigInt subspace_clique_statistic(const GroupSet& a, std::uint32_t k, std::uint64_t budget) {
    if (!a.group.is_boolean()) throw PreconditionError("subspace statistic requires a boolean group");
    std::uint32_t n = a.group.dim;
    require_dims(n, k);
    check_enumerable(n, k, count_subspaces(n, k), budget);

    auto profiles = pivot_profiles(n, k);
    std::vector<std::uint64_t> slot(profiles.size(), 0);
    parallel_for_index(profiles.size(), [&](std::size_t i) {
        std::uint64_t hits = 0;
        scan_profile(n, k, profiles[i], [&](const SubspaceBasis& b) {
            // walk the nonzero vectors in Gray-code order
            std::uint32_t v = 0;
            for (std::uint64_t idx = 1; idx < (std::uint64_t(1) << k); ++idx) {
                v ^= b.rows[static_cast<std::size_t>(std::countr_zero(idx))];
                if (!a.bits.test(v)) return;
            }
            ++hits;
        });
        slot[i] = hits;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : slot) total += h;
    return BigInt(static_cast<unsigned long>(total));
}

std::uint32_t clique_target_dimension(std::uint32_t n) {
    if (n < 2) return 0;
    double v = std::log2(double(n)) + std::log2(std::log2(double(n))) - 1.0;
    return v < 0 ? 0 : static_cast<std::uint32_t>(v);
}

MomentReport moment_report(std::uint32_t n, std::uint32_t k) {
    if (k < 1 || k > n) throw PreconditionError("moment report requires 1 <= k <= n");
    if (k > 60) throw PreconditionError("moment report supports k <= 60");

    MomentReport rep;
    rep.n = n;
    rep.k = k;
    rep.subspace_count = count_subspaces(n, k);
    long nk = long(n) * k;
    long two_k = long(1) << k;
    rep.mean_exact = BigRat(rep.subspace_count) * pow2_rat(-(two_k - 1));
    rep.mean_lower_bound = pow2_rat(nk - long(k) * k - two_k);
    rep.variance_bound = BigRat(8 * k) * pow2_rat((2 * long(k) - 1) * n - 2 * two_k);
    rep.chebyshev_bound = BigRat(8 * k) * pow2_rat(2 * long(k) * k - long(n));
    if (rep.chebyshev_bound != rep.variance_bound / (rep.mean_lower_bound * rep.mean_lower_bound))
        throw std::logic_error("moment report internal identity failed");
    rep.target_dimension = clique_target_dimension(n);
    rep.concentrated = rep.chebyshev_bound < 1;
    return rep;
}

}  // namespace sumclique
