#include "sumclique/freiman.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sumclique/errors.hpp"
#include "sumclique/linalg.hpp"
#include "sumclique/parallel.hpp"
#include "sumclique/sumset.hpp"

namespace sumclique {

namespace {

constexpr std::uint64_t kMultisetBudget = 2'000'000;
constexpr std::size_t kOracleSizeCap = 8;
constexpr std::size_t kOrderSearchCap = 8;

enum class FieldKind { Rational, Binary, Prime };

FieldKind field_kind(const AmbientSpace& space) {
    switch (space.kind) {
        case AmbientKind::Integers: return FieldKind::Rational;
        case AmbientKind::BooleanSpace: return FieldKind::Binary;
        case AmbientKind::PrimeCyclic: return space.param == 2 ? FieldKind::Binary : FieldKind::Prime;
    }
    throw std::logic_error("unreachable");
}

void require_relation_order(int s) {
    if (s != 2 && s != 3 && s != 6)
        throw PreconditionError("relation order must be one of 2, 3, 6");
}

void require_distinct(const std::vector<long long>& elems) {
    std::vector<long long> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("elements must be distinct");
}

void check_multiset_budget(std::size_t k, int s) {
    if (binomial(k + static_cast<std::uint64_t>(s) - 1, static_cast<std::uint64_t>(s)) >
        BigInt(static_cast<unsigned long>(kMultisetBudget)))
        throw BudgetExceededError("relation enumeration would exceed the multiset budget");
}

// Advances a nondecreasing index tuple over [0, k) in lexicographic order.
bool advance_tuple(std::vector<std::size_t>& t, std::size_t k) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (t[i] + 1 < k) {
            const std::size_t v = t[i] + 1;
            for (std::size_t j = i; j < t.size(); ++j) t[j] = v;
            return true;
        }
    }
    return false;
}

long long tuple_sum(const AmbientSpace& space, const std::vector<long long>& elems,
                    const std::vector<std::size_t>& t) {
    long long acc = 0;
    switch (space.kind) {
        case AmbientKind::Integers:
            for (std::size_t i : t) acc += elems[i];
            return acc;
        case AmbientKind::BooleanSpace:
            for (std::size_t i : t) acc ^= elems[i];
            return acc;
        case AmbientKind::PrimeCyclic:
            for (std::size_t i : t) acc = (acc + elems[i]) % space.param;
            return acc;
    }
    throw std::logic_error("unreachable");
}

std::vector<std::uint8_t> tuple_counts(const std::vector<std::size_t>& t, std::size_t k) {
    std::vector<std::uint8_t> cnt(k, 0);
    for (std::size_t i : t) ++cnt[i];
    return cnt;
}

std::string serialize_key(int s, std::size_t k, const std::string& field,
                          const std::vector<std::string>& rows) {
    std::string out = "s=" + std::to_string(s) + ";k=" + std::to_string(k) + ";F=" + field;
    for (const std::string& r : rows) {
        out += '|';
        out += r;
    }
    return out;
}

std::string row_to_string(const std::vector<BigInt>& row) {
    std::string out;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ',';
        out += row[j].get_str();
    }
    return out;
}

std::uint64_t row_to_bits(const std::vector<BigInt>& row) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) w |= std::uint64_t{1} << j;
    return w;
}

std::string bits_to_string(std::uint64_t w, std::size_t k) {
    std::string out;
    for (std::size_t j = 0; j < k; ++j) {
        if (j) out += ',';
        out += (w >> j & 1) ? '1' : '0';
    }
    return out;
}

// Canonical key of the relation span after reordering the sequence by perm
// (position i of the new sequence takes position perm[i] of the old one).
// Satisfied relation vectors transform by the same index map, so the new span
// is the column-permuted old span, re-canonicalized.
std::string key_for_permuted(const RelationBasis& rb, const std::vector<std::size_t>& perm) {
    const std::size_t k = rb.k;
    std::vector<std::string> rows;
    switch (field_kind(rb.space)) {
        case FieldKind::Rational: {
            RrefQ acc(k);
            for (const auto& row : rb.rows) {
                std::vector<BigInt> v(k);
                for (std::size_t i = 0; i < k; ++i) v[i] = row[perm[i]];
                acc.insert(std::move(v));
            }
            for (const auto& row : acc.rows()) rows.push_back(row_to_string(row));
            break;
        }
        case FieldKind::Binary: {
            RrefF2 acc(k);
            for (const auto& row : rb.rows) {
                const std::uint64_t w = row_to_bits(row);
                std::uint64_t v = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if (w >> perm[i] & 1) v |= std::uint64_t{1} << i;
                acc.insert(v);
            }
            for (std::uint64_t w : acc.rows()) rows.push_back(bits_to_string(w, k));
            break;
        }
        case FieldKind::Prime: {
            RrefFp acc(k, rb.space.param);
            for (const auto& row : rb.rows) {
                std::vector<std::uint64_t> v(k);
                for (std::size_t i = 0; i < k; ++i) v[i] = row[perm[i]].get_ui();
                acc.insert(std::move(v));
            }
            for (const auto& row : acc.rows()) {
                std::string s;
                for (std::size_t j = 0; j < k; ++j) {
                    if (j) s += ',';
                    s += std::to_string(row[j]);
                }
                rows.push_back(std::move(s));
            }
            break;
        }
    }
    return serialize_key(rb.s, k, rb.space.field_id(), rows);
}

std::vector<std::size_t> identity_perm(std::size_t k) {
    std::vector<std::size_t> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = i;
    return p;
}

// Positions sorted by element value, ascending or descending.
std::vector<std::size_t> value_order(const OrderedSet& a, bool ascending) {
    std::vector<std::size_t> p = identity_perm(a.size());
    std::sort(p.begin(), p.end(), [&](std::size_t x, std::size_t y) {
        return ascending ? a.elems[x] < a.elems[y] : a.elems[x] > a.elems[y];
    });
    return p;
}

std::size_t integer_restricted_sumset_size(const std::vector<long long>& elems) {
    std::set<long long> sums;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) sums.insert(elems[i] + elems[j]);
    return sums.size();
}

}  // namespace

AmbientSpace AmbientSpace::integers() { return {AmbientKind::Integers, 0}; }

AmbientSpace AmbientSpace::boolean_space(std::uint32_t n) {
    if (n == 0 || n > 62) throw PreconditionError("boolean ambient dimension must lie in [1, 62]");
    return {AmbientKind::BooleanSpace, n};
}

AmbientSpace AmbientSpace::prime_cyclic(std::uint32_t modulus) {
    if (!is_prime(modulus)) throw PreconditionError("cyclic ambient modulus must be prime");
    if (modulus >> 31 != 0) throw PreconditionError("cyclic ambient modulus must be below 2^31");
    return {AmbientKind::PrimeCyclic, modulus};
}

std::string AmbientSpace::name() const {
    switch (kind) {
        case AmbientKind::Integers: return "Z";
        case AmbientKind::BooleanSpace: return "F_2^" + std::to_string(param);
        case AmbientKind::PrimeCyclic: return "Z_" + std::to_string(param);
    }
    throw std::logic_error("unreachable");
}

std::string AmbientSpace::field_id() const {
    switch (field_kind(*this)) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Binary: return "F2";
        case FieldKind::Prime: return "F" + std::to_string(param);
    }
    throw std::logic_error("unreachable");
}

OrderedSet make_ordered_set(const AmbientSpace& space, std::vector<long long> elems) {
    if (elems.empty()) throw PreconditionError("ordered set must be nonempty");
    for (long long e : elems) {
        switch (space.kind) {
            case AmbientKind::Integers:
                if (e > kMaxIntegerMagnitude || e < -kMaxIntegerMagnitude)
                    throw PreconditionError("integer element magnitude too large");
                break;
            case AmbientKind::BooleanSpace:
                if (e < 0 || e >> space.param != 0)
                    throw PreconditionError("element out of range for " + space.name());
                break;
            case AmbientKind::PrimeCyclic:
                if (e < 0 || e >= static_cast<long long>(space.param))
                    throw PreconditionError("element out of range for " + space.name());
                break;
        }
    }
    require_distinct(elems);
    return {space, std::move(elems)};
}

OrderedSet ordered_from_group(const GroupSet& a) {
    AmbientSpace space{AmbientKind::Integers, 0};
    if (a.group.is_boolean()) {
        space = AmbientSpace::boolean_space(a.group.dim == 0 ? 1 : a.group.dim);
    } else {
        space = AmbientSpace::prime_cyclic(a.group.order);
    }
    std::vector<long long> elems;
    for (Element e : a.elements()) elems.push_back(static_cast<long long>(e));
    return make_ordered_set(space, std::move(elems));
}

long long ambient_add(const AmbientSpace& space, long long a, long long b) {
    switch (space.kind) {
        case AmbientKind::Integers: return a + b;
        case AmbientKind::BooleanSpace: return a ^ b;
        case AmbientKind::PrimeCyclic: return (a + b) % space.param;
    }
    throw std::logic_error("unreachable");
}

RelationBasis relation_basis(const OrderedSet& sigma, int s) {
    require_relation_order(s);
    const std::size_t k = sigma.size();
    if (k < 2) throw PreconditionError("relation span needs at least two elements");
    require_distinct(sigma.elems);
    check_multiset_budget(k, s);

    RelationBasis rb;
    rb.s = s;
    rb.k = k;
    rb.space = sigma.space;

    // One pass over size-s index multisets, bucketed by element sum. The
    // differences against each bucket's first member span exactly the span of
    // all s-relations, and enumeration stops once the rank ceiling k-1 (every
    // relation is orthogonal to the all-ones vector) is reached.
    const std::size_t max_rank = k - 1;
    std::unordered_map<long long, std::vector<std::uint8_t>> reps;
    std::vector<std::size_t> t(static_cast<std::size_t>(s), 0);

    const FieldKind field = field_kind(sigma.space);
    RrefQ acc_q(k);
    RrefF2 acc_2(field == FieldKind::Binary ? k : 0);
    RrefFp acc_p(k, field == FieldKind::Prime ? sigma.space.param : 2);

    auto rank_of = [&]() -> std::size_t {
        switch (field) {
            case FieldKind::Rational: return acc_q.rank();
            case FieldKind::Binary: return acc_2.rank();
            case FieldKind::Prime: return acc_p.rank();
        }
        return 0;
    };

    bool more = true;
    while (more && rank_of() < max_rank) {
        const long long sum = tuple_sum(sigma.space, sigma.elems, t);
        std::vector<std::uint8_t> cnt = tuple_counts(t, k);
        auto [it, inserted] = reps.try_emplace(sum, cnt);
        if (!inserted) {
            const std::vector<std::uint8_t>& rep = it->second;
            switch (field) {
                case FieldKind::Rational: {
                    std::vector<BigInt> v(k);
                    for (std::size_t j = 0; j < k; ++j)
                        v[j] = static_cast<long>(cnt[j]) - static_cast<long>(rep[j]);
                    acc_q.insert(std::move(v));
                    break;
                }
                case FieldKind::Binary: {
                    std::uint64_t w = 0;
                    for (std::size_t j = 0; j < k; ++j)
                        if ((cnt[j] ^ rep[j]) & 1) w |= std::uint64_t{1} << j;
                    acc_2.insert(w);
                    break;
                }
                case FieldKind::Prime: {
                    const std::uint64_t p = sigma.space.param;
                    std::vector<std::uint64_t> v(k);
                    for (std::size_t j = 0; j < k; ++j)
                        v[j] = (cnt[j] + p - rep[j]) % p;
                    acc_p.insert(std::move(v));
                    break;
                }
            }
        }
        more = advance_tuple(t, k);
    }

    switch (field) {
        case FieldKind::Rational:
            rb.rows = acc_q.rows();
            break;
        case FieldKind::Binary:
            for (std::uint64_t w : acc_2.rows()) {
                std::vector<BigInt> row(k);
                for (std::size_t j = 0; j < k; ++j) row[j] = (w >> j & 1) ? 1 : 0;
                rb.rows.push_back(std::move(row));
            }
            break;
        case FieldKind::Prime:
            for (const auto& r : acc_p.rows()) {
                std::vector<BigInt> row(k);
                for (std::size_t j = 0; j < k; ++j)
                    row[j] = static_cast<unsigned long>(r[j]);
                rb.rows.push_back(std::move(row));
            }
            break;
    }
    return rb;
}

std::string canonical_class_key(const RelationBasis& rb) {
    std::vector<std::string> rows;
    for (const auto& row : rb.rows) rows.push_back(row_to_string(row));
    return serialize_key(rb.s, rb.k, rb.space.field_id(), rows);
}

std::string class_key_hex(const std::string& key) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 0; i < 16; ++i) out[15 - i] = digits[h >> (4 * i) & 0xf];
    return out;
}

std::string canonical_set_key(const OrderedSet& a, int s) {
    require_relation_order(s);
    const std::size_t k = a.size();
    if (k > kOrderSearchCap)
        throw PreconditionError("set-level keys search all orderings; size capped at 8");
    if (k == 1) return serialize_key(s, 1, a.space.field_id(), {});
    const RelationBasis rb = relation_basis(a, s);
    std::vector<std::size_t> perm = identity_perm(k);
    std::string best;
    do {
        std::string key = key_for_permuted(rb, perm);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool bijection_is_s_iso(const OrderedSet& a, const OrderedSet& b,
                        const std::vector<std::size_t>& pi, int s) {
    require_relation_order(s);
    const std::size_t k = a.size();
    if (b.size() != k || pi.size() != k) throw PreconditionError("bijection size mismatch");
    std::vector<bool> seen(k, false);
    for (std::size_t i : pi) {
        if (i >= k || seen[i]) throw PreconditionError("not a bijection");
        seen[i] = true;
    }
    check_multiset_budget(k, s);

    // The map is an s-isomorphism iff the partitions of size-s index multisets
    // by sum agree on both sides: equal sums map to equal sums (well-defined)
    // and distinct sums stay distinct (injective).
    std::unordered_map<long long, long long> image_sum;
    std::unordered_set<long long> used;
    std::vector<std::size_t> t(static_cast<std::size_t>(s), 0);
    std::vector<std::size_t> tb(static_cast<std::size_t>(s), 0);
    bool more = true;
    while (more) {
        const long long sa = tuple_sum(a.space, a.elems, t);
        for (std::size_t j = 0; j < t.size(); ++j) tb[j] = pi[t[j]];
        const long long sb = tuple_sum(b.space, b.elems, tb);
        auto [it, inserted] = image_sum.try_emplace(sa, sb);
        if (inserted) {
            if (!used.insert(sb).second) return false;  // collision: not injective
        } else if (it->second != sb) {
            return false;  // same source sum, different image sums
        }
        more = advance_tuple(t, k);
    }
    return true;
}

namespace {

IsoResult oracle_isomorphism(const OrderedSet& a, const OrderedSet& b, int s) {
    const std::size_t k = a.size();
    if (k > kOracleSizeCap)
        throw PreconditionError("definition oracle checks all bijections; size capped at 8");
    check_multiset_budget(k, s);

    // Precompute the multiset list and its partition by sum on the A side.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> t(static_cast<std::size_t>(s), 0);
    bool more = true;
    while (more) {
        tuples.push_back(t);
        more = advance_tuple(t, k);
    }
    std::map<long long, std::vector<std::size_t>> by_sum;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        by_sum[tuple_sum(a.space, a.elems, tuples[i])].push_back(i);
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [sum, idx] : by_sum) groups.push_back(std::move(idx));

    std::vector<std::size_t> pi = identity_perm(k);
    std::vector<std::size_t> tb(static_cast<std::size_t>(s), 0);
    std::vector<long long> group_sums;
    do {
        bool ok = true;
        group_sums.clear();
        for (const auto& group : groups) {
            long long expect = 0;
            for (std::size_t gi = 0; gi < group.size() && ok; ++gi) {
                const auto& tup = tuples[group[gi]];
                for (std::size_t j = 0; j < tup.size(); ++j) tb[j] = pi[tup[j]];
                const long long sb = tuple_sum(b.space, b.elems, tb);
                if (gi == 0)
                    expect = sb;
                else if (sb != expect)
                    ok = false;
            }
            if (!ok) break;
            group_sums.push_back(expect);
        }
        if (ok) {
            std::sort(group_sums.begin(), group_sums.end());
            ok = std::adjacent_find(group_sums.begin(), group_sums.end()) == group_sums.end();
        }
        if (ok) return {IsoVerdict::Yes, pi};
    } while (std::next_permutation(pi.begin(), pi.end()));
    return {IsoVerdict::No, {}};
}

}  // namespace

IsoResult are_s_isomorphic(const OrderedSet& a, const OrderedSet& b, int s, IsoMethod method) {
    require_relation_order(s);
    if (a.size() != b.size()) return {IsoVerdict::No, {}};
    const std::size_t k = a.size();
    if (k == 1) return {IsoVerdict::Yes, {0}};

    if (method == IsoMethod::DefinitionOracle) return oracle_isomorphism(a, b, s);

    if (a.space.field_id() != b.space.field_id())
        throw PreconditionError(
            "relation-span comparison needs a common scalar field; use the definition oracle");

    const RelationBasis rb_a = relation_basis(a, s);
    const RelationBasis rb_b = relation_basis(b, s);
    // Span rank is invariant under reordering, so a mismatch settles it.
    if (rb_a.rank() != rb_b.rank()) return {IsoVerdict::No, {}};

    const std::string key_a = canonical_class_key(rb_a);
    if (k <= kOrderSearchCap) {
        std::vector<std::size_t> perm = identity_perm(k);
        do {
            if (key_for_permuted(rb_b, perm) == key_a) return {IsoVerdict::Yes, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
        return {IsoVerdict::No, {}};
    }

    // Too large to search every ordering: try value-sorted orderings on both
    // sides and report Unknown if none of them match.
    const std::vector<std::vector<std::size_t>> orders_a = {identity_perm(k), value_order(a, true)};
    const std::vector<std::vector<std::size_t>> orders_b = {identity_perm(k), value_order(b, true),
                                                            value_order(b, false)};
    for (const auto& pa : orders_a) {
        const std::string ka = key_for_permuted(rb_a, pa);
        for (const auto& pb : orders_b) {
            if (key_for_permuted(rb_b, pb) != ka) continue;
            std::vector<std::size_t> witness(k);
            for (std::size_t i = 0; i < k; ++i) witness[pa[i]] = pb[i];
            return {IsoVerdict::Yes, witness};
        }
    }
    return {IsoVerdict::Unknown, {}};
}

HomSpace hom_space(const OrderedSet& a) {
    const std::size_t k = a.size();
    HomSpace hs;
    hs.set = a;
    if (k == 1) {
        hs.dim = 1;
        hs.basis = {{BigInt(1)}};
        hs.freiman_dim = 0;
        return hs;
    }
    const RelationBasis rb = relation_basis(a, 2);
    switch (field_kind(a.space)) {
        case FieldKind::Rational: {
            RrefQ acc(k);
            for (const auto& row : rb.rows) acc.insert(row);
            hs.basis = acc.nullspace_basis();
            break;
        }
        case FieldKind::Binary: {
            RrefF2 acc(k);
            for (const auto& row : rb.rows) acc.insert(row_to_bits(row));
            for (std::uint64_t w : acc.nullspace_basis()) {
                std::vector<BigInt> v(k);
                for (std::size_t j = 0; j < k; ++j) v[j] = (w >> j & 1) ? 1 : 0;
                hs.basis.push_back(std::move(v));
            }
            break;
        }
        case FieldKind::Prime: {
            RrefFp acc(k, a.space.param);
            for (const auto& row : rb.rows) {
                std::vector<std::uint64_t> v(k);
                for (std::size_t j = 0; j < k; ++j) v[j] = row[j].get_ui();
                acc.insert(std::move(v));
            }
            for (const auto& nv : acc.nullspace_basis()) {
                std::vector<BigInt> v(k);
                for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<unsigned long>(nv[j]);
                hs.basis.push_back(std::move(v));
            }
            break;
        }
    }
    hs.dim = hs.basis.size();
    if (hs.dim == 0 || hs.dim != k - rb.rank())
        throw std::logic_error("homomorphism space dimension mismatch");
    hs.freiman_dim = hs.dim - 1;
    return hs;
}

SpanningSubset spanning_subset(const OrderedSet& a) {
    const HomSpace hs = hom_space(a);
    const std::size_t k = a.size();
    const std::size_t d = hs.dim;
    const FieldKind field = field_kind(a.space);
    const std::uint64_t p = field == FieldKind::Binary ? 2 : a.space.param;

    // Greedily take the first d linearly independent columns of the basis
    // matrix; their positions determine every homomorphism.
    SpanningSubset out;
    if (field == FieldKind::Rational) {
        RrefQ sel(d);
        for (std::size_t j = 0; j < k && out.indices.size() < d; ++j) {
            std::vector<BigInt> col(d);
            for (std::size_t i = 0; i < d; ++i) col[i] = hs.basis[i][j];
            if (sel.insert(std::move(col))) out.indices.push_back(j);
        }
        std::vector<std::vector<BigRat>> cols(d, std::vector<BigRat>(d));
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t i = 0; i < d; ++i) cols[c][i] = BigRat(hs.basis[i][out.indices[c]]);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<BigRat> target(d);
            for (std::size_t i = 0; i < d; ++i) target[i] = BigRat(hs.basis[i][j]);
            std::vector<BigRat> lam = solve_square_q(cols, target);
            for (BigRat& x : lam) x.canonicalize();
            out.coefficients.push_back(std::move(lam));
        }
        return out;
    }

    RrefFp sel(d, p);
    for (std::size_t j = 0; j < k && out.indices.size() < d; ++j) {
        std::vector<std::uint64_t> col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = hs.basis[i][j].get_ui();
        if (sel.insert(std::move(col))) out.indices.push_back(j);
    }
    std::vector<std::vector<std::uint64_t>> cols(d, std::vector<std::uint64_t>(d));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i) cols[c][i] = hs.basis[i][out.indices[c]].get_ui();
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::uint64_t> target(d);
        for (std::size_t i = 0; i < d; ++i) target[i] = hs.basis[i][j].get_ui();
        std::vector<std::uint64_t> lam = solve_square_fp(cols, target, p);
        std::vector<BigRat> row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = BigRat(static_cast<unsigned long>(lam[i]));
        out.coefficients.push_back(std::move(row));
    }
    return out;
}

OrderedSet unfold(const GroupSet& a) {
    if (!a.group.is_cyclic()) throw PreconditionError("unfolding is defined for cyclic groups");
    if (a.card() == 0) throw PreconditionError("unfolding an empty set");
    const long long n = a.group.order;
    std::vector<long long> vals;
    for (Element e : a.elements()) vals.push_back(e == 0 ? n : static_cast<long long>(e));
    std::sort(vals.begin(), vals.end());
    OrderedSet out = make_ordered_set(AmbientSpace::integers(), std::move(vals));
    // Each residue has at most two integer representatives among the pairwise
    // sums, so the unfolded restricted sumset is at most twice the original.
    const std::size_t m_group = restricted_sumset(a).card();
    if (integer_restricted_sumset_size(out.elems) > 2 * m_group)
        throw std::logic_error("unfolded sumset exceeded twice the folded size");
    return out;
}

std::optional<RectifyWitness> rectify(const GroupSet& a) {
    if (!a.group.is_cyclic()) throw PreconditionError("rectification is defined for cyclic groups");
    const std::uint64_t n = a.group.order;
    if (!is_prime(n)) throw PreconditionError("rectification requires a prime modulus");
    if (n > 10'000) throw PreconditionError("rectification modulus capped at 10^4");
    const std::uint64_t half = n / 2;
    const std::vector<Element> elems = a.elements();
    const std::size_t k = elems.size();
    if (k == 0) return RectifyWitness{1, 0};
    if (k > half + 1) return std::nullopt;  // more elements than the window holds

    OrderedSet source{{AmbientKind::Integers, 0}, {}};
    if (k >= 2) {
        source = ordered_from_group(a);
    }
    const std::vector<std::size_t> ident = identity_perm(k);

    std::vector<std::uint64_t> image(k);
    auto accept = [&](std::uint64_t mu) -> bool {
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t v = (image[i] + mu) % n;
            if (v > half) return false;
        }
        if (k < 2) return true;
        std::vector<long long> unfolded(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t v = (image[i] + mu) % n;
            unfolded[i] = v == 0 ? static_cast<long long>(n) : static_cast<long long>(v);
        }
        const OrderedSet target{AmbientSpace::integers(), unfolded};
        return bijection_is_s_iso(source, target, ident, 2);
    };

    for (std::uint64_t lambda = 1; lambda < n; ++lambda) {
        for (std::size_t i = 0; i < k; ++i) image[i] = lambda * elems[i] % n;
        // Heuristic shift first: align the smallest element to zero.
        const std::uint64_t mu0 = (n - lambda * elems[0] % n) % n;
        if (accept(mu0))
            return RectifyWitness{static_cast<Element>(lambda), static_cast<Element>(mu0)};
        for (std::uint64_t mu = 0; mu < n; ++mu) {
            if (mu == mu0) continue;
            if (accept(mu))
                return RectifyWitness{static_cast<Element>(lambda), static_cast<Element>(mu)};
        }
    }
    return std::nullopt;
}

FreimanInequalityReport check_freiman_inequality(const OrderedSet& s) {
    if (s.space.kind != AmbientKind::Integers)
        throw PreconditionError("inequality checker expects an integer set");
    const std::size_t k = s.size();
    if (k < 2) throw PreconditionError("inequality checker needs at least two elements");
    FreimanInequalityReport rep;
    rep.k = k;
    rep.m = integer_restricted_sumset_size(s.elems);
    rep.r = hom_space(s).freiman_dim;
    const std::int64_t r = static_cast<std::int64_t>(rep.r);
    const std::int64_t twice_bound = r * (2 * static_cast<std::int64_t>(k) - r - 1);
    rep.lower_bound = Fraction(twice_bound, 2);
    rep.holds = 2 * static_cast<std::int64_t>(rep.m) >= twice_bound;
    return rep;
}

Mod2DimensionReport check_mod2_dimension_bound(const GroupSet& a) {
    if (!a.group.is_boolean())
        throw PreconditionError("dimension bound checker expects a boolean-group set");
    const std::size_t k = a.card();
    if (k < 3) throw PreconditionError("dimension bound checker needs at least three elements");
    Mod2DimensionReport rep;
    rep.k = k;
    rep.m = restricted_sumset(a).card();
    rep.r = hom_space(ordered_from_group(a)).freiman_dim;
    const double kk = static_cast<double>(k);
    rep.bound_log2 = 4.0 * static_cast<double>(rep.m) * std::log2(kk) / kk;
    rep.bound_ln = 4.0 * static_cast<double>(rep.m) * std::log(kk) / kk;
    rep.holds_log2 = static_cast<double>(rep.r + 1) <= rep.bound_log2;
    rep.holds_ln = static_cast<double>(rep.r + 1) <= rep.bound_ln;
    return rep;
}

std::vector<ClassEntry> classify_sets(const std::vector<OrderedSet>& family, int s) {
    std::vector<std::string> keys(family.size());
    parallel_for_index(family.size(),
                       [&](std::size_t i) { keys[i] = canonical_set_key(family[i], s); });
    std::map<std::string, std::pair<std::size_t, std::uint64_t>> merged;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto [it, inserted] = merged.try_emplace(keys[i], i, 0);
        ++it->second.second;
    }
    std::vector<ClassEntry> out;
    for (const auto& [key, val] : merged)
        out.push_back({key, class_key_hex(key), family[val.first], val.second});
    return out;
}

}  // namespace sumclique
