#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumclique/exactmath.hpp"
#include "sumclique/group.hpp"

namespace sumclique {

// Additive-structure machinery: s-relation spans, isomorphism testing and
// classification, homomorphism spaces and the associated dimension invariant,
// unfolding Z_N into the integers, rectification, and inequality checkers.
//
// An s-relation of a sequence (a_1,...,a_k) is an integer vector c = x_I - x_J
// for two size-s index multisets I, J with equal element sums; the span of all
// satisfied s-relations (over the ambient scalar field) determines the
// sequence up to s-isomorphism, which is what the keys below exploit.

enum class AmbientKind { Integers, BooleanSpace, PrimeCyclic };

// Where an ordered set lives, together with its scalar field:
// Integers -> Q, BooleanSpace(n) -> F_2, PrimeCyclic(N) -> F_N (N prime).
struct AmbientSpace {
    AmbientKind kind;
    std::uint32_t param;  // n for BooleanSpace, N for PrimeCyclic, 0 otherwise

    static AmbientSpace integers();
    static AmbientSpace boolean_space(std::uint32_t n);
    static AmbientSpace prime_cyclic(std::uint32_t modulus);

    bool operator==(const AmbientSpace& other) const = default;
    std::string name() const;
    // Identifies the scalar field ("Q", "F2", or "F<p>"); PrimeCyclic(2) and
    // BooleanSpace coincide. Relation-span keys are only comparable when the
    // fields match.
    std::string field_id() const;
};

// A sequence of distinct ambient elements. Element encodings: arbitrary
// int64 values for Integers (capped so six-fold sums stay in range), bitmasks
// below 2^n for BooleanSpace, residues in [0, N) for PrimeCyclic.
struct OrderedSet {
    AmbientSpace space;
    std::vector<long long> elems;

    std::size_t size() const { return elems.size(); }
};

inline constexpr long long kMaxIntegerMagnitude = 1LL << 55;

OrderedSet make_ordered_set(const AmbientSpace& space, std::vector<long long> elems);
// Ascending-order view of a group set. Cyclic groups require a prime order
// (the ambient needs a scalar field); boolean groups always convert.
OrderedSet ordered_from_group(const GroupSet& a);
long long ambient_add(const AmbientSpace& space, long long a, long long b);

// Canonical basis (reduced echelon, unique per span) of the span of all
// s-relations satisfied by a sequence. Entries are primitive integers over Q
// and least residues over F_2 / F_p.
struct RelationBasis {
    int s = 0;
    std::size_t k = 0;
    AmbientSpace space{AmbientKind::Integers, 0};
    std::vector<std::vector<BigInt>> rows;

    std::size_t rank() const { return rows.size(); }
};

RelationBasis relation_basis(const OrderedSet& sigma, int s);

// Serializes a RelationBasis into an equality token: equal keys <=> equal
// spans (over the same field). `class_key_hex` is a short digest for reports.
std::string canonical_class_key(const RelationBasis& rb);
std::string class_key_hex(const std::string& key);

// Order-independent isomorphism-class key: the minimum class key over all k!
// orderings of the set. Complete invariant for sets over a common field.
// Restricted to k <= 8.
std::string canonical_set_key(const OrderedSet& a, int s);

enum class IsoMethod { RelationSpan, DefinitionOracle };
enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Unknown;
    // When verdict == Yes: position i of A maps to position witness[i] of B.
    std::vector<std::size_t> witness;
};

// Does some bijection A -> B preserve and reflect all s-fold sum equalities?
// The relation-span method compares canonical keys across orderings of B and
// requires both ambients to share a scalar field; beyond k = 8 it only tries
// value-sorted orderings and reports Unknown when they fail. The definition
// oracle checks every bijection directly (any ambients, k <= 8).
IsoResult are_s_isomorphic(const OrderedSet& a, const OrderedSet& b, int s, IsoMethod method);

// Direct check that the specific bijection i -> pi[i] preserves and reflects
// s-fold sum equalities.
bool bijection_is_s_iso(const OrderedSet& a, const OrderedSet& b,
                        const std::vector<std::size_t>& pi, int s);

// Basis of the space of maps A -> F satisfying every 2-relation, as value
// vectors (length k). The constant map is always present, so dim >= 1 and the
// dimension invariant r = dim - 1 is >= 0.
struct HomSpace {
    OrderedSet set;
    std::size_t dim = 0;
    std::vector<std::vector<BigInt>> basis;
    std::size_t freiman_dim = 0;  // r = dim - 1
};

HomSpace hom_space(const OrderedSet& a);

// r+1 positions whose values determine every homomorphism, with the exact
// coefficient row for each element: phi(a_j) = sum_i lambda[j][i] phi(a_idx_i)
// for every hom phi. Rows sum to 1 (plug in the constant map). Finite-field
// coefficients are reported as least residues with denominator 1.
struct SpanningSubset {
    std::vector<std::size_t> indices;
    std::vector<std::vector<BigRat>> coefficients;  // k rows, r+1 columns
};

SpanningSubset spanning_subset(const OrderedSet& a);

// Least-positive-residue map Z_N -> {1,...,N} (0 maps to N), returned in
// ascending order. The unfolded restricted sumset is at most twice as large
// as the original one.
OrderedSet unfold(const GroupSet& a);

// Searches for a dilation lambda and shift mu placing lambda*A + mu inside
// {0,...,floor(N/2)} such that unfolding the image is 2-isomorphic to A via
// the natural map. lambda ascending; for each lambda the shift aligning the
// smallest element to 0 is tried first, then all shifts in order.
struct RectifyWitness {
    Element lambda = 0;
    Element mu = 0;
};

std::optional<RectifyWitness> rectify(const GroupSet& a);

// m >= r(k - (r+1)/2) with r the dimension invariant over Q (compared exactly
// as 2m >= r(2k - r - 1)).
struct FreimanInequalityReport {
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t r = 0;
    Fraction lower_bound{0, 1};
    bool holds = false;
};

FreimanInequalityReport check_freiman_inequality(const OrderedSet& s);

// r + 1 <= 4m*log(k)/k over F_2, evaluated with both log bases (the base
// matters at these scales); violations are reported, never asserted.
struct Mod2DimensionReport {
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t r = 0;
    double bound_log2 = 0.0;
    double bound_ln = 0.0;
    bool holds_log2 = false;
    bool holds_ln = false;
};

Mod2DimensionReport check_mod2_dimension_bound(const GroupSet& a);

// Isomorphism-class census of a family of equal-size sets over a common
// field. Deterministic: representatives are first occurrences in input order,
// entries sorted by key.
struct ClassEntry {
    std::string key;
    std::string key_hex;
    OrderedSet representative;
    std::uint64_t count = 0;
};

std::vector<ClassEntry> classify_sets(const std::vector<OrderedSet>& family, int s);

}  // namespace sumclique
