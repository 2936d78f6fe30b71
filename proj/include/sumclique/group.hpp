#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumclique/bitvec.hpp"
#include "sumclique/errors.hpp"

namespace sumclique {

using Element = std::uint32_t;

// Finite abelian ambient group: Z_N (cyclic) or Z_2^n (boolean). Elements are
// encoded 0..order-1; for Z_2^n the encoding is the coordinate bitmask.
struct GroupSpec {
    enum class Kind { Cyclic, Boolean };

    static constexpr std::uint32_t kMaxOrderLog2 = 26;   // supported orders <= 2^26

    Kind kind = Kind::Cyclic;
    std::uint32_t order = 1;
    std::uint32_t dim = 0;    // meaningful for Boolean only

    static GroupSpec cyclic(std::uint64_t n);
    static GroupSpec boolean(std::uint32_t dim);

    bool is_cyclic() const { return kind == Kind::Cyclic; }
    bool is_boolean() const { return kind == Kind::Boolean; }
    std::string name() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.kind == b.kind && a.order == b.order && a.dim == b.dim;
    }
};

inline void require_element(const GroupSpec& g, std::uint64_t v) {
    if (v >= g.order) throw PreconditionError("element out of range for group of order " + std::to_string(g.order));
}

inline Element add(const GroupSpec& g, Element a, Element b) {
    require_element(g, a);
    require_element(g, b);
    if (g.is_boolean()) return a ^ b;
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Element>(s >= g.order ? s - g.order : s);
}

inline Element negate(const GroupSpec& g, Element a) {
    require_element(g, a);
    if (g.is_boolean()) return a;
    return a == 0 ? 0 : static_cast<Element>(g.order - a);
}

// Unchecked fast paths for hot loops; callers guarantee range.
inline Element add_raw(const GroupSpec& g, Element a, Element b) {
    if (g.is_boolean()) return a ^ b;
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Element>(s >= g.order ? s - g.order : s);
}

// Subset of a group, stored as a bitset over element encodings.
struct GroupSet {
    GroupSpec group;
    BitVec bits;

    GroupSet() = default;
    explicit GroupSet(const GroupSpec& g) : group(g), bits(g.order) {}

    std::size_t card() const { return bits.count(); }
    bool contains(Element e) const { return e < group.order && bits.test(e); }
    void insert(Element e) {
        require_element(group, e);
        bits.set(e);
    }
    std::vector<Element> elements() const;   // ascending encodings

    friend bool operator==(const GroupSet& a, const GroupSet& b) {
        return a.group == b.group && a.bits == b.bits;
    }
};

GroupSet full_set(const GroupSpec& g);
GroupSet empty_set(const GroupSpec& g);
GroupSet make_set(const GroupSpec& g, const std::vector<Element>& elems);

// Parses a comma/whitespace separated element list, e.g. "0,3,9".
// Duplicates are rejected.
GroupSet parse_set(const GroupSpec& g, const std::string& text);

// Set files: UTF-8 text, one decimal element per line, '#' starts a comment
// line, blank lines ignored.
GroupSet load_set_file(const GroupSpec& g, const std::string& path);
void save_set_file(const GroupSet& s, const std::string& path);

// Arithmetic progression {start, start+step, ...} of given length (mod N for
// cyclic groups). Steps through the group; elements must stay distinct.
GroupSet arithmetic_progression(const GroupSpec& g, Element start, Element step, std::uint32_t length);

}  // namespace sumclique
