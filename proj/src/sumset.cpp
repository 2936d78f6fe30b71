#include "sumclique/sumset.hpp"

#include <vector>

namespace sumclique {

GroupSet restricted_sumset(const GroupSet& x) {
    const GroupSpec& g = x.group;
    GroupSet out(g);
    std::vector<Element> e = x.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            out.bits.set(add_raw(g, e[i], e[j]));
    return out;
}

GroupSet sumset(const GroupSet& x, const GroupSet& y) {
    if (!(x.group == y.group)) throw PreconditionError("sumset operands live in different groups");
    const GroupSpec& g = x.group;
    GroupSet out(g);
    std::vector<Element> xe = x.elements();
    std::vector<Element> ye = y.elements();
    for (Element a : xe)
        for (Element b : ye) out.bits.set(add_raw(g, a, b));
    return out;
}

GroupSet signed_iterated_sum(const GroupSet& x, unsigned k, unsigned l) {
    if (k + l < 1) throw PreconditionError("signed_iterated_sum requires k + l >= 1");
    const GroupSpec& g = x.group;
    GroupSet neg(g);
    x.bits.for_each_set([&](std::size_t e) { neg.bits.set(negate(g, static_cast<Element>(e))); });

    GroupSet acc = k > 0 ? x : neg;
    unsigned folds_pos = k > 0 ? k - 1 : 0;
    unsigned folds_neg = k > 0 ? l : l - 1;
    for (unsigned i = 0; i < folds_pos; ++i) acc = sumset(acc, x);
    for (unsigned i = 0; i < folds_neg; ++i) acc = sumset(acc, neg);
    return acc;
}

std::uint64_t summing_quadruple_count(const GroupSet& b) {
    const GroupSpec& g = b.group;
    std::vector<Element> e = b.elements();
    if (e.size() < 2) return 0;
    // r(s) = ordered pairs of distinct elements summing to s; M = sum r(s)^2.
    std::vector<std::uint32_t> r(g.order, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) r[add_raw(g, e[i], e[j])] += 2;
    std::uint64_t m = 0;
    for (std::uint32_t c : r) m += std::uint64_t(c) * c;
    return m;
}

DoublingStats doubling_stats(const GroupSet& x) {
    std::uint64_t k = x.card();
    if (k < 1) throw PreconditionError("doubling_stats requires a nonempty set");
    DoublingStats st;
    st.k = k;
    st.m = restricted_sumset(x).card();
    st.ratio = Fraction(static_cast<std::int64_t>(st.m), static_cast<std::int64_t>(k));
    return st;
}

}  // namespace sumclique
