#include "doctest.h"

#include <random>

#include "sumclique/sumset.hpp"

using namespace sumclique;

namespace {

GroupSet random_subset(const GroupSpec& g, std::mt19937_64& rng, double density = 0.5) {
    GroupSet s(g);
    for (Element e = 0; e < g.order; ++e)
        if (std::uniform_real_distribution<double>(0, 1)(rng) < density) s.bits.set(e);
    return s;
}

// Quartic-loop reference for the summing quadruple count.
std::uint64_t quadruple_oracle(const GroupSet& b) {
    std::vector<Element> e = b.elements();
    const GroupSpec& g = b.group;
    std::uint64_t m = 0;
    for (Element b1 : e)
        for (Element b2 : e) {
            if (b1 == b2) continue;
            for (Element b3 : e)
                for (Element b4 : e) {
                    if (b3 == b4) continue;
                    if (add(g, b1, b2) == add(g, b3, b4)) ++m;
                }
        }
    return m;
}

}  // namespace

TEST_CASE("restricted sumset on small examples") {
    CHECK(restricted_sumset(parse_set(GroupSpec::cyclic(5), "0,1")).elements() ==
          std::vector<Element>{1});
    CHECK(restricted_sumset(parse_set(GroupSpec::cyclic(10), "0,1,2")).elements() ==
          std::vector<Element>{1, 2, 3});
    // All of Z_2^2: distinct pairs sum to every nonzero vector.
    CHECK(restricted_sumset(full_set(GroupSpec::boolean(2))).elements() ==
          std::vector<Element>{1, 2, 3});
    CHECK(restricted_sumset(parse_set(GroupSpec::cyclic(7), "3")).card() == 0);
}

TEST_CASE("full sumset basics") {
    GroupSpec g = GroupSpec::cyclic(10);
    CHECK(sumset(parse_set(g, "0,1"), parse_set(g, "0,1")).elements() ==
          std::vector<Element>{0, 1, 2});
    CHECK(sumset(parse_set(g, "1,2"), empty_set(g)).card() == 0);

    // A subspace of Z_2^n is closed under addition.
    GroupSpec b = GroupSpec::boolean(4);
    GroupSet h = parse_set(b, "0,3,5,6");    // span of 0011 and 0101
    CHECK(sumset(h, h) == h);

    CHECK_THROWS_AS(sumset(parse_set(g, "1"), parse_set(b, "1")), PreconditionError);
}

TEST_CASE("restricted sumset is contained in the full sumset") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        GroupSpec g = rep % 2 ? GroupSpec::cyclic(40 + rep) : GroupSpec::boolean(6);
        GroupSet x = random_subset(g, rng);
        CHECK(restricted_sumset(x).bits.is_subset_of(sumset(x, x).bits));
    }
}

TEST_CASE("in boolean groups the full sumset is the restricted one plus zero") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 30; ++rep) {
        GroupSet x = random_subset(GroupSpec::boolean(5), rng);
        if (x.card() == 0) continue;
        GroupSet full = sumset(x, x);
        GroupSet want = restricted_sumset(x);
        want.bits.set(0);    // x + x = 0 in characteristic 2
        CHECK(full == want);
    }
}

TEST_CASE("signed iterated sums") {
    GroupSpec g = GroupSpec::cyclic(10);
    GroupSet x = parse_set(g, "0,1");
    CHECK(signed_iterated_sum(x, 3, 0).elements() == std::vector<Element>{0, 1, 2, 3});
    CHECK(signed_iterated_sum(x, 2, 1).elements() == std::vector<Element>{0, 1, 2, 9});
    CHECK(signed_iterated_sum(parse_set(g, "0"), 1, 1).elements() == std::vector<Element>{0});
    CHECK(signed_iterated_sum(x, 1, 0) == x);
    CHECK_THROWS_AS(signed_iterated_sum(x, 0, 0), PreconditionError);
}

TEST_CASE("summing quadruple count") {
    GroupSpec g = GroupSpec::cyclic(10);
    CHECK(summing_quadruple_count(parse_set(g, "0,1,2")) == 12);
    CHECK(summing_quadruple_count(parse_set(g, "4")) == 0);
    CHECK(summing_quadruple_count(empty_set(g)) == 0);

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        GroupSpec h = rep % 2 ? GroupSpec::cyclic(101) : GroupSpec::boolean(6);
        GroupSet b = random_subset(h, rng, 8.0 / h.order);
        CHECK(summing_quadruple_count(b) == quadruple_oracle(b));
    }
}

TEST_CASE("doubling stats") {
    GroupSpec g = GroupSpec::cyclic(50);
    DoublingStats ap = doubling_stats(parse_set(g, "0,1,2,3,4"));
    CHECK(ap.k == 5);
    CHECK(ap.m == 7);
    CHECK(ap.ratio == Fraction(7, 5));

    DoublingStats sub = doubling_stats(parse_set(GroupSpec::boolean(3), "0,1,2,3"));
    CHECK(sub.m == 3);    // a 2-dimensional subspace: sums are its nonzero vectors

    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        GroupSet t(g);
        while (t.card() < 3) t.bits.set(static_cast<Element>(rng() % 50));
        CHECK(doubling_stats(t).m == 3);    // distinct pairwise sums of any 3-set
    }
    CHECK_THROWS_AS(doubling_stats(empty_set(g)), PreconditionError);
}

TEST_CASE("quadruple count obeys the Cauchy-Schwarz lower bound") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        GroupSpec g = rep % 2 ? GroupSpec::cyclic(64 + rep % 100) : GroupSpec::boolean(7);
        GroupSet b = random_subset(g, rng, 0.2);
        std::uint64_t k = b.card();
        if (k < 2) continue;
        std::uint64_t m = restricted_sumset(b).card();
        std::uint64_t quads = summing_quadruple_count(b);
        // M(B) * m >= k^2 (k-1)^2: each unordered distinct pair lands somewhere.
        CHECK(quads * m >= k * k * (k - 1) * (k - 1));
    }
}

TEST_CASE("restricted sumset size is translation and dilation invariant") {
    std::mt19937_64 rng(14);
    GroupSpec g = GroupSpec::cyclic(97);
    for (int rep = 0; rep < 40; ++rep) {
        GroupSet x = random_subset(g, rng, 0.15);
        if (x.card() < 2) continue;
        std::uint64_t m = restricted_sumset(x).card();
        Element t = static_cast<Element>(rng() % 97);
        Element lam = static_cast<Element>(1 + rng() % 96);
        GroupSet shifted(g), dilated(g);
        x.bits.for_each_set([&](std::size_t e) {
            shifted.bits.set(add_raw(g, static_cast<Element>(e), t));
            dilated.bits.set(static_cast<Element>((std::uint64_t(lam) * e) % 97));
        });
        CHECK(restricted_sumset(shifted).card() == m);
        CHECK(restricted_sumset(dilated).card() == m);    // 97 prime: dilation is a bijection
    }
}

TEST_CASE("iterated sumsets obey the Pluennecke-Ruzsa growth bound") {
    std::mt19937_64 rng(15);
    GroupSpec g = GroupSpec::cyclic(150);
    int checked = 0;
    for (int rep = 0; rep < 400; ++rep) {
        GroupSet a = random_subset(g, rng, 8.0 / g.order);
        std::uint64_t k = a.card();
        if (k < 2) continue;
        ++checked;
        std::uint64_t doubling = sumset(a, a).card();    // |A+A| = C * |A|
        for (unsigned ks = 0; ks <= 4; ++ks)
            for (unsigned ls = 0; ks + ls <= 4; ++ls) {
                if (ks + ls < 1) continue;
                std::uint64_t size = signed_iterated_sum(a, ks, ls).card();
                // |kA - lA| <= C^(k+l) |A|, compared exactly:
                // size * |A|^(k+l-1) <= |A+A|^(k+l)
                unsigned e = ks + ls;
                long double lhs = static_cast<long double>(size);
                for (unsigned i = 0; i + 1 < e; ++i) lhs *= k;
                long double rhs = 1;
                for (unsigned i = 0; i < e; ++i) rhs *= doubling;
                CHECK(lhs <= rhs);
            }
    }
    CHECK(checked > 300);
}
