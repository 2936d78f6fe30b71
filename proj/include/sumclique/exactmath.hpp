#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "sumclique/errors.hpp"

namespace sumclique {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Small exact rational for run parameters (densities, epsilon). Always kept
// reduced with den > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw PreconditionError("fraction with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Parses "a/b" or a bare integer "a".
Fraction parse_fraction(const std::string& text);

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// 2^e as an exact rational, e may be negative.
inline BigRat pow2_rat(long e) {
    BigRat r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

double log2_of(const BigInt& v);    // requires v > 0
double log2_of(const BigRat& v);    // requires v > 0

// Deterministic trial-division primality test (intended for values < 2^52).
bool is_prime(std::uint64_t n);

}  // namespace sumclique
