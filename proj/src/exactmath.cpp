#include "sumclique/exactmath.hpp"

#include <cmath>
#include <cstdlib>

namespace sumclique {

Fraction parse_fraction(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            std::int64_t n = std::stoll(text, &pos);
            if (pos != text.size()) throw PreconditionError("trailing characters in fraction: " + text);
            return Fraction(n, 1);
        }
        std::size_t pos = 0;
        std::int64_t n = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw PreconditionError("malformed fraction: " + text);
        std::int64_t d = std::stoll(text.substr(slash + 1), &pos);
        if (pos != text.size() - slash - 1) throw PreconditionError("malformed fraction: " + text);
        return Fraction(n, d);
    } catch (const std::invalid_argument&) {
        throw PreconditionError("malformed fraction: " + text);
    } catch (const std::out_of_range&) {
        throw PreconditionError("fraction out of range: " + text);
    }
}

double log2_of(const BigInt& v) {
    if (v <= 0) throw PreconditionError("log2 of non-positive integer");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

double log2_of(const BigRat& v) {
    if (v <= 0) throw PreconditionError("log2 of non-positive rational");
    return log2_of(BigInt(v.get_num())) - log2_of(BigInt(v.get_den()));
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace sumclique
