#include "sumclique/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sumclique/errors.hpp"

namespace sumclique {

namespace {

// Content (gcd of entries) of an integer vector; 0 for the zero vector.
BigInt content_of(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::size_t first_nonzero(const std::vector<BigInt>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

}  // namespace

void RrefQ::normalize(std::vector<BigInt>& v) {
    BigInt g = content_of(v);
    if (g == 0) return;
    std::size_t lead = first_nonzero(v);
    if (v[lead] < 0) g = -g;
    for (BigInt& x : v) x /= g;
}

void RrefQ::reduce_against(std::vector<BigInt>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        const BigInt a = rows_[i][p];  // > 0
        const BigInt b = v[p];
        for (std::size_t c = 0; c < ncols_; ++c) v[c] = v[c] * a - rows_[i][c] * b;
        BigInt g = content_of(v);
        if (g > 1)
            for (BigInt& x : v) x /= g;
    }
}

bool RrefQ::insert(std::vector<BigInt> row) {
    if (row.size() != ncols_) throw std::logic_error("row length mismatch");
    reduce_against(row);
    const std::size_t pv = first_nonzero(row);
    if (pv == ncols_) return false;
    normalize(row);
    // Clear column pv in the existing rows; their pivots are untouched because
    // row has zeros at every existing pivot column.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][pv] == 0) continue;
        const BigInt a = row[pv];
        const BigInt b = rows_[i][pv];
        for (std::size_t c = 0; c < ncols_; ++c) rows_[i][c] = rows_[i][c] * a - row[c] * b;
        normalize(rows_[i]);
    }
    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pv);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, pv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
}

bool RrefQ::in_span(std::vector<BigInt> row) const {
    if (row.size() != ncols_) throw std::logic_error("row length mismatch");
    reduce_against(row);
    return first_nonzero(row) == ncols_;
}

std::vector<std::vector<BigInt>> RrefQ::nullspace_basis() const {
    std::vector<std::vector<BigInt>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        // Solve for the vector with free coordinate f: x_f = L > 0,
        // x_{pivot_i} = -rows_[i][f] * L / rows_[i][pivot_i], then reduce to
        // primitive form (the f entry stays positive).
        BigInt lcm = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][f] == 0) continue;
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rows_[i][pivots_[i]].get_mpz_t());
        }
        std::vector<BigInt> x(ncols_, BigInt(0));
        x[f] = lcm;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][f] == 0) continue;
            x[pivots_[i]] = -rows_[i][f] * (lcm / rows_[i][pivots_[i]]);
        }
        BigInt g = content_of(x);
        if (g > 1)
            for (BigInt& e : x) e /= g;
        basis.push_back(std::move(x));
    }
    return basis;
}

RrefF2::RrefF2(std::size_t ncols) : ncols_(ncols) {
    if (ncols > 64) throw PreconditionError("binary row accumulator supports at most 64 columns");
}

bool RrefF2::insert(std::uint64_t row) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (row >> pivots_[i] & 1) row ^= rows_[i];
    if (row == 0) return false;
    const std::size_t pv = static_cast<std::size_t>(std::countr_zero(row));
    for (std::uint64_t& r : rows_)
        if (r >> pv & 1) r ^= row;
    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pv);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, pv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), row);
    return true;
}

bool RrefF2::in_span(std::uint64_t row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (row >> pivots_[i] & 1) row ^= rows_[i];
    return row == 0;
}

std::vector<std::uint64_t> RrefF2::nullspace_basis() const {
    std::vector<std::uint64_t> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        std::uint64_t x = std::uint64_t{1} << f;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] >> f & 1) x |= std::uint64_t{1} << pivots_[i];
        basis.push_back(x);
    }
    return basis;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::logic_error("zero has no modular inverse");
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

RrefFp::RrefFp(std::size_t ncols, std::uint64_t p) : ncols_(ncols), p_(p) {
    if (p < 2 || p >> 32 != 0)
        throw PreconditionError("prime-field modulus must lie in [2, 2^32)");
}

void RrefFp::reduce_against(std::vector<std::uint64_t>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint64_t c = v[pivots_[i]] % p_;
        if (c == 0) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            v[j] = (v[j] + (p_ - c) * rows_[i][j]) % p_;
    }
}

bool RrefFp::insert(std::vector<std::uint64_t> row) {
    if (row.size() != ncols_) throw std::logic_error("row length mismatch");
    for (std::uint64_t& x : row) x %= p_;
    reduce_against(row);
    std::size_t pv = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j)
        if (row[j] != 0) {
            pv = j;
            break;
        }
    if (pv == ncols_) return false;
    const std::uint64_t inv = mod_inverse(row[pv], p_);
    for (std::uint64_t& x : row) x = x * inv % p_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint64_t c = rows_[i][pv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            rows_[i][j] = (rows_[i][j] + (p_ - c) * row[j]) % p_;
    }
    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pv);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, pv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
}

bool RrefFp::in_span(std::vector<std::uint64_t> row) const {
    if (row.size() != ncols_) throw std::logic_error("row length mismatch");
    for (std::uint64_t& x : row) x %= p_;
    reduce_against(row);
    for (std::uint64_t x : row)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<std::uint64_t>> RrefFp::nullspace_basis() const {
    std::vector<std::vector<std::uint64_t>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        std::vector<std::uint64_t> x(ncols_, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i][f] != 0) x[pivots_[i]] = p_ - rows_[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<BigRat> solve_square_q(const std::vector<std::vector<BigRat>>& cols,
                                   const std::vector<BigRat>& target) {
    const std::size_t d = cols.size();
    // Augmented matrix rows: M[i][j] = cols[j][i], last column = target.
    std::vector<std::vector<BigRat>> m(d, std::vector<BigRat>(d + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = cols[j][i];
        m[i][d] = target[i];
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t pivot = c;
        while (pivot < d && m[pivot][c] == 0) ++pivot;
        if (pivot == d) throw PreconditionError("singular linear system");
        std::swap(m[c], m[pivot]);
        const BigRat inv = 1 / m[c][c];
        for (std::size_t j = c; j <= d; ++j) m[c][j] *= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const BigRat f = m[i][c];
            for (std::size_t j = c; j <= d; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<BigRat> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return x;
}

std::vector<std::uint64_t> solve_square_fp(const std::vector<std::vector<std::uint64_t>>& cols,
                                           const std::vector<std::uint64_t>& target,
                                           std::uint64_t p) {
    const std::size_t d = cols.size();
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = cols[j][i] % p;
        m[i][d] = target[i] % p;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t pivot = c;
        while (pivot < d && m[pivot][c] == 0) ++pivot;
        if (pivot == d) throw PreconditionError("singular linear system");
        std::swap(m[c], m[pivot]);
        const std::uint64_t inv = mod_inverse(m[c][c], p);
        for (std::size_t j = c; j <= d; ++j) m[c][j] = m[c][j] * inv % p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = c; j <= d; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[c][j]) % p;
        }
    }
    std::vector<std::uint64_t> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return x;
}

}  // namespace sumclique
