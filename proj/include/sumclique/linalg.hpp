#pragma once

#include <cstdint>
#include <vector>

#include "sumclique/exactmath.hpp"

namespace sumclique {

// Reduced-row-echelon accumulators over the scalar fields used by the Freiman
// machinery. Rows are inserted one at a time and the matrix stays in canonical
// reduced echelon form, so two row sets span the same space iff the final row
// lists compare equal. Nullspace bases are canonical as well (one vector per
// free column, in column order).

// Over Q. Rows are kept as primitive integer vectors (content 1, positive
// pivot); this is the unique integer rescaling of the rational RREF.
class RrefQ {
  public:
    explicit RrefQ(std::size_t ncols) : ncols_(ncols) {}

    bool insert(std::vector<BigInt> row);           // true iff the rank grew
    bool in_span(std::vector<BigInt> row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::vector<BigInt>> nullspace_basis() const;

  private:
    void reduce_against(std::vector<BigInt>& v) const;
    static void normalize(std::vector<BigInt>& v);

    std::size_t ncols_;
    std::vector<std::vector<BigInt>> rows_;     // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

// Over F_2, rows packed into one 64-bit word (ncols <= 64).
class RrefF2 {
  public:
    explicit RrefF2(std::size_t ncols);

    bool insert(std::uint64_t row);
    bool in_span(std::uint64_t row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::uint64_t> nullspace_basis() const;

  private:
    std::size_t ncols_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::size_t> pivots_;
};

// Over F_p for prime p < 2^32 (products stay below 2^64). Pivots normalized to 1.
class RrefFp {
  public:
    RrefFp(std::size_t ncols, std::uint64_t p);

    bool insert(std::vector<std::uint64_t> row);    // entries reduced mod p by caller or not
    bool in_span(std::vector<std::uint64_t> row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    std::uint64_t modulus() const { return p_; }
    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::vector<std::uint64_t>> nullspace_basis() const;

  private:
    void reduce_against(std::vector<std::uint64_t>& v) const;

    std::size_t ncols_;
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

// Solves M x = c over Q for square invertible M (column-major input columns).
// Throws PreconditionError if M is singular.
std::vector<BigRat> solve_square_q(const std::vector<std::vector<BigRat>>& cols,
                                   const std::vector<BigRat>& target);
std::vector<std::uint64_t> solve_square_fp(const std::vector<std::vector<std::uint64_t>>& cols,
                                           const std::vector<std::uint64_t>& target, std::uint64_t p);

}  // namespace sumclique
