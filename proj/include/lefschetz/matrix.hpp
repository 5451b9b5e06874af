#ifndef LEFSCHETZ_MATRIX_HPP
#define LEFSCHETZ_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/characteristic.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/numeric.hpp"

namespace lefschetz {

/// Dense exact matrix over Q (char 0) or F_p.  Entries are arbitrary-
/// precision rationals in characteristic zero and canonical residues
/// 0..p-1 otherwise.  Immutable apart from entry initialization.
///
/// rank() and kernel_basis() use Gaussian elimination with first-nonzero
/// pivoting; arithmetic is exact throughout, no floating point.  Over Q,
/// large matrices first try a fixed ladder of primes: full rank mod p
/// certifies full rank over Q (specialization only drops rank), otherwise
/// the rational elimination runs as is.
class ExactMatrix {
public:
    ExactMatrix(Characteristic chr, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Characteristic characteristic() const { return chr_; }

    // Accumulates an integer value into entry (i,j), reducing mod p as needed.
    void add_entry(std::size_t i, std::size_t j, const Integer& value);

    // Entry as a rational; residues are returned as their canonical integer.
    Rational entry(std::size_t i, std::size_t j) const;

    std::size_t rank() const;

    // Basis of the right null space; size() == cols - rank.  Coordinates are
    // rationals (char 0) or canonical residues embedded as integers (char p).
    std::vector<std::vector<Rational>> kernel_basis() const;

    // this * rhs in the common field; characteristics must agree.
    ExactMatrix multiply(const ExactMatrix& rhs) const;

    ExactMatrix transpose() const;

    bool is_zero_vector_product(const std::vector<Rational>& v) const;

    // Rank mod a given prime of the integer lift of this matrix.  Only valid
    // for char-0 matrices with integral entries; exposed for the modular
    // certification path and its tests.
    std::size_t rank_mod_prime(std::uint32_t p) const;

    // True iff every entry is an integer (always true in char p).
    bool integral() const;

private:
    std::size_t rational_rank_direct() const;

    Characteristic chr_;
    std::size_t rows_, cols_;
    std::vector<Rational> q_;       // char 0 entries
    std::vector<std::uint32_t> m_;  // char p entries, canonical residues
};

/// Matrix of multiplication by ell = c_1 x_1 + ... + c_r x_r from the
/// degree-t graded piece of R/I to degree t+1: rows indexed by
/// standard_basis(I, t+1), columns by standard_basis(I, t), both ascending
/// graded-lex.  The column of a basis monomial u holds the reduced
/// coefficients of u*ell.
ExactMatrix build_mult_matrix(const MonomialIdeal& I, int t,
                              const std::vector<Integer>& ell,
                              Characteristic chr);

/// Same with bases already enumerated (avoids re-enumeration in sweeps).
ExactMatrix build_mult_matrix(const MonomialIdeal& I, const GradedBasis& from,
                              const GradedBasis& to,
                              const std::vector<Integer>& ell,
                              Characteristic chr);

} // namespace lefschetz

#endif
