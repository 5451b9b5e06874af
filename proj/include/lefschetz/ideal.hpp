#ifndef LEFSCHETZ_IDEAL_HPP
#define LEFSCHETZ_IDEAL_HPP

#include <optional>
#include <vector>

#include "lefschetz/characteristic.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

/// Removes every generator strictly divisible by another (and duplicates);
/// the result is pairwise incomparable under divisibility.
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

/// A monomial ideal by its minimal generators, kept sorted in graded-lex
/// order.  Construction minimalizes; it does not require the ideal to be
/// Artinian (the parser needs non-Artinian instances representable so it
/// can diagnose them).
class MonomialIdeal {
public:
    MonomialIdeal(RingContext ring, std::vector<Monomial> generators);

    const RingContext& ring() const { return ring_; }
    int vars() const { return ring_.vars; }
    const std::vector<Monomial>& generators() const { return generators_; }

    // true iff m is divisible by some generator
    bool contains(const Monomial& m) const;

    // Artinian <=> every variable has a pure-power generator.
    bool is_artinian() const;
    // Index of a variable with no pure-power generator, if any.
    std::optional<int> missing_pure_power() const;
    // Exponent of the pure-power generator of x_i; requires one to exist.
    int pure_power_exponent(int var) const;

    // Sum of (pure power exponent - 1); the socle degree never exceeds it.
    int socle_degree_bound() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    RingContext ring_;
    std::vector<Monomial> generators_;
};

/// Degree-t slice of the standard monomial basis of R/I, ascending graded-lex.
struct GradedBasis {
    int degree = 0;
    std::vector<Monomial> monomials;

    std::size_t size() const { return monomials.size(); }
    // Position of m in the basis, or nullopt.
    std::optional<std::size_t> index_of(const Monomial& m) const;
};

/// All degree-t monomials not divisible by any generator of I.
GradedBasis standard_basis(const MonomialIdeal& I, int t);

/// Same, but gives up (nullopt) as soon as more than max_size members have
/// been found.  Used to honor dimension caps without paying for the full
/// enumeration.
std::optional<GradedBasis> standard_basis_limited(const MonomialIdeal& I, int t,
                                                  std::size_t max_size);

/// Image of f in R/I with coefficients in the given characteristic: terms
/// divisible by a generator are dropped, coefficients reduced to canonical
/// residues when char = p.  Idempotent and coefficient-linear.
Polynomial reduce_mod_ideal(const Polynomial& f, const MonomialIdeal& I,
                            Characteristic chr);

} // namespace lefschetz

#endif
