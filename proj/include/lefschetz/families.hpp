#ifndef LEFSCHETZ_FAMILIES_HPP
#define LEFSCHETZ_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/ideal.hpp"

namespace lefschetz {

enum class FamilyTag { UniformKD, MixedAlphaD, SquaresD, JAlpha, Custom };

/// Parameter record selecting one of the paper's ideal families or a custom
/// generator list.  validate() enforces the per-tag parameter ranges.
struct FamilySpec {
    FamilyTag tag = FamilyTag::Custom;
    int r = 0;
    int k = 0;                        // UniformKD
    std::vector<int> alphas;          // MixedAlphaD, each in 2..4
    int d = 0;                        // families with a squarefree part
    int alpha = 0;                    // JAlpha, >= 5
    std::vector<Monomial> custom_generators;

    void validate() const;
    MonomialIdeal build() const;
    std::string family_name() const;
};

/// I_{r,k,d} = (x_1^k,...,x_r^k) + (all squarefree monomials of degree d).
/// Requires k >= 2 and 2 <= d <= r.
MonomialIdeal family_uniform(int r, int k, int d);

/// (x_1^a1,...,x_r^ar) + (all squarefree monomials of degree d) with each
/// a_i in {2,3,4}; requires 4 <= d <= r.
MonomialIdeal family_mixed(const std::vector<int>& alphas, int d);

/// (x_1^2,...,x_r^2) + (all squarefree monomials of degree d), 2 <= d <= r.
MonomialIdeal family_squares(int r, int d);

/// (x_i^alpha for all i) + (x_i^{alpha-2} x_m^2 and x_i^2 x_m^{alpha-2} for
/// all pairs i < m); requires r >= 4 and alpha >= 5.  The pair generators
/// run over all pairs, not just consecutive indices.
MonomialIdeal family_J(int r, int alpha);

/// Syntax error with 0-based input position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Raised when a parsed ideal has a variable with no pure-power generator.
class NotArtinianError : public std::runtime_error {
public:
    NotArtinianError(std::string message, int variable);
    int variable() const { return variable_; } // 0-based

private:
    int variable_;
};

/// Grammar:  ideal := gen (',' gen)* ; gen := factor ('*' factor)* ;
///           factor := 'x' INDEX ('^' EXP)? ; INDEX in 1..r, EXP >= 1.
/// Whitespace is insignificant.  The result is minimalized and checked to
/// be Artinian.
MonomialIdeal parse_ideal(const std::string& text, int r);

/// Inverse printer for the grammar above; parse_ideal(render_ideal(I)) == I.
std::string render_ideal(const MonomialIdeal& I);

} // namespace lefschetz

#endif
