#ifndef LEFSCHETZ_POLYNOMIAL_HPP
#define LEFSCHETZ_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "lefschetz/monomial.hpp"
#include "lefschetz/numeric.hpp"

namespace lefschetz {

/// Finitely supported map monomial -> coefficient.  Zero coefficients are
/// never stored.  An optional homogeneous-degree tag asserts that every
/// term has that degree (enforced on insertion).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::optional<int> homogeneous_degree)
        : degree_(homogeneous_degree) {}

    void add_term(const Monomial& m, const Integer& coeff);
    void set_term(const Monomial& m, const Integer& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Integer>& terms() const { return terms_; }
    std::optional<int> homogeneous_degree() const { return degree_; }

    Integer coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& other);

    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::map<Monomial, Integer> terms_; // graded-lex keyed, deterministic iteration
    std::optional<int> degree_;
};

/// f * (c_1 x_1 + ... + c_r x_r), coefficients combined over the integers.
/// Requires f homogeneous; the result carries degree tag deg(f)+1.
Polynomial multiply_linear(const Polynomial& f, const std::vector<Integer>& coeffs);

/// The all-ones linear form's coefficients.
std::vector<Integer> ones(int r);

} // namespace lefschetz

#endif
