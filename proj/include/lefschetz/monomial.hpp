#ifndef LEFSCHETZ_MONOMIAL_HPP
#define LEFSCHETZ_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace lefschetz {

/// The ambient polynomial ring K[x_1,...,x_r] with standard grading.  Only
/// the variable count matters here; coefficients are chosen per computation.
struct RingContext {
    int vars;

    explicit RingContext(int r);

    friend bool operator==(const RingContext&, const RingContext&) = default;
};

/// A monomial as its exponent vector.  Degree is cached at construction.
///
/// The global order is graded lexicographic with x_1 > x_2 > ... > x_r:
/// compare total degree first, then the exponent vectors lexicographically.
/// All basis enumerations are ascending in this order, which fixes every
/// matrix row/column layout in the project.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int vars);
    static Monomial variable(int vars, int index, int exponent = 1); // 0-based index

    int vars() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exponents_; }

    Monomial times(const Monomial& other) const;
    Monomial times_variable(int index) const;

    // this | other, coordinate-wise.  Throws on mismatched variable counts.
    bool divides(const Monomial& other) const;

    int support_size() const;

    // e.g. "x1^2*x3" ; "1" for the empty monomial
    std::string str() const;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }

private:
    std::vector<int> exponents_;
    int degree_;
};

bool divides(const Monomial& a, const Monomial& b);

/// All monomials of total degree t in r variables, ascending graded-lex.
/// Count is binomial(t+r-1, r-1).
std::vector<Monomial> enumerate_monomials(const RingContext& ring, int t);

} // namespace lefschetz

#endif
