#include "lefschetz/polynomial.hpp"

#include <stdexcept>

namespace lefschetz {

void Polynomial::add_term(const Monomial& m, const Integer& coeff) {
    if (coeff == 0) return;
    if (degree_ && m.degree() != *degree_) {
        throw std::invalid_argument("term degree violates homogeneity tag");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::set_term(const Monomial& m, const Integer& coeff) {
    if (degree_ && m.degree() != *degree_) {
        throw std::invalid_argument("term degree violates homogeneity tag");
    }
    if (coeff == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = coeff;
    }
}

Integer Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c == 1 && m.degree() > 0) {
            out += m.str();
        } else if (m.degree() == 0) {
            out += c.get_str();
        } else {
            out += c.get_str() + "*" + m.str();
        }
    }
    return out;
}

Polynomial multiply_linear(const Polynomial& f, const std::vector<Integer>& coeffs) {
    if (!f.homogeneous_degree()) {
        throw std::invalid_argument("multiply_linear requires homogeneous input");
    }
    Polynomial out(*f.homogeneous_degree() + 1);
    for (const auto& [m, c] : f.terms()) {
        if (static_cast<int>(coeffs.size()) != m.vars()) {
            throw std::invalid_argument("linear form coefficient count mismatch");
        }
        for (int i = 0; i < m.vars(); ++i) {
            const Integer& ci = coeffs[static_cast<std::size_t>(i)];
            if (ci == 0) continue;
            out.add_term(m.times_variable(i), c * ci);
        }
    }
    return out;
}

std::vector<Integer> ones(int r) {
    return std::vector<Integer>(static_cast<std::size_t>(r), Integer(1));
}

} // namespace lefschetz
