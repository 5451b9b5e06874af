#include "lefschetz/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace lefschetz {

RingContext::RingContext(int r) : vars(r) {
    if (r < 1) throw std::invalid_argument("ring needs at least one variable");
}

Monomial::Monomial(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("empty exponent vector");
    degree_ = 0;
    for (int e : exponents_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::one(int vars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(vars), 0));
}

Monomial Monomial::variable(int vars, int index, int exponent) {
    if (index < 0 || index >= vars) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(index)] = exponent;
    return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& other) const {
    if (vars() != other.vars()) throw std::invalid_argument("variable count mismatch");
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int index) const {
    std::vector<int> e(exponents_);
    e.at(static_cast<std::size_t>(index)) += 1;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (vars() != other.vars()) throw std::invalid_argument("variable count mismatch");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > other.exponents_[i]) return false;
    }
    return true;
}

int Monomial::support_size() const {
    int s = 0;
    for (int e : exponents_)
        if (e > 0) ++s;
    return s;
}

std::string Monomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exponents_ <=> b.exponents_;
}

bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

std::vector<Monomial> enumerate_monomials(const RingContext& ring, int t) {
    if (t < 0) throw std::invalid_argument("negative degree");
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<std::size_t>(ring.vars), 0);
    // ascending lex on exponent vectors: recurse with smallest e_1 first
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == ring.vars - 1) {
            cur[static_cast<std::size_t>(i)] = rem;
            out.push_back(Monomial(cur));
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[static_cast<std::size_t>(i)] = e;
            self(self, i + 1, rem - e);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, t);
    return out;
}

} // namespace lefschetz
