#include "lefschetz/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        // sorted by degree, so only earlier (lower-degree) entries can divide
        for (std::size_t j = 0; j < i && !redundant; ++j) {
            redundant = generators[j].divides(generators[i]);
        }
        if (!redundant) out.push_back(generators[i]);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<Monomial> generators)
    : ring_(ring) {
    for (const auto& g : generators) {
        if (g.vars() != ring_.vars) {
            throw std::invalid_argument("generator variable count mismatch");
        }
    }
    generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : generators_) {
        if (g.degree() > m.degree()) break; // sorted by degree first
        if (g.divides(m)) return true;
    }
    return false;
}

std::optional<int> MonomialIdeal::missing_pure_power() const {
    std::vector<bool> has(static_cast<std::size_t>(ring_.vars), false);
    for (const auto& g : generators_) {
        if (g.support_size() == 1) {
            for (int i = 0; i < ring_.vars; ++i) {
                if (g.exponent(i) > 0) has[static_cast<std::size_t>(i)] = true;
            }
        }
    }
    for (int i = 0; i < ring_.vars; ++i) {
        if (!has[static_cast<std::size_t>(i)]) return i;
    }
    return std::nullopt;
}

bool MonomialIdeal::is_artinian() const { return !missing_pure_power().has_value(); }

int MonomialIdeal::pure_power_exponent(int var) const {
    for (const auto& g : generators_) {
        if (g.support_size() == 1 && g.exponent(var) > 0) return g.exponent(var);
    }
    throw std::logic_error("no pure-power generator for variable " +
                           std::to_string(var + 1));
}

int MonomialIdeal::socle_degree_bound() const {
    int bound = 0;
    for (int i = 0; i < ring_.vars; ++i) bound += pure_power_exponent(i) - 1;
    return bound;
}

std::optional<std::size_t> GradedBasis::index_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
}

namespace {

// Recursive enumerator of standard monomials of fixed degree, ascending
// graded-lex.  Prunes on (a) generators fully supported in the assigned
// prefix, (b) per-variable exponent caps from pure-power generators,
// (c) remaining-degree feasibility.  Emits at most limit+1 members.
class StandardEnumerator {
public:
    StandardEnumerator(const MonomialIdeal& I, int t, std::size_t limit)
        : ideal_(I), r_(I.vars()), degree_(t), limit_(limit) {
        caps_.assign(static_cast<std::size_t>(r_), t);
        for (int i = 0; i < r_; ++i) {
            for (const auto& g : I.generators()) {
                if (g.support_size() == 1 && g.exponent(i) > 0) {
                    caps_[static_cast<std::size_t>(i)] =
                        std::min(caps_[static_cast<std::size_t>(i)], g.exponent(i) - 1);
                }
            }
        }
        // bucket generators by the last variable of their support
        buckets_.assign(static_cast<std::size_t>(r_), {});
        for (const auto& g : I.generators()) {
            int last = -1;
            for (int i = 0; i < r_; ++i) {
                if (g.exponent(i) > 0) last = i;
            }
            if (last >= 0) buckets_[static_cast<std::size_t>(last)].push_back(&g);
        }
        suffix_cap_.assign(static_cast<std::size_t>(r_) + 1, 0);
        for (int i = r_ - 1; i >= 0; --i) {
            suffix_cap_[static_cast<std::size_t>(i)] =
                suffix_cap_[static_cast<std::size_t>(i) + 1] +
                caps_[static_cast<std::size_t>(i)];
        }
    }

    // false iff the limit was exceeded
    bool run(std::vector<Monomial>& out) {
        if (!ideal_.generators().empty() &&
            ideal_.generators().front().degree() == 0) {
            return true; // ideal contains 1: quotient is zero
        }
        cur_.assign(static_cast<std::size_t>(r_), 0);
        out_ = &out;
        return rec(0, degree_);
    }

private:
    bool prefix_divisible(int i) const {
        for (const Monomial* g : buckets_[static_cast<std::size_t>(i)]) {
            bool div = true;
            for (int j = 0; j <= i && div; ++j) {
                div = g->exponent(j) <= cur_[static_cast<std::size_t>(j)];
            }
            if (div) return true;
        }
        return false;
    }

    bool rec(int i, int rem) {
        if (rem > suffix_cap_[static_cast<std::size_t>(i)]) return true; // infeasible
        if (i == r_) {
            // rem == 0 guaranteed by suffix_cap_[r_] == 0
            if (out_->size() > limit_) return false;
            out_->push_back(Monomial(cur_));
            return out_->size() <= limit_;
        }
        int hi = std::min(rem, caps_[static_cast<std::size_t>(i)]);
        for (int e = 0; e <= hi; ++e) {
            cur_[static_cast<std::size_t>(i)] = e;
            if (prefix_divisible(i)) break; // larger e stays divisible
            if (!rec(i + 1, rem - e)) return false;
        }
        cur_[static_cast<std::size_t>(i)] = 0;
        return true;
    }

    const MonomialIdeal& ideal_;
    int r_;
    int degree_;
    std::size_t limit_;
    std::vector<int> caps_;
    std::vector<int> suffix_cap_;
    std::vector<std::vector<const Monomial*>> buckets_;
    std::vector<int> cur_;
    std::vector<Monomial>* out_ = nullptr;
};

} // namespace

GradedBasis standard_basis(const MonomialIdeal& I, int t) {
    if (!I.is_artinian()) {
        throw std::invalid_argument("standard_basis requires an Artinian ideal");
    }
    GradedBasis b;
    b.degree = t;
    StandardEnumerator e(I, t, static_cast<std::size_t>(-1));
    e.run(b.monomials);
    return b;
}

std::optional<GradedBasis> standard_basis_limited(const MonomialIdeal& I, int t,
                                                  std::size_t max_size) {
    if (!I.is_artinian()) {
        throw std::invalid_argument("standard_basis requires an Artinian ideal");
    }
    GradedBasis b;
    b.degree = t;
    StandardEnumerator e(I, t, max_size);
    if (!e.run(b.monomials)) return std::nullopt;
    return b;
}

Polynomial reduce_mod_ideal(const Polynomial& f, const MonomialIdeal& I,
                            Characteristic chr) {
    Polynomial out(f.homogeneous_degree());
    for (const auto& [m, c] : f.terms()) {
        if (I.contains(m)) continue;
        if (chr.is_zero()) {
            out.add_term(m, c);
        } else {
            Integer reduced = residue_mod(c, chr.value());
            if (reduced != 0) out.add_term(m, reduced);
        }
    }
    return out;
}

} // namespace lefschetz
