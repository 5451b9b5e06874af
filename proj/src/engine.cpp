#include "lefschetz/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

HVector h_vector(const MonomialIdeal& I) {
    if (!I.is_artinian()) throw std::invalid_argument("h_vector requires an Artinian ideal");
    HVector h;
    const int bound = I.socle_degree_bound();
    for (int t = 0; t <= bound + 1; ++t) {
        const auto b = standard_basis(I, t);
        if (b.monomials.empty()) break;
        h.values.push_back(static_cast<long>(b.size()));
    }
    if (h.values.empty()) h.values.push_back(0); // quotient is the zero ring
    return h;
}

long total_dimension(const HVector& h) {
    long sum = 0;
    for (long v : h.values) sum += v;
    return sum;
}

SocleInfo socle(const MonomialIdeal& I) {
    if (!I.is_artinian()) throw std::invalid_argument("socle requires an Artinian ideal");
    const HVector h = h_vector(I);
    SocleInfo info;
    info.socle_degree = h.socle_degree();
    for (int t = 0; t <= info.socle_degree; ++t) {
        long dim = 0;
        for (const auto& u : standard_basis(I, t).monomials) {
            bool annihilated = true;
            for (int j = 0; j < I.vars() && annihilated; ++j) {
                annihilated = I.contains(u.times_variable(j));
            }
            if (annihilated) ++dim;
        }
        info.per_degree.push_back(dim);
    }
    info.is_level = true;
    for (int t = 0; t < info.socle_degree; ++t) {
        if (info.per_degree[static_cast<std::size_t>(t)] != 0) info.is_level = false;
    }
    return info;
}

DimensionCapExceeded::DimensionCapExceeded(int degree, std::size_t cap)
    : std::runtime_error("graded piece at degree " + std::to_string(degree) +
                         " exceeds the dimension cap " + std::to_string(cap)),
      degree_(degree) {}

namespace {

std::vector<Integer> effective_ell(const MonomialIdeal& I, const CheckOptions& opts) {
    if (opts.general_ell) {
        if (static_cast<int>(opts.ell.size()) != I.vars()) {
            throw std::invalid_argument("general ell needs r coefficients");
        }
        return opts.ell;
    }
    return ones(I.vars());
}

std::vector<GradedBasis> all_bases(const MonomialIdeal& I, const HVector& h,
                                   std::size_t max_dim) {
    std::vector<GradedBasis> bases;
    for (int t = 0; t <= h.socle_degree(); ++t) {
        if (max_dim != 0 && static_cast<std::size_t>(h.at(t)) > max_dim) {
            throw DimensionCapExceeded(t, max_dim);
        }
        bases.push_back(standard_basis(I, t));
    }
    return bases;
}

// Integer-normalized kernel vector: residues as-is in char p; over Q the
// denominators are cleared and the content divided out, first nonzero
// coordinate positive.
std::vector<Integer> normalize_kernel_vector(const std::vector<Rational>& v,
                                             Characteristic chr) {
    std::vector<Integer> out(v.size());
    if (!chr.is_zero()) {
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = Integer(v[i].get_num());
        return out;
    }
    Integer lcm_den = 1;
    for (const auto& x : v) {
        Integer den(x.get_den());
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    Integer content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = Integer(v[i].get_num()) * (lcm_den / Integer(v[i].get_den()));
        Integer g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
        content = g;
    }
    if (content > 1) {
        for (auto& x : out) x /= content;
    }
    for (const auto& x : out) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : out) y = -y;
            }
            break;
        }
    }
    return out;
}

Polynomial polynomial_from_coordinates(const GradedBasis& basis,
                                       const std::vector<Integer>& coords) {
    Polynomial f(basis.degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) f.add_term(basis.monomials[i], coords[i]);
    }
    return f;
}

} // namespace

WlpReport wlp_check(const MonomialIdeal& I, Characteristic chr,
                    const CheckOptions& opts) {
    if (!I.is_artinian()) throw std::invalid_argument("wlp_check requires an Artinian ideal");
    WlpReport report;
    report.chr = chr;
    report.h = h_vector(I);
    const std::vector<Integer> ell = effective_ell(I, opts);
    const int e = report.h.socle_degree();
    const auto bases = all_bases(I, report.h, opts.max_dim);

    for (int t = 0; t < e; ++t) {
        const GradedBasis& from = bases[static_cast<std::size_t>(t)];
        const GradedBasis& to = bases[static_cast<std::size_t>(t) + 1];
        const ExactMatrix M = build_mult_matrix(I, from, to, ell, chr);
        WlpRow row;
        row.t = t;
        row.h_t = report.h.at(t);
        row.h_t1 = report.h.at(t + 1);
        row.rank = static_cast<long>(M.rank());
        row.maximal = row.rank == std::min(row.h_t, row.h_t1);
        report.rows.push_back(row);
        if (!row.maximal && !report.first_failure) {
            report.first_failure = t;
            if (row.rank < row.h_t && row.h_t <= row.h_t1) {
                // injectivity failure: attach a kernel witness
                const auto kernel = M.kernel_basis();
                if (!kernel.empty()) {
                    report.witness = polynomial_from_coordinates(
                        from, normalize_kernel_vector(kernel.front(), chr));
                }
            } else {
                report.witness_note =
                    "surjectivity fails at t=" + std::to_string(t) + ": rank " +
                    std::to_string(row.rank) + " < " + std::to_string(row.h_t1) +
                    " = h_" + std::to_string(t + 1);
            }
        }
    }
    report.verdict =
        report.first_failure.has_value() ? Verdict::Fails : Verdict::Holds;
    return report;
}

SlpReport slp_check(const MonomialIdeal& I, Characteristic chr,
                    const CheckOptions& opts) {
    if (!I.is_artinian()) throw std::invalid_argument("slp_check requires an Artinian ideal");
    SlpReport report;
    report.chr = chr;
    report.h = h_vector(I);
    const std::vector<Integer> ell = effective_ell(I, opts);
    const int e = report.h.socle_degree();
    const auto bases = all_bases(I, report.h, opts.max_dim);

    std::vector<ExactMatrix> step; // step[t] : A_t -> A_{t+1}
    for (int t = 0; t < e; ++t) {
        step.push_back(build_mult_matrix(I, bases[static_cast<std::size_t>(t)],
                                         bases[static_cast<std::size_t>(t) + 1], ell,
                                         chr));
    }
    for (int i = 0; i + 2 <= e; ++i) {
        std::optional<ExactMatrix> power; // x(ell^d) : A_i -> A_{i+d}
        for (int d = 1; d <= e - 1 && i + d <= e; ++d) {
            const ExactMatrix& next = step[static_cast<std::size_t>(i + d - 1)];
            power = power ? next.multiply(*power) : next;
            SlpRow row;
            row.i = i;
            row.d = d;
            row.h_i = report.h.at(i);
            row.h_id = report.h.at(i + d);
            row.rank = static_cast<long>(power->rank());
            row.maximal = row.rank == std::min(row.h_i, row.h_id);
            report.rows.push_back(row);
            if (!row.maximal && !report.first_failure) {
                report.first_failure = std::make_pair(i, d);
            }
        }
    }
    report.verdict =
        report.first_failure.has_value() ? Verdict::Fails : Verdict::Holds;
    return report;
}

namespace {

Witness make_family_witness(Polynomial raw, const MonomialIdeal& I, int degree,
                            std::uint32_t claimed_char, FamilySpec family) {
    Witness w;
    w.degree = degree;
    w.claimed_char = Characteristic::prime(claimed_char);
    w.family = std::move(family);
    w.f = reduce_mod_ideal(raw, I, w.claimed_char);
    w.degenerate = w.f.is_zero();
    return w;
}

} // namespace

Witness witness_thmA(const std::vector<int>& alphas, int d) {
    const int r = static_cast<int>(alphas.size());
    for (int a : alphas) {
        if (a < 2 || a > 3) {
            throw std::invalid_argument("witness_thmA needs every alpha_i in {2,3}");
        }
    }
    if (d < 4) throw std::invalid_argument("witness_thmA needs d >= 4");
    const MonomialIdeal I = family_mixed(alphas, d);
    // square terms once per variable; cross terms signed, as in the paper's
    // j = 1,2 split (the sum equals ell^2 mod 3)
    Polynomial f(2);
    for (int a = 0; a < r; ++a) f.add_term(Monomial::variable(r, a, 2), 1);
    for (int i = 0; i < r; ++i) {
        for (int m = i + 1; m < r; ++m) {
            f.add_term(Monomial::variable(r, i).times(Monomial::variable(r, m)), -1);
        }
    }
    FamilySpec spec;
    spec.tag = FamilyTag::MixedAlphaD;
    spec.r = r;
    spec.alphas = alphas;
    spec.d = d;
    return make_family_witness(std::move(f), I, 2, 3, std::move(spec));
}

Witness witness_thmB(const std::vector<int>& alphas, int d) {
    const int r = static_cast<int>(alphas.size());
    for (int a : alphas) {
        if (a < 2 || a > 4) {
            throw std::invalid_argument("witness_thmB needs every alpha_i in {2,3,4}");
        }
    }
    if (d < 5) throw std::invalid_argument("witness_thmB needs d >= 5");
    const MonomialIdeal I = family_mixed(alphas, d);
    // all distinct monomials x_a^2 x_b (a != b) and x_a^3 (= ell^3 mod 2)
    Polynomial f(3);
    for (int a = 0; a < r; ++a) {
        f.add_term(Monomial::variable(r, a, 3), 1);
        for (int b = 0; b < r; ++b) {
            if (a == b) continue;
            f.add_term(Monomial::variable(r, a, 2).times(Monomial::variable(r, b)), 1);
        }
    }
    FamilySpec spec;
    spec.tag = FamilyTag::MixedAlphaD;
    spec.r = r;
    spec.alphas = alphas;
    spec.d = d;
    return make_family_witness(std::move(f), I, 3, 2, std::move(spec));
}

Witness witness_thmC(int r, int alpha) {
    if (r < 4 || alpha < 5) {
        throw std::invalid_argument("witness_thmC needs r >= 4 and alpha >= 5");
    }
    const MonomialIdeal J = family_J(r, alpha);
    // all distinct monomials x_a^{alpha-2} x_b (a != b) and x_a^{alpha-1}
    Polynomial f(alpha - 1);
    for (int a = 0; a < r; ++a) {
        f.add_term(Monomial::variable(r, a, alpha - 1), 1);
        for (int b = 0; b < r; ++b) {
            if (a == b) continue;
            f.add_term(
                Monomial::variable(r, a, alpha - 2).times(Monomial::variable(r, b)), 1);
        }
    }
    FamilySpec spec;
    spec.tag = FamilyTag::JAlpha;
    spec.r = r;
    spec.alpha = alpha;
    return make_family_witness(std::move(f), J, alpha - 1, 2, std::move(spec));
}

Witness witness_prop(int r, int d, int i) {
    const int half = (r + 1) / 2;
    if (i < 1 || i > half) {
        throw std::invalid_argument("witness_prop needs 1 <= i <= ceil(r/2)");
    }
    if (i > d - 2) throw std::invalid_argument("witness_prop needs i <= d-2");
    const MonomialIdeal I = family_squares(r, d);
    std::uint32_t p = 2;
    while ((i + 1) % static_cast<int>(p) != 0) ++p; // smallest prime factor of i+1
    Polynomial f(i);
    std::vector<int> pick(static_cast<std::size_t>(i));
    auto rec = [&](auto&& self, int start, int chosen) -> void {
        if (chosen == i) {
            std::vector<int> e(static_cast<std::size_t>(r), 0);
            for (int idx : pick) e[static_cast<std::size_t>(idx)] = 1;
            f.add_term(Monomial(std::move(e)), 1);
            return;
        }
        for (int v = start; v <= r - (i - chosen); ++v) {
            pick[static_cast<std::size_t>(chosen)] = v;
            self(self, v + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    FamilySpec spec;
    spec.tag = FamilyTag::SquaresD;
    spec.r = r;
    spec.d = d;
    return make_family_witness(std::move(f), I, i, p, std::move(spec));
}

VerificationRecord verify_witness(const MonomialIdeal& I, Characteristic chr,
                                  const Witness& w) {
    if (!w.f.homogeneous_degree() || *w.f.homogeneous_degree() != w.degree) {
        throw std::invalid_argument("witness polynomial degree tag mismatch");
    }
    VerificationRecord rec;
    const Polynomial f = reduce_mod_ideal(w.f, I, chr);
    rec.f_nonzero = !f.is_zero();
    const Polynomial product =
        reduce_mod_ideal(multiply_linear(f, ones(I.vars())), I, chr);
    rec.product_zero = product.is_zero();
    rec.hilbert_le = hilbert_inequality_check(I, w.degree);
    return rec;
}

namespace {

// the 3C(r,3) monomials x_u^s x_v x_w with u, v, w distinct, v < w
Polynomial one_high_two_low(int r, int s) {
    Polynomial target;
    for (int u = 0; u < r; ++u) {
        for (int v = 0; v < r; ++v) {
            for (int w = v + 1; w < r; ++w) {
                if (u == v || u == w) continue;
                target.add_term(Monomial::variable(r, u, s)
                                    .times(Monomial::variable(r, v))
                                    .times(Monomial::variable(r, w)),
                                1);
            }
        }
    }
    return target;
}

} // namespace

bool counting_identity_check(int r, IdentityKind kind, int i) {
    switch (kind) {
    case IdentityKind::ThmA: {
        if (r < 3) throw std::invalid_argument("ThmA identity needs r >= 3");
        // products x_i x_m * x_t, t notin {i,m}  vs  3 * (squarefree cubics)
        Polynomial products;
        long count = 0;
        for (int a = 0; a < r; ++a) {
            for (int m = a + 1; m < r; ++m) {
                for (int t = 0; t < r; ++t) {
                    if (t == a || t == m) continue;
                    products.add_term(Monomial::variable(r, a)
                                          .times(Monomial::variable(r, m))
                                          .times(Monomial::variable(r, t)),
                                      1);
                    ++count;
                }
            }
        }
        Polynomial target;
        for (int a = 0; a < r; ++a) {
            for (int b = a + 1; b < r; ++b) {
                for (int c = b + 1; c < r; ++c) {
                    target.add_term(Monomial::variable(r, a)
                                        .times(Monomial::variable(r, b))
                                        .times(Monomial::variable(r, c)),
                                    3);
                }
            }
        }
        const bool counts = Integer(count) == Integer(r - 2) * binomial(r, 2) &&
                            Integer(count) == 3 * binomial(r, 3);
        return counts && products == target;
    }
    case IdentityKind::ThmB:
    case IdentityKind::ThmC: {
        if (kind == IdentityKind::ThmB && r < 3) {
            throw std::invalid_argument("ThmB identity needs r >= 3");
        }
        if (kind == IdentityKind::ThmC && r < 4) {
            throw std::invalid_argument("ThmC identity needs r >= 4");
        }
        // the exponent other than 1 on the pair terms: 2 for Thm B,
        // alpha-2 for Thm C (alpha-independent structure; use alpha = 5)
        const int s = kind == IdentityKind::ThmB ? 2 : 3;
        Polynomial products;
        long count = 0;
        for (int a = 0; a < r; ++a) {
            for (int m = a + 1; m < r; ++m) {
                for (int t = 0; t < r; ++t) {
                    if (t == a || t == m) continue;
                    products.add_term(Monomial::variable(r, a, s)
                                          .times(Monomial::variable(r, m))
                                          .times(Monomial::variable(r, t)),
                                      1);
                    products.add_term(Monomial::variable(r, a)
                                          .times(Monomial::variable(r, m, s))
                                          .times(Monomial::variable(r, t)),
                                      1);
                    count += 2;
                }
            }
        }
        Polynomial target = one_high_two_low(r, s);
        Polynomial doubled;
        for (const auto& [m, c] : target.terms()) doubled.add_term(m, 2 * c);
        const bool counts = Integer(count) == 2 * Integer(r - 2) * binomial(r, 2) &&
                            Integer(count) == 2 * 3 * binomial(r, 3);
        return counts && products == doubled;
    }
    case IdentityKind::Prop: {
        if (i < 1 || i + 1 > r) {
            throw std::invalid_argument("Prop identity needs 1 <= i, i+1 <= r");
        }
        Polynomial products;
        long count = 0;
        std::vector<int> pick(static_cast<std::size_t>(i));
        auto rec = [&](auto&& self, int start, int chosen) -> void {
            if (chosen == i) {
                std::vector<int> e(static_cast<std::size_t>(r), 0);
                for (int idx : pick) e[static_cast<std::size_t>(idx)] = 1;
                const Monomial base(e);
                for (int t = 0; t < r; ++t) {
                    if (e[static_cast<std::size_t>(t)] != 0) continue;
                    products.add_term(base.times_variable(t), 1);
                    ++count;
                }
                return;
            }
            for (int v = start; v <= r - (i - chosen); ++v) {
                pick[static_cast<std::size_t>(chosen)] = v;
                self(self, v + 1, chosen + 1);
            }
        };
        rec(rec, 0, 0);
        Polynomial target;
        std::vector<int> pick2(static_cast<std::size_t>(i) + 1);
        auto rec2 = [&](auto&& self, int start, int chosen) -> void {
            if (chosen == i + 1) {
                std::vector<int> e(static_cast<std::size_t>(r), 0);
                for (int idx : pick2) e[static_cast<std::size_t>(idx)] = 1;
                target.add_term(Monomial(std::move(e)), i + 1);
                return;
            }
            for (int v = start; v <= r - (i + 1 - chosen); ++v) {
                pick2[static_cast<std::size_t>(chosen)] = v;
                self(self, v + 1, chosen + 1);
            }
        };
        rec2(rec2, 0, 0);
        const bool counts =
            Integer(count) == Integer(r - i) * binomial(r, static_cast<unsigned>(i)) &&
            Integer(count) ==
                Integer(i + 1) * binomial(r, static_cast<unsigned>(i) + 1);
        return counts && products == target;
    }
    }
    throw std::logic_error("unreachable");
}

std::set<std::uint32_t> failing_primes_squares(int r) {
    if (r < 2) throw std::invalid_argument("failing_primes_squares needs r >= 2");
    std::set<std::uint32_t> out;
    const int bound = (r + 1) / 2 + 1; // ceil(r/2) + 1
    for (int p = 2; p <= bound; ++p) {
        if (is_prime(static_cast<std::uint64_t>(p))) out.insert(static_cast<std::uint32_t>(p));
    }
    return out;
}

bool hilbert_inequality_check(const MonomialIdeal& I, int t) {
    if (t < 0) throw std::invalid_argument("negative degree");
    const auto bt = standard_basis(I, t);
    const auto bt1 = standard_basis(I, t + 1);
    return bt.size() <= bt1.size();
}

namespace {

// Symmetric lift of an F_p residue vector to small integers.
std::vector<Rational> symmetric_lift(const std::vector<Rational>& v, std::uint32_t p) {
    std::vector<Rational> out(v.size());
    const Integer half = Integer(p) / 2;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer x(v[i].get_num());
        if (x > half) x -= p;
        out[i] = Rational(x);
    }
    return out;
}

// One-prime maximality decision for an integral char-0 matrix.  An empty
// F_p kernel of the thin side certifies maximal rank over Q; a nonzero F_p
// kernel vector that lifts symmetrically to an exact integer kernel vector
// certifies non-maximality.  Returns nullopt when the prime decides nothing
// (rank mod p below rank over Q and no kernel vector lifts).
std::optional<bool> decide_maximal_mod(const MonomialIdeal& I, const GradedBasis& from,
                                       const GradedBasis& to, const ExactMatrix& m0,
                                       std::uint32_t p) {
    const bool need_injective = from.size() <= to.size();
    const ExactMatrix mp =
        build_mult_matrix(I, from, to, ones(I.vars()), Characteristic::prime(p));
    const ExactMatrix side_p = need_injective ? mp : mp.transpose();
    const auto kernel = side_p.kernel_basis();
    if (kernel.empty()) return true; // full rank mod p => full rank over Q
    const ExactMatrix side_0 = need_injective ? m0 : m0.transpose();
    for (const auto& kv : kernel) {
        const auto lifted = symmetric_lift(kv, p);
        bool nonzero = false;
        for (const auto& x : lifted) nonzero = nonzero || x != 0;
        if (nonzero && side_0.is_zero_vector_product(lifted)) return false;
    }
    return std::nullopt;
}

} // namespace

SurveyResult wlp_survey(const MonomialIdeal& I, Characteristic chr,
                        const SurveyOptions& opts) {
    if (!I.is_artinian()) throw std::invalid_argument("wlp_survey requires an Artinian ideal");
    SurveyResult result;
    const std::vector<Integer> ell = ones(I.vars());

    auto limited = [&](int t) { return standard_basis_limited(I, t, opts.max_dim); };

    std::optional<GradedBasis> from = limited(0);
    if (!from) { // cannot even start
        result.status = SurveyStatus::Capped;
        result.capped_at = 0;
        return result;
    }
    for (int t = 0;; ++t) {
        std::optional<GradedBasis> to = limited(t + 1);
        if (!to) {
            result.status = SurveyStatus::Capped;
            result.capped_at = t + 1;
            return result;
        }
        if (to->monomials.empty()) break; // reached past the socle degree
        SurveyRow row;
        row.t = t;
        row.h_t = static_cast<long>(from->size());
        row.h_t1 = static_cast<long>(to->size());
        const long full = std::min(row.h_t, row.h_t1);

        if (!chr.is_zero()) {
            const ExactMatrix M = build_mult_matrix(I, *from, *to, ell, chr);
            row.rank = static_cast<long>(M.rank());
            row.maximal = *row.rank == full;
        } else {
            const ExactMatrix M = build_mult_matrix(I, *from, *to, ell, chr);
            bool decided = false;
            // cheap first probe: bit-packed rank mod 2 certifies full rank
            if (static_cast<long>(M.rank_mod_prime(2)) == full) {
                row.rank = full;
                row.maximal = true;
                decided = true;
            }
            for (std::uint32_t p : {65521u, 1000003u}) {
                if (decided) break;
                if (auto maximal = decide_maximal_mod(I, *from, *to, M, p)) {
                    row.maximal = *maximal;
                    if (*maximal) row.rank = full;
                    decided = true;
                }
            }
            if (!decided) {
                row.rank = static_cast<long>(M.rank());
                row.maximal = *row.rank == full;
            }
        }
        result.rows.push_back(row);
        if (!row.maximal) {
            if (!result.first_failure) result.first_failure = t;
            result.status = SurveyStatus::Fails;
            if (opts.stop_at_first_failure) return result;
        }
        from = std::move(to);
    }
    if (result.status != SurveyStatus::Fails) result.status = SurveyStatus::Holds;
    return result;
}

} // namespace lefschetz
