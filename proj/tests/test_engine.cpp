#include <doctest.h>

#include <random>

#include "lefschetz/engine.hpp"
#include "test_oracles.hpp"

using namespace lefschetz;

namespace {

MonomialIdeal power_ideal(int r, int p) {
    std::vector<Monomial> gens;
    for (int i = 0; i < r; ++i) gens.push_back(Monomial::variable(r, i, p));
    return MonomialIdeal(RingContext(r), std::move(gens));
}

} // namespace

TEST_CASE("h_vector pinned examples") {
    CHECK(h_vector(family_mixed({4, 4, 3, 3, 2}, 5)).values ==
          std::vector<long>{1, 5, 14, 28, 43, 52, 49, 35, 18, 6, 1});
    CHECK(h_vector(family_J(4, 5)).values ==
          std::vector<long>{1, 4, 10, 20, 35, 40, 26, 8, 1});
    CHECK(h_vector(family_squares(4, 3)).values == std::vector<long>{1, 4, 6});
    // h_i = C(r,i) for the squares family, socle degree d-1
    const auto h = h_vector(family_squares(7, 5));
    REQUIRE(h.socle_degree() == 4);
    for (int i = 0; i <= 4; ++i) {
        CHECK(Integer(h.at(i)) == binomial(7, static_cast<unsigned>(i)));
    }
}

TEST_CASE("total dimension equals the standard monomial count") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const auto I = testing::random_artinian_ideal(rng, 4, 4);
        const auto h = h_vector(I);
        long direct = 0;
        for (int t = 0; t <= I.socle_degree_bound(); ++t) {
            direct += static_cast<long>(standard_basis(I, t).size());
        }
        CHECK(total_dimension(h) == direct);
    }
}

TEST_CASE("socle") {
    SUBCASE("squares family is level with socle degree d-1") {
        for (int r = 3; r <= 7; ++r) {
            for (int d = 2; d <= std::min(r, 5); ++d) {
                const auto info = socle(family_squares(r, d));
                CHECK(info.is_level);
                CHECK(info.socle_degree == d - 1);
            }
        }
    }
    SUBCASE("(x^2, y^2): level, socle spanned by xy in degree 2") {
        const auto info = socle(power_ideal(2, 2));
        CHECK(info.is_level);
        CHECK(info.socle_degree == 2);
        CHECK(info.per_degree == std::vector<long>{0, 0, 1});
    }
    SUBCASE("(x^3, x*y, y^2): x^2 and y in the socle, not level") {
        const MonomialIdeal I(RingContext(2),
                              {Monomial({3, 0}), Monomial({1, 1}), Monomial({0, 2})});
        const auto info = socle(I);
        CHECK_FALSE(info.is_level);
        CHECK(info.per_degree == std::vector<long>{0, 1, 1});
    }
    SUBCASE("dim U_e = h_e always") {
        std::mt19937 rng(41);
        for (int trial = 0; trial < 8; ++trial) {
            const auto I = testing::random_artinian_ideal(rng, 4, 3);
            const auto info = socle(I);
            const auto h = h_vector(I);
            CHECK(info.per_degree.back() == h.values.back());
        }
    }
}

TEST_CASE("socle agrees with the kernel-intersection oracle") {
    // dim of the intersection of the kernels of the r single-variable maps
    auto socle_dim_by_kernels = [](const MonomialIdeal& I, int t) {
        const auto from = standard_basis(I, t);
        const auto to = standard_basis(I, t + 1);
        const int r = I.vars();
        ExactMatrix stacked(Characteristic::zero(), to.size() * static_cast<std::size_t>(r),
                            from.size());
        for (int j = 0; j < r; ++j) {
            std::vector<Integer> e(static_cast<std::size_t>(r), Integer(0));
            e[static_cast<std::size_t>(j)] = 1;
            const auto M = build_mult_matrix(I, from, to, e, Characteristic::zero());
            for (std::size_t a = 0; a < M.rows(); ++a) {
                for (std::size_t b = 0; b < M.cols(); ++b) {
                    if (M.entry(a, b) != 0) {
                        stacked.add_entry(static_cast<std::size_t>(j) * to.size() + a, b,
                                          Integer(M.entry(a, b).get_num()));
                    }
                }
            }
        }
        return static_cast<long>(stacked.kernel_basis().size());
    };
    for (const auto& I :
         {family_squares(5, 3), family_mixed({4, 4, 3, 3, 2}, 5),
          MonomialIdeal(RingContext(2),
                        {Monomial({3, 0}), Monomial({1, 1}), Monomial({0, 2})})}) {
        const auto info = socle(I);
        for (int t = 0; t <= info.socle_degree; ++t) {
            CHECK(info.per_degree[static_cast<std::size_t>(t)] ==
                  socle_dim_by_kernels(I, t));
        }
    }
}

TEST_CASE("wlp_check classical sanity") {
    SUBCASE("(x^2,y^2) holds at char 2") {
        const auto rep = wlp_check(power_ideal(2, 2), Characteristic::prime(2));
        CHECK(rep.verdict == Verdict::Holds);
    }
    SUBCASE("(x^2,y^2,z^2) fails at t=1 at char 2") {
        const auto rep = wlp_check(power_ideal(3, 2), Characteristic::prime(2));
        CHECK(rep.verdict == Verdict::Fails);
        CHECK(rep.first_failure == 1);
        REQUIRE(rep.witness.has_value());
        // kernel witness is x+y+z
        CHECK(rep.witness->term_count() == 3);
    }
    SUBCASE("mixed 3^5 d=4 fails at t=2 at char 3") {
        const auto rep =
            wlp_check(family_mixed({3, 3, 3, 3, 3}, 4), Characteristic::prime(3));
        CHECK(rep.verdict == Verdict::Fails);
        CHECK(rep.first_failure == 2);
        CHECK(rep.rows[2].rank == 14);
        CHECK(rep.rows[2].h_t == 15);
    }
}

TEST_CASE("wlp_check Example 1 pinned ranks") {
    const auto I = family_mixed({4, 4, 3, 3, 2}, 5);
    const auto rep2 = wlp_check(I, Characteristic::prime(2));
    CHECK(rep2.verdict == Verdict::Fails);
    CHECK(rep2.first_failure == 3);
    CHECK(rep2.rows[3].rank == 27);
    CHECK(rep2.rows[3].h_t == 28);
    CHECK(rep2.rows[3].h_t1 == 43);
    REQUIRE(rep2.witness.has_value());
    // the attached kernel element is a genuine witness
    Witness w;
    w.f = *rep2.witness;
    w.degree = 3;
    w.claimed_char = Characteristic::prime(2);
    const auto v = verify_witness(I, Characteristic::prime(2), w);
    CHECK(v.concludes_failure());

    const auto rep0 = wlp_check(I, Characteristic::zero());
    CHECK(rep0.rows[3].rank == 28);
    CHECK(rep0.rows[3].maximal);
}

TEST_CASE("wlp verdict matches per-row maximality (random ideals)") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        const auto I = testing::random_artinian_ideal(rng, 3, 3);
        for (const auto chr : {Characteristic::zero(), Characteristic::prime(2)}) {
            const auto rep = wlp_check(I, chr);
            bool all_max = true;
            for (const auto& row : rep.rows) all_max = all_max && row.maximal;
            CHECK((rep.verdict == Verdict::Holds) == all_max);
        }
    }
}

TEST_CASE("slp_check") {
    SUBCASE("(x^2,y^2) char 0 holds") {
        CHECK(slp_check(power_ideal(2, 2), Characteristic::zero()).verdict ==
              Verdict::Holds);
    }
    SUBCASE("(x^2,y^2,z^2) char 0 holds") {
        CHECK(slp_check(power_ideal(3, 2), Characteristic::zero()).verdict ==
              Verdict::Holds);
    }
    SUBCASE("(x^3,y^3,z^3) char 3 fails") {
        const auto rep = slp_check(power_ideal(3, 3), Characteristic::prime(3));
        CHECK(rep.verdict == Verdict::Fails);
    }
    SUBCASE("d=1 rows match wlp ranks") {
        const auto I = family_squares(5, 4);
        const auto srep = slp_check(I, Characteristic::prime(3));
        const auto wrep = wlp_check(I, Characteristic::prime(3));
        for (const auto& row : srep.rows) {
            if (row.d != 1) continue;
            CHECK(row.rank == wrep.rows[static_cast<std::size_t>(row.i)].rank);
        }
    }
}

TEST_CASE("witness_thmA") {
    SUBCASE("r=4 all alphas 3: squares coeff 1, pairs coeff 2 (= -1 mod 3)") {
        const auto w = witness_thmA({3, 3, 3, 3}, 4);
        CHECK(w.degree == 2);
        CHECK(w.claimed_char.value() == 3);
        CHECK_FALSE(w.degenerate);
        for (int i = 0; i < 4; ++i) {
            CHECK(w.f.coefficient(Monomial::variable(4, i, 2)) == 1);
            for (int m = i + 1; m < 4; ++m) {
                CHECK(w.f.coefficient(Monomial::variable(4, i).times(
                          Monomial::variable(4, m))) == 2);
            }
        }
        // equals ell^2 reduced mod (I,3): the expansion-oracle route
        Polynomial one_poly(0);
        one_poly.add_term(Monomial::one(4), 1);
        const Polynomial ell = multiply_linear(one_poly, ones(4));
        const Polynomial ell2 = multiply_linear(ell, ones(4));
        const auto I = family_mixed({3, 3, 3, 3}, 4);
        CHECK(reduce_mod_ideal(ell2, I, Characteristic::prime(3)) == w.f);
    }
    SUBCASE("all alphas 2: squares die, only pair terms remain") {
        const auto w = witness_thmA({2, 2, 2, 2, 2}, 4);
        CHECK(w.f.term_count() == 10); // C(5,2) pairs
        for (const auto& [m, c] : w.f.terms()) {
            CHECK(m.support_size() == 2);
            CHECK(c == 2); // -1 mod 3
        }
    }
    SUBCASE("verifies for r=5, alphas=3, d=4 at char 3; fails check at char 5") {
        const auto w = witness_thmA({3, 3, 3, 3, 3}, 4);
        const auto I = family_mixed({3, 3, 3, 3, 3}, 4);
        const auto ok = verify_witness(I, Characteristic::prime(3), w);
        CHECK(ok.f_nonzero);
        CHECK(ok.product_zero);
        CHECK(ok.hilbert_le);
        const auto bad = verify_witness(I, Characteristic::prime(5), w);
        CHECK(bad.f_nonzero);
        CHECK_FALSE(bad.product_zero);
    }
    SUBCASE("exceptional case r=d=4, all alphas 2: h_2 > h_3 blocks the conclusion") {
        const auto w = witness_thmA({2, 2, 2, 2}, 4);
        const auto I = family_mixed({2, 2, 2, 2}, 4);
        const auto v = verify_witness(I, Characteristic::prime(3), w);
        CHECK_FALSE(v.hilbert_le); // h_2 = 6 > h_3 = 4
        CHECK_FALSE(v.concludes_failure());
    }
    CHECK_THROWS_AS(witness_thmA({4, 3, 3, 3}, 4), std::invalid_argument);
    CHECK_THROWS_AS(witness_thmA({3, 3, 3, 3}, 3), std::invalid_argument);
}

TEST_CASE("witness_thmB") {
    SUBCASE("verifies on Example 1's ideal at char 2, t=3") {
        const auto w = witness_thmB({4, 4, 3, 3, 2}, 5);
        CHECK(w.degree == 3);
        CHECK(w.claimed_char.value() == 2);
        const auto I = family_mixed({4, 4, 3, 3, 2}, 5);
        const auto v = verify_witness(I, Characteristic::prime(2), w);
        CHECK(v.f_nonzero);
        CHECK(v.product_zero);
        CHECK(v.hilbert_le);
    }
    SUBCASE("r=5 all alphas 4 keeps cubes and pair terms") {
        const auto w = witness_thmB({4, 4, 4, 4, 4}, 5);
        for (int a = 0; a < 5; ++a) {
            CHECK(w.f.coefficient(Monomial::variable(5, a, 3)) == 1);
        }
        CHECK(w.f.term_count() == 5 + 20); // cubes + ordered pairs
    }
    SUBCASE("all alphas 2 is degenerate") {
        const auto w = witness_thmB({2, 2, 2, 2, 2}, 5);
        CHECK(w.degenerate);
        CHECK(w.f.is_zero());
        const auto I = family_mixed({2, 2, 2, 2, 2}, 5);
        CHECK_FALSE(verify_witness(I, Characteristic::prime(2), w).f_nonzero);
    }
    CHECK_THROWS_AS(witness_thmB({4, 4, 4, 4, 4}, 4), std::invalid_argument);
}

TEST_CASE("witness_thmC") {
    SUBCASE("r=4 alpha=5 term shapes before/after reduction") {
        const auto w = witness_thmC(4, 5);
        CHECK(w.degree == 4);
        // x_i^4 survives mod J (generators are x_i^5, x_i^3 x_m^2, x_i^2 x_m^3)
        for (int a = 0; a < 4; ++a) {
            CHECK(w.f.coefficient(Monomial::variable(4, a, 4)) == 1);
            for (int b = 0; b < 4; ++b) {
                if (a == b) continue;
                CHECK(w.f.coefficient(Monomial::variable(4, a, 3).times(
                          Monomial::variable(4, b))) == 1);
            }
        }
    }
    SUBCASE("verifies at char 2 for the criterion grid") {
        for (int r : {4, 5}) {
            for (int alpha : {5, 6, 7}) {
                const auto w = witness_thmC(r, alpha);
                const auto J = family_J(r, alpha);
                const auto v = verify_witness(J, Characteristic::prime(2), w);
                CHECK(v.concludes_failure());
            }
        }
    }
    CHECK_THROWS_AS(witness_thmC(3, 5), std::invalid_argument);
}

TEST_CASE("witness_prop") {
    SUBCASE("r=4 d=3 i=1: f = x1+x2+x3+x4, claimed char 2") {
        const auto w = witness_prop(4, 3, 1);
        CHECK(w.claimed_char.value() == 2);
        CHECK(w.f.term_count() == 4);
        const auto I = family_squares(4, 3);
        CHECK(verify_witness(I, Characteristic::prime(2), w).concludes_failure());
    }
    SUBCASE("r=6 d=4 i=2: claimed char 3, coefficient 3 on cubics") {
        const auto w = witness_prop(6, 4, 2);
        CHECK(w.claimed_char.value() == 3);
        const auto I = family_squares(6, 4);
        // over the integers every squarefree cubic in f*ell has coefficient 3
        const Polynomial prod =
            reduce_mod_ideal(multiply_linear(w.f, ones(6)), I, Characteristic::zero());
        for (const auto& [m, c] : prod.terms()) CHECK(c == 3);
        CHECK(verify_witness(I, Characteristic::prime(3), w).concludes_failure());
    }
    SUBCASE("i = 0 rejected") {
        CHECK_THROWS_AS(witness_prop(4, 3, 0), std::invalid_argument);
    }
    SUBCASE("i > d-2 rejected") {
        CHECK_THROWS_AS(witness_prop(10, 3, 2), std::invalid_argument);
    }
}

TEST_CASE("witness soundness: all-true verification implies engine failure") {
    struct Case {
        Witness w;
        MonomialIdeal I;
    };
    std::vector<Case> cases;
    cases.push_back({witness_thmA({3, 3, 3, 3, 3}, 4), family_mixed({3, 3, 3, 3, 3}, 4)});
    cases.push_back({witness_thmB({4, 4, 3, 3, 2}, 5), family_mixed({4, 4, 3, 3, 2}, 5)});
    cases.push_back({witness_thmC(4, 5), family_J(4, 5)});
    cases.push_back({witness_prop(5, 4, 1), family_squares(5, 4)});
    for (const auto& c : cases) {
        const auto v = verify_witness(c.I, c.w.claimed_char, c.w);
        REQUIRE(v.concludes_failure());
        const auto rep = wlp_check(c.I, c.w.claimed_char);
        CHECK(rep.verdict == Verdict::Fails);
        bool failed_at_degree = false;
        for (const auto& row : rep.rows) {
            if (row.t == c.w.degree) failed_at_degree = !row.maximal;
        }
        CHECK(failed_at_degree);
    }
}

TEST_CASE("counting identities") {
    CHECK(counting_identity_check(6, IdentityKind::ThmA));  // 60 = 3*C(6,3)
    CHECK(counting_identity_check(5, IdentityKind::ThmB));  // 2*3*C(5,2) = 60
    CHECK(counting_identity_check(5, IdentityKind::ThmC));
    CHECK(counting_identity_check(5, IdentityKind::Prop, 2)); // 30 = 3*C(5,3)
    for (int r = 3; r <= 12; ++r) {
        CHECK(counting_identity_check(r, IdentityKind::ThmA));
        CHECK(counting_identity_check(r, IdentityKind::ThmB));
        if (r >= 4) CHECK(counting_identity_check(r, IdentityKind::ThmC));
        for (int i = 1; i <= (r + 1) / 2 && i + 1 <= r; ++i) {
            CHECK(counting_identity_check(r, IdentityKind::Prop, i));
        }
    }
}

TEST_CASE("failing_primes_squares") {
    CHECK(failing_primes_squares(4) == std::set<std::uint32_t>{2, 3});
    CHECK(failing_primes_squares(10) == std::set<std::uint32_t>{2, 3, 5});
    CHECK(failing_primes_squares(2) == std::set<std::uint32_t>{2});
}

TEST_CASE("hilbert_inequality_check") {
    CHECK(hilbert_inequality_check(family_mixed({4, 4, 3, 3, 2}, 5), 3)); // 28 <= 43
    CHECK(hilbert_inequality_check(family_J(4, 5), 4));                    // 35 <= 40
    CHECK_FALSE(hilbert_inequality_check(family_squares(4, 3), 2));        // 6 > 0
}

TEST_CASE("multiply_linear + reduce equals the matrix action") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> cdist(-5, 5);
    for (const auto& I : {family_squares(4, 3), family_mixed({4, 3, 2, 3, 4}, 4)}) {
        for (const auto chr : {Characteristic::zero(), Characteristic::prime(3)}) {
            const int t = 1;
            const auto from = standard_basis(I, t);
            const auto to = standard_basis(I, t + 1);
            const auto M = build_mult_matrix(I, from, to, ones(I.vars()), chr);
            Polynomial f(t);
            std::vector<Integer> coords(from.size());
            for (std::size_t j = 0; j < from.size(); ++j) {
                coords[j] = cdist(rng);
                f.add_term(from.monomials[j], coords[j]);
            }
            const Polynomial image =
                reduce_mod_ideal(multiply_linear(f, ones(I.vars())), I, chr);
            // compare coordinates against M * coords
            for (std::size_t i = 0; i < to.size(); ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < from.size(); ++j) {
                    acc += M.entry(i, j) * Rational(coords[j]);
                }
                Integer expect(acc.get_num());
                if (!chr.is_zero()) expect = residue_mod(expect, chr.value());
                CHECK(image.coefficient(to.monomials[i]) == expect);
            }
        }
    }
}

TEST_CASE("surjectivity tail for the squares family, r <= 10") {
    // once x(ell) is surjective at i = ceil(r/2), it stays surjective above
    for (int r = 4; r <= 10; ++r) {
        for (int d = 3; d <= std::min(r, 6); ++d) {
            const auto I = family_squares(r, d);
            const auto rep = wlp_check(I, Characteristic::zero());
            const int half = (r + 1) / 2;
            bool surjective_at_half = false;
            for (const auto& row : rep.rows) {
                if (row.t == half) surjective_at_half = row.rank == row.h_t1;
            }
            if (!surjective_at_half) continue;
            for (const auto& row : rep.rows) {
                if (row.t > half) CHECK(row.rank == row.h_t1);
            }
        }
    }
}

TEST_CASE("wlp_survey matches wlp_check on small ideals") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 8; ++trial) {
        const auto I = testing::random_artinian_ideal(rng, 4, 3);
        for (const auto chr :
             {Characteristic::zero(), Characteristic::prime(2), Characteristic::prime(3)}) {
            const auto rep = wlp_check(I, chr);
            SurveyOptions opts;
            opts.stop_at_first_failure = false;
            const auto survey = wlp_survey(I, chr, opts);
            CHECK((survey.status == SurveyStatus::Fails) ==
                  (rep.verdict == Verdict::Fails));
            CHECK(survey.first_failure == rep.first_failure);
            REQUIRE(survey.rows.size() == rep.rows.size());
            for (std::size_t i = 0; i < survey.rows.size(); ++i) {
                CHECK(survey.rows[i].maximal == rep.rows[i].maximal);
                if (survey.rows[i].rank) CHECK(*survey.rows[i].rank == rep.rows[i].rank);
            }
        }
    }
    SUBCASE("capped status on a tiny cap") {
        SurveyOptions opts;
        opts.max_dim = 10;
        const auto res =
            wlp_survey(family_mixed({4, 4, 3, 3, 2}, 5), Characteristic::prime(2), opts);
        CHECK(res.status == SurveyStatus::Capped);
        CHECK(res.capped_at == 2); // h_2 = 14 > 10
    }
}

TEST_CASE("dimension cap raises in wlp_check") {
    CheckOptions opts;
    opts.max_dim = 10;
    CHECK_THROWS_AS(
        wlp_check(family_mixed({4, 4, 3, 3, 2}, 5), Characteristic::prime(2), opts),
        DimensionCapExceeded);
}
