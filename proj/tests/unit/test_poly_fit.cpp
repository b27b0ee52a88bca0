#include "doctest.h"

#include "jetalg/ideals.hpp"
#include "jetalg/poly_fit.hpp"
#include "jetalg/suites.hpp"

using namespace jetalg;

namespace {

const Rational half = make_rational(1, 2);

const RoundtripStage &stage(const RoundtripReport &r, const std::string &name) {
    for (const auto &s : r.stages)
        if (s.name == name)
            return s;
    throw Error("no stage " + name);
}

} // namespace

TEST_CASE("fit grid and holdout") {
    CHECK(fit_grid(1).size() == 9);
    CHECK(fit_holdout(1).size() == 6);
    const auto probes = default_probe_points();
    CHECK(probes.size() == 20);
    for (std::int64_t d = 0; d <= 6; ++d) {
        const auto g = fit_grid(d), h = fit_holdout(d);
        for (const auto &p : probes) {
            CHECK_FALSE(p.is_zero());
            CHECK(std::find(g.begin(), g.end(), p) == g.end());
            CHECK(std::find(h.begin(), h.end(), p) == h.end());
        }
    }
}

TEST_CASE("fit of simple families") {
    const auto id = [](LatticePoint) { return QMatrix::identity(2); };
    const PolyOperatorFamily c = fit_family(id, 0, 2);
    CHECK(c.coeffs.size() == 1);
    CHECK(c.coeffs.at({0, 0}) == QMatrix::identity(2));
    CHECK(c.degree() == 0);

    const auto m1m2 = [](LatticePoint m) { return Rational(m.m1 * m.m2) * QMatrix::identity(1); };
    const PolyOperatorFamily p = fit_family(m1m2, 3, 1);
    CHECK(p.coeffs.size() == 1);
    CHECK(p.coeffs.at({1, 1}) == QMatrix::identity(1));
    CHECK(p.degree() == 2);

    // m1^2 / 2! has D_(2,0) = 1.
    const auto sq = [](LatticePoint m) { return Rational(m.m1 * m.m1) * QMatrix::identity(1); };
    CHECK(fit_family(sq, 2, 1).coeffs.at({2, 0}) == QMatrix{{2}});

    const auto zero = [](LatticePoint) { return QMatrix::zero(2, 2); };
    CHECK(fit_family(zero, 3, 2).coeffs.empty());
    CHECK(fit_family(zero, 3, 2).degree() == -1);
}

TEST_CASE("fit failures report the offending point") {
    const auto cubic = [](LatticePoint m) { return Rational(m.m1 * m.m1 * m.m1) * QMatrix::identity(1); };
    try {
        fit_family(cubic, 2, 1);
        FAIL("expected a FitError");
    } catch (const FitError &e) {
        CHECK(e.cap == 2);
        CHECK_FALSE(e.residual.is_zero());
    }
    // Not polynomial at all.
    const auto wild = [](LatticePoint m) { return Rational(m.m1 > 0 ? 1 : 0) * QMatrix::identity(1); };
    CHECK_THROWS_AS(fit_family(wild, 6, 1), FitError);
    CHECK_THROWS_AS(fit_family(cubic, -1, 1), Error);
}

TEST_CASE("fit recovers random polynomial families") {
    Rng rng(81);
    for (int t = 0; t < 20; ++t) {
        PolyOperatorFamily f;
        f.dim = 2;
        const auto deg = rng.uniform(0, 4);
        for (std::int64_t a = 0; a <= deg; ++a)
            for (std::int64_t b = 0; a + b <= deg; ++b)
                if (rng.uniform(0, 2) == 0) {
                    QMatrix c(2, 2);
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j)
                            c(i, j) = rng.rational(3, 2);
                    if (!c.is_zero())
                        f.coeffs[{a, b}] = c;
                }
        const auto sampler = [&](LatticePoint m) { return f.evaluate(m); };
        const PolyOperatorFamily g = fit_family(sampler, 4, 2);
        CHECK(g == f);
        CHECK(verify_fit(g, sampler, default_probe_points()));
    }
}

TEST_CASE("verify_fit") {
    PolyOperatorFamily f;
    f.dim = 1;
    f.coeffs[{1, 0}] = QMatrix{{1}};
    const auto m1 = [](LatticePoint m) { return QMatrix{{Rational(m.m1)}}; };
    CHECK(verify_fit(f, m1, {{-5, 7}}));
    PolyOperatorFamily d0;
    d0.dim = 1;
    d0.coeffs[{0, 0}] = QMatrix{{1}};
    CHECK_FALSE(verify_fit(d0, m1, {{2, 0}}));
    PolyOperatorFamily empty;
    empty.dim = 2;
    CHECK(verify_fit(empty, [](LatticePoint) { return QMatrix::zero(2, 2); }, default_probe_points()));
}

TEST_CASE("check_bplus_relations") {
    PolyOperatorFamily f;
    f.dim = 2;
    const BPlusRep rep = bplus_from_sl2(sl2_irrep(1), {half, 0});
    for (const auto &[i, g] : rep.gens())
        f.coeffs[i] = g;
    CHECK(check_bplus_relations(f));
    f.coeffs[{1, 1}] = QMatrix::identity(2);
    CHECK_FALSE(check_bplus_relations(f));
}

TEST_CASE("roundtrip on F-specs") {
    const RoundtripReport r = theorem51_roundtrip(make_f_spec({0, 0}, 1, sl2_irrep(2)), 4);
    CHECK(r.pass());
    REQUIRE(r.family.has_value());
    CHECK(r.family->degree() == 2);
    CHECK(r.family->coeffs.size() == 3);
    CHECK(stage(r, "closed-form").pass);

    for (const auto &spec : reference_f_specs()) {
        const RoundtripReport s = theorem51_roundtrip(spec, 6);
        CHECK(s.pass());
        REQUIRE(s.family.has_value());
        CHECK(s.family->coeffs.count({0, 0}) == 0);
        // Degree 2 when U is nontrivial, 1 when only alpha contributes, -1 for the zero family.
        const bool alpha_zero = sgn(spec.f().alpha.first) == 0 && sgn(spec.f().alpha.second) == 0;
        const std::int64_t expected = spec.dim() > 1 ? 2 : (alpha_zero ? -1 : 1);
        CHECK(s.family->degree() == expected);
    }
}

TEST_CASE("roundtrip on B-specs") {
    const JetModuleSpec b = make_b_spec(2, truncated_adjoint_rep(3, 1, half));
    const RoundtripReport r = theorem51_roundtrip(b, 6);
    CHECK(r.pass());
    REQUIRE(r.family.has_value());
    CHECK(r.family->degree() == 3);
    CHECK(stage(r, "generators").pass);

    const RoundtripReport low = theorem51_roundtrip(b, 1);
    CHECK_FALSE(low.pass());
    CHECK_FALSE(stage(low, "fit").pass);

    Rng rng(82);
    for (int t = 0; t < 5; ++t) {
        const JetModuleSpec s = make_b_spec(rng.nonzero_rational(), random_bplus_rep(rng, true));
        CHECK(theorem51_roundtrip(s, 6).pass());
    }
}

TEST_CASE("alternating sums of extracted operators vanish above the degree") {
    for (const auto &spec : reference_f_specs())
        for (std::int64_t s = -2; s <= 2; ++s) {
            CHECK(operator_difference(spec, s, 3).is_zero());
            CHECK(operator_difference(spec, s, 4).is_zero());
        }
    // With a nontrivial sl2 part the second difference is the constant -2e.
    const JetModuleSpec s = make_f_spec({0, 0}, 1, sl2_irrep(1));
    CHECK(operator_difference(s, 0, 2) == Rational(-2) * sl2_irrep(1).e());
    const JetModuleSpec b = make_b_spec(1, truncated_adjoint_rep(3, 0, 0));
    CHECK_FALSE(operator_difference(b, 0, 3).is_zero());
    CHECK(operator_difference(b, 0, 4).is_zero());
}
