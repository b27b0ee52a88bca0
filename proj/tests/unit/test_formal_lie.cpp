#include "doctest.h"

#include <sstream>

#include "jetalg/lie.hpp"
#include "jetalg/random.hpp"

using namespace jetalg;

namespace {

GElement d(std::int64_t a, std::int64_t b, Rational c = 1) { return GElement::basis({a, b}, c); }
AElement t(std::int64_t a, std::int64_t b, Rational c = 1) { return AElement::basis({a, b}, c); }
LElement L(std::int64_t a, std::int64_t b, Rational c = 1) { return LElement::basis({a, b}, c); }
BPlusElement D(std::int64_t a, std::int64_t b, Rational c = 1) { return BPlusElement::basis({a, b}, c); }

// d_m as the derivation t^m (m2 t1 d/dt1 - m1 t2 d/dt2), written out on monomials.
AElement derive(const GElement &x, const AElement &f) {
    AElement out;
    for (const auto &[m, a] : x)
        for (const auto &[n, b] : f)
            out.add(m + n, a * b * Rational(m.m2 * n.m1 - m.m1 * n.m2));
    return out;
}

} // namespace

TEST_CASE("formal sums drop zero coefficients and canonicalize") {
    LElement x = L(1, 0) + L(0, 1) - L(1, 0);
    CHECK(x == L(0, 1));
    CHECK(x.size() == 1);
    CHECK((L(2, 1) - L(2, 1)).is_zero());
    CHECK((Rational(0) * L(2, 1)).is_zero());
    CHECK(L(0, 1, 3) + L(1, 0) == L(1, 0) + L(0, 1, 3));
    CHECK_THROWS_AS(L(0, 0), Error);
    CHECK_THROWS_AS(d(0, 0), Error);
    CHECK_NOTHROW(t(0, 0));
    std::ostringstream os;
    os << L(1, 1) - L(1, 0, make_rational(1, 2));
    CHECK(os.str() == "-1/2*L(1,0) + L(1,1)");
}

TEST_CASE("bracket on G") {
    CHECK(bracket_g(d(1, 0), d(0, 1)) == d(1, 1, -1));
    CHECK(bracket_g(d(1, 2), d(2, 4)).is_zero());
    CHECK(bracket_g(d(1, 1), d(1, 0)) == d(2, 1));
    CHECK(bracket_g(d(1, 1), d(-1, -1)).is_zero());
}

TEST_CASE("G acting on A") {
    CHECK(g_action_on_a(d(1, 0), t(0, 1)) == t(1, 1, -1));
    CHECK(g_action_on_a(d(1, 0), t(-1, 0)).is_zero());
    CHECK(g_action_on_a(d(0, 1), t(0, 0)).is_zero());
}

TEST_CASE("semidirect bracket") {
    CHECK(bracket_semidirect({d(1, 0), {}}, {{}, t(0, 1)}) == GAElement{{}, t(1, 1, -1)});
    CHECK(bracket_semidirect({{}, t(1, 0)}, {{}, t(0, 1)}).is_zero());
    CHECK(bracket_semidirect({d(1, 0), t(1, 0)}, {d(0, 1), t(0, 1)}) == GAElement{d(1, 1, -1), t(1, 1, -2)});
}

TEST_CASE("bracket on L") {
    CHECK(bracket_l(L(1, 0, -1), L(0, 1)) == L(1, 1) - L(1, 0) - L(0, 1));
    CHECK(bracket_l(L(1, 1) - L(1, 0) - L(0, 1), L(1, 0, -1)) == L(2, 1, -1) + L(1, 1, 2) - L(0, 1));
    CHECK(bracket_l(L(2, 1), L(4, 2)).is_zero());
    // m + n = 0: det vanishes, so L(0,0) is never produced.
    CHECK(bracket_l(L(2, 3), L(-2, -3)).is_zero());
}

TEST_CASE("bracket on B_+") {
    CHECK(bracket_bplus(D(1, 1), D(2, 0)) == D(2, 0, 2));
    CHECK(bracket_bplus(D(0, 2), D(2, 0)) == D(1, 1, 4));
    CHECK(bracket_bplus(D(0, 0), D(2, 0)).is_zero());
    CHECK(bracket_bplus(D(1, 2), D(3, 1)) == D(3, 2, 5));
    CHECK(bracket_bplus(D(1, 0), D(0, 1)) == D(0, 0));
    CHECK(bracket_bplus(D(0, 1), D(1, 0)) == D(0, 0, -1));
    CHECK(bracket_bplus(D(1, 0), D(2, 0)).is_zero());
    CHECK(bracket_bplus(D(1, 0), D(1, 0)).is_zero());
    CHECK(bracket_bplus(D(2, 0), D(3, 0)).is_zero());
    // (2,0) + (4,0) - (1,1) leaves Z_+^2; the coefficient vanishes there.
    CHECK(bracket_bplus(D(2, 0), D(4, 0)).is_zero());
    CHECK(bracket_bplus(D(2, 2), D(3, 1)) == D(4, 2, 4));
}

TEST_CASE("Jacobi on fixed triples") {
    CHECK(jacobi_defect(d(1, 0), d(0, 1), d(1, 1), bracket_g).is_zero());
    CHECK(jacobi_defect(L(1, 0), L(0, 1), L(2, 1), bracket_l).is_zero());
    CHECK(jacobi_defect(D(2, 0), D(0, 2), D(1, 1), bracket_bplus).is_zero());
    // A product that is not a Lie bracket has a visible defect.
    const auto bad = [](const LElement &x, const LElement &) { return x; };
    CHECK_FALSE(jacobi_defect(L(1, 0), L(0, 1), L(2, 1), bad).is_zero());
}

TEST_CASE("Jacobi and antisymmetry fuzzed") {
    Rng rng(21);
    for (int k = 0; k < 150; ++k) {
        const auto g1 = random_g(rng, 5), g2 = random_g(rng, 5), g3 = random_g(rng, 5);
        CHECK(jacobi_defect(g1, g2, g3, bracket_g).is_zero());
        CHECK((bracket_g(g1, g2) + bracket_g(g2, g1)).is_zero());
        const auto l1 = random_l(rng, 5), l2 = random_l(rng, 5), l3 = random_l(rng, 5);
        CHECK(jacobi_defect(l1, l2, l3, bracket_l).is_zero());
        CHECK((bracket_l(l1, l2) + bracket_l(l2, l1)).is_zero());
        const auto b1 = random_bplus(rng, 5), b2 = random_bplus(rng, 5), b3 = random_bplus(rng, 5);
        CHECK(jacobi_defect(b1, b2, b3, bracket_bplus).is_zero());
        CHECK((bracket_bplus(b1, b2) + bracket_bplus(b2, b1)).is_zero());
        const auto u = random_ga(rng, 5), v = random_ga(rng, 5), w = random_ga(rng, 5);
        CHECK(jacobi_defect(u, v, w, bracket_semidirect).is_zero());
    }
}

TEST_CASE("G acts on A by derivations and the action matches the bracket") {
    Rng rng(22);
    for (int k = 0; k < 100; ++k) {
        const auto x = random_g(rng, 4), y = random_g(rng, 4);
        const auto f = random_a(rng, 4);
        CHECK(g_action_on_a(x, f) == derive(x, f));
        AElement comm = derive(x, derive(y, f));
        comm -= derive(y, derive(x, f));
        CHECK(g_action_on_a(bracket_g(x, y), f) == comm);
    }
}

TEST_CASE("B'_+ and Z are subalgebras and commute") {
    Rng rng(23);
    for (int k = 0; k < 200; ++k) {
        const auto x = random_bplus(rng, 6, 4, 2), y = random_bplus(rng, 6, 4, 2);
        for (const auto &[i, c] : bracket_bplus(x, y))
            CHECK(i.degree() >= 2);
        const auto u = random_bplus(rng, 1), v = random_bplus(rng, 1);
        for (const auto &[i, c] : bracket_bplus(u, v))
            CHECK(i.degree() == 0);
        CHECK(bracket_bplus(x, u).is_zero());
    }
}
