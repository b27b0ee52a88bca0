#include "doctest.h"

#include "jetalg/qpoly.hpp"
#include "jetalg/random.hpp"

using namespace jetalg;

namespace {

QPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return QPoly(v);
}

} // namespace

TEST_CASE("arithmetic and division") {
    const QPoly a = P({-1, 0, 1}); // x^2 - 1
    const QPoly b = P({1, 1});     // x + 1
    const auto [q, r] = divmod(a, b);
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, P({-1, 1})) == P({-1, 1}));
    CHECK(gcd(P({2}), P({0, 1})) == P({1}));
    CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
    CHECK(a(Rational(3)) == 8);
    CHECK(P({1, 0, 0}).degree() == 0);
    CHECK(QPoly().degree() == -1);
    CHECK_THROWS_AS(divmod(a, QPoly()), Error);
}

TEST_CASE("xgcd gives a Bezout identity") {
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rational> ca(static_cast<std::size_t>(rng.uniform(1, 5))), cb(static_cast<std::size_t>(rng.uniform(1, 5)));
        for (auto &c : ca)
            c = rng.rational(4, 2);
        for (auto &c : cb)
            c = rng.rational(4, 2);
        const QPoly a(ca), b(cb);
        if (a.is_zero() && b.is_zero())
            continue;
        const Bezout bz = xgcd(a, b);
        CHECK(bz.u * a + bz.v * b == bz.g);
        CHECK(bz.g == gcd(a, b));
    }
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(QMatrix{{1, 2}, {3, 4}}) == P({-2, -5, 1}));
    CHECK(char_poly(QMatrix::identity(3)) == P({-1, 3, -3, 1}));
    // Cayley-Hamilton on random matrices.
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        QMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = rng.rational(3, 2);
        const QPoly p = char_poly(a);
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p(a).is_zero());
    }
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // (x-1)^3 (x+2)^2 (x^2+1)
    const QPoly a = power(P({-1, 1}), 3) * power(P({2, 1}), 2) * P({1, 0, 1});
    const auto parts = squarefree_decomposition(a);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == P({1, 0, 1}));
    CHECK(parts[1] == P({2, 1}));
    CHECK(parts[2] == P({-1, 1}));
}

TEST_CASE("rational roots and coprime splits") {
    CHECK(find_rational_root(P({-3, 2})) == make_rational(3, 2));
    CHECK_FALSE(find_rational_root(P({-2, 0, 1})).has_value());
    CHECK(find_rational_root(P({0, 1, 1})) == Rational(0));

    // Squarefree with a rational root: x^3 - x = x (x-1) (x+1).
    const auto s = coprime_split(P({0, -1, 0, 1}));
    REQUIRE(s.has_value());
    CHECK(s->first * s->second == P({0, -1, 0, 1}));
    CHECK(gcd(s->first, s->second) == P({1}));
    CHECK(s->first.degree() > 0);
    CHECK(s->second.degree() > 0);

    // Irreducible over Q, or a pure power: no split.
    CHECK_FALSE(coprime_split(P({-2, 0, 1})).has_value());
    CHECK_FALSE(coprime_split(power(P({-1, 1}), 4)).has_value());
    CHECK_FALSE(coprime_split(power(P({1, 0, 1}), 2)).has_value());

    // Different multiplicities split immediately.
    const QPoly m = power(P({-1, 1}), 2) * P({1, 0, 1});
    const auto ms = coprime_split(m);
    REQUIRE(ms.has_value());
    CHECK(ms->first * ms->second == m);
    CHECK(gcd(ms->first, ms->second) == P({1}));
}
