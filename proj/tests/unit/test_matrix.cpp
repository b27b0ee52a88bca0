#include "doctest.h"

#include "jetalg/matrix.hpp"
#include "jetalg/random.hpp"

using namespace jetalg;

namespace {

QMatrix random_matrix(Rng &rng, std::size_t r, std::size_t c) {
    QMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            a(i, j) = rng.rational(3, 3);
    return a;
}

// Determinant by cofactor expansion, independent of the elimination code.
Rational cofactor_det(const QMatrix &a) {
    const std::size_t n = a.rows();
    if (n == 1)
        return a(0, 0);
    Rational out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        QMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = a(r, c);
        const Rational term = a(0, j) * cofactor_det(minor);
        out += j % 2 == 0 ? term : Rational(-term);
    }
    return out;
}

} // namespace

TEST_CASE("matrix examples") {
    const QMatrix e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
    CHECK(mat_commutator(e, f) == QMatrix{{1, 0}, {0, -1}});
    CHECK(rank(QMatrix::zero(2, 2)) == 0);
    const auto ns = null_space_basis(QMatrix{{1, 1}});
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK(sgn(ns[0][0]) != 0);
    CHECK(QMatrix::identity(3).trace() == 3);
    CHECK(direct_sum(QMatrix{{1}}, QMatrix{{2, 3}, {4, 5}}) == QMatrix{{1, 0, 0}, {0, 2, 3}, {0, 4, 5}});
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(QMatrix::identity(2) * QMatrix::identity(3), Error);
    CHECK_THROWS_AS(QMatrix::identity(2) + QMatrix::identity(3), Error);
    CHECK_THROWS_AS(QMatrix::identity(2) * QVector(3), Error);
    CHECK_THROWS_AS((QMatrix{{1, 2}, {3}}), Error);
}

TEST_CASE("rank and null space agree with rank-nullity") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 5)), c = static_cast<std::size_t>(rng.uniform(1, 5));
        // Low-rank products make nontrivial kernels common.
        const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        const QMatrix a = random_matrix(rng, r, k) * random_matrix(rng, k, c);
        const auto ns = null_space_basis(a);
        CHECK(rank(a) + ns.size() == c);
        for (const auto &v : ns) {
            const QVector av = a * v;
            for (const auto &q : av)
                CHECK(sgn(q) == 0);
        }
    }
}

TEST_CASE("inverse exists iff the cofactor determinant is nonzero") {
    Rng rng(32);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const QMatrix a = random_matrix(rng, n, n);
        const auto inv = inverse(a);
        CHECK(inv.has_value() == (sgn(cofactor_det(a)) != 0));
        if (inv) {
            CHECK(a * *inv == QMatrix::identity(n));
            CHECK(*inv * a == QMatrix::identity(n));
        }
    }
}

TEST_CASE("solve finds a solution exactly when one exists") {
    Rng rng(33);
    for (int t = 0; t < 100; ++t) {
        const QMatrix a = random_matrix(rng, 3, 2) * random_matrix(rng, 2, 4);
        const QMatrix x0 = random_matrix(rng, 4, 2);
        const QMatrix b = a * x0;
        const auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
    // Inconsistent: x + y = 1 and x + y = 2.
    CHECK_FALSE(solve(QMatrix{{1, 1}, {1, 1}}, QMatrix{{1}, {2}}).has_value());
}

TEST_CASE("random invertible matrices are invertible and conjugation is a homomorphism") {
    Rng rng(34);
    for (int t = 0; t < 50; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const QMatrix p = rng.invertible_matrix(n);
        const auto pi = inverse(p);
        REQUIRE(pi.has_value());
        const QMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
        CHECK(conjugate(a * b, p, *pi) == conjugate(a, p, *pi) * conjugate(b, p, *pi));
        CHECK(conjugate(mat_commutator(a, b), p, *pi) ==
              mat_commutator(conjugate(a, p, *pi), conjugate(b, p, *pi)));
    }
}

TEST_CASE("rref and transpose") {
    const RowEchelon r = rref(QMatrix{{2, 4, 6}, {1, 2, 4}});
    CHECK(r.reduced == QMatrix{{1, 2, 0}, {0, 0, 1}});
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    CHECK(QMatrix{{1, 2, 3}}.transpose() == QMatrix{{1}, {2}, {3}});
}
