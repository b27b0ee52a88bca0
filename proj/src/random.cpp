#include "jetalg/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace jetalg {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo)
        throw Error("empty random range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do
        x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t bound, std::int64_t max_den) {
    const auto num = uniform(-bound, bound);
    const auto den = uniform(1, max_den);
    return make_rational(num, den);
}

Rational Rng::nonzero_rational(std::int64_t bound, std::int64_t max_den) {
    Rational q;
    do
        q = rational(bound, max_den);
    while (sgn(q) == 0);
    return q;
}

LatticePoint Rng::point(std::int64_t radius) {
    const auto a = uniform(-radius, radius);
    const auto b = uniform(-radius, radius);
    return {a, b};
}

LatticePoint Rng::nonzero_point(std::int64_t radius) {
    LatticePoint p;
    do
        p = point(radius);
    while (p.is_zero());
    return p;
}

MultiIndex Rng::multi_index(std::int64_t max_degree, std::int64_t min_degree) {
    const auto deg = uniform(min_degree, max_degree);
    const auto r1 = uniform(0, deg);
    return {r1, deg - r1};
}

QMatrix Rng::invertible_matrix(std::size_t d, std::int64_t bound) {
    QMatrix lower = QMatrix::identity(d), upper = QMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = uniform(-bound, bound);
            upper(j, i) = uniform(-bound, bound);
        }
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = d; k > 1; --k)
        std::swap(perm[k - 1], perm[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(k) - 1))]);
    QMatrix p(d, d);
    for (std::size_t i = 0; i < d; ++i)
        p(i, perm[i]) = 1;
    return p * lower * upper;
}

GElement random_g(Rng &rng, std::int64_t radius, int max_terms) {
    GElement x;
    const auto n = rng.uniform(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k)
        x.add(rng.nonzero_point(radius), rng.nonzero_rational());
    return x;
}

AElement random_a(Rng &rng, std::int64_t radius, int max_terms) {
    AElement x;
    const auto n = rng.uniform(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k)
        x.add(rng.point(radius), rng.nonzero_rational());
    return x;
}

GAElement random_ga(Rng &rng, std::int64_t radius, int max_terms) {
    return {random_g(rng, radius, max_terms), random_a(rng, radius, max_terms)};
}

LElement random_l(Rng &rng, std::int64_t radius, int max_terms) {
    LElement x;
    const auto n = rng.uniform(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k)
        x.add(rng.nonzero_point(radius), rng.nonzero_rational());
    return x;
}

BPlusElement random_bplus(Rng &rng, std::int64_t max_degree, int max_terms, std::int64_t min_degree) {
    BPlusElement x;
    const auto n = rng.uniform(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k)
        x.add(rng.multi_index(max_degree, min_degree), rng.nonzero_rational());
    return x;
}

} // namespace jetalg
