#pragma once

#include <cstdint>
#include <random>

#include "jetalg/formal_sum.hpp"
#include "jetalg/matrix.hpp"

namespace jetalg {

/// Seeded generator for the randomized suites. The stream depends only on the seed
/// (mt19937_64 is fully specified; ranges use rejection sampling, not a library distribution).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// num/den with num in [-bound, bound], den in [1, max_den]; may be zero.
    Rational rational(std::int64_t bound = 5, std::int64_t max_den = 4);
    Rational nonzero_rational(std::int64_t bound = 5, std::int64_t max_den = 4);

    LatticePoint point(std::int64_t radius);
    LatticePoint nonzero_point(std::int64_t radius);
    MultiIndex multi_index(std::int64_t max_degree, std::int64_t min_degree = 0);

    /// Random invertible d x d matrix: unit lower triangular times unit upper triangular,
    /// with a random permutation of the rows.
    QMatrix invertible_matrix(std::size_t d, std::int64_t bound = 2);

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

GElement random_g(Rng &rng, std::int64_t radius, int max_terms = 4);
AElement random_a(Rng &rng, std::int64_t radius, int max_terms = 4);
GAElement random_ga(Rng &rng, std::int64_t radius, int max_terms = 3);
LElement random_l(Rng &rng, std::int64_t radius, int max_terms = 4);
BPlusElement random_bplus(Rng &rng, std::int64_t max_degree, int max_terms = 4, std::int64_t min_degree = 0);

} // namespace jetalg
