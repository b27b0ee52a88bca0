#pragma once

#include <cstdint>
#include <vector>

#include "jetalg/formal_sum.hpp"
#include "jetalg/matrix.hpp"
#include "jetalg/random.hpp"

namespace jetalg {

/// An element of sl2 + Q z1 + Q z2. The sl2 part is a traceless 2x2 matrix.
class ReductiveElement {
  public:
    ReductiveElement();
    ReductiveElement(QMatrix sl2, Rational z1, Rational z2);

    const QMatrix &sl2() const { return sl2_; }
    const Rational &z1() const { return z1_; }
    const Rational &z2() const { return z2_; }
    bool is_zero() const { return sl2_.is_zero() && sgn(z1_) == 0 && sgn(z2_) == 0; }

    ReductiveElement &operator+=(const ReductiveElement &o);
    friend ReductiveElement operator*(const Rational &s, const ReductiveElement &x);
    friend bool operator==(const ReductiveElement &, const ReductiveElement &) = default;

  private:
    QMatrix sl2_;
    Rational z1_, z2_;
};

/// Matrix commutator on the sl2 part; the z-coordinates are central, so they vanish.
ReductiveElement bracket_reductive(const ReductiveElement &x, const ReductiveElement &y);

/// phi_r(sum a_i L(m_i)) = sum a_i m_i^r
Rational phi_r(const LElement &x, MultiIndex r);

/// All r with lo <= |r| <= hi, ordered by degree then r1 descending.
std::vector<MultiIndex> multi_indices_by_degree(std::int64_t lo, std::int64_t hi);

/// x in I_k, i.e. phi_r(x) = 0 for 2 <= |r| <= k. Requires k >= 2.
bool in_ideal_Ik(const LElement &x, std::int64_t k);

/// x in [L, L], i.e. sum a_i m_i = 0.
bool in_derived(const LElement &x);

/// pi(L(m)) = [[m1 m2, -m1^2], [m2^2, -m1 m2]] + m1 z1 + m2 z2, extended linearly.
ReductiveElement project_reductive(const LElement &x);

/// Rank of the evaluation matrix (m^r) over 2 <= |r| <= k and m in [-R, R]^2 \ {0}.
std::size_t window_codim_Ik(std::int64_t k, std::int64_t window_radius);

/// x in J_k = span{D_j : |j| >= k}. Requires every index of x to have degree >= 2.
bool in_ideal_Jk(const BPlusElement &x, std::int64_t k);

/// sum_{i=0}^{l} (-1)^{l-i} C(l, i) L(s+i, c) for c in {0, 1}.
LElement diff_derivative(int c, std::int64_t s, std::int64_t l);

/// A random element of the common kernel of phi_r over `conditions`, supported on `support`
/// (exact null-space sampling with random rational combinations of the basis).
LElement sample_kernel(Rng &rng, const std::vector<LatticePoint> &support, const std::vector<MultiIndex> &conditions);

/// Random element of I_k supported in [-radius, radius]^2 \ {0}.
LElement sample_Ik(Rng &rng, std::int64_t k, std::int64_t radius, std::size_t support_size = 12);

/// Random element of I_2 ∩ [L, L] supported in [-radius, radius]^2 \ {0}.
LElement sample_I2_derived(Rng &rng, std::int64_t radius, std::size_t support_size = 12);

/// Random element of J_k with indices of degree k..max_degree.
BPlusElement sample_Jk(Rng &rng, std::int64_t k, std::int64_t max_degree, int max_terms = 4);

} // namespace jetalg
