#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace jetalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for precondition violations at the library boundary.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (q != 0); the result is canonical.
Rational parse_rational(const std::string &text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &q);

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

/// A point of Z^2. Ordered lexicographically.
struct LatticePoint {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;

    constexpr bool is_zero() const { return m1 == 0 && m2 == 0; }

    friend constexpr auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
    friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
        return {a.m1 + b.m1, a.m2 + b.m2};
    }
    friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
        return {a.m1 - b.m1, a.m2 - b.m2};
    }
    friend constexpr LatticePoint operator-(LatticePoint a) { return {-a.m1, -a.m2}; }
};

std::ostream &operator<<(std::ostream &os, const LatticePoint &p);

/// A point of Z_+^2, i.e. an exponent pair. Construction rejects negative entries.
class MultiIndex {
  public:
    constexpr MultiIndex() = default;
    MultiIndex(std::int64_t r1, std::int64_t r2) : r1_(r1), r2_(r2) {
        if (r1 < 0 || r2 < 0)
            throw Error("multi-index entries must be nonnegative");
    }

    constexpr std::int64_t r1() const { return r1_; }
    constexpr std::int64_t r2() const { return r2_; }
    constexpr std::int64_t degree() const { return r1_ + r2_; }
    LatticePoint as_point() const { return {r1_, r2_}; }

    friend constexpr auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
    friend MultiIndex operator+(MultiIndex a, MultiIndex b) {
        return {a.r1_ + b.r1_, a.r2_ + b.r2_};
    }

  private:
    std::int64_t r1_ = 0;
    std::int64_t r2_ = 0;
};

std::ostream &operator<<(std::ostream &os, const MultiIndex &r);

/// n1*m2 - n2*m1. The first argument is the top row of the determinant.
constexpr std::int64_t det_pair(LatticePoint n, LatticePoint m) { return n.m1 * m.m2 - n.m2 * m.m1; }

/// m1^r1 * m2^r2 with 0^0 = 1.
Integer monomial(LatticePoint m, MultiIndex r);

/// r1! * r2!
Integer multi_factorial(MultiIndex r);

/// C(n1,m1) * C(n2,m2); requires m <= n componentwise.
Integer multi_binomial(MultiIndex n, MultiIndex m);

} // namespace jetalg
