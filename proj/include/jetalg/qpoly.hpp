#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jetalg/matrix.hpp"

namespace jetalg {

/// Univariate polynomial over Q, coefficients stored lowest degree first, no trailing zeros.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly constant(const Rational &c) { return QPoly({c}); }
    static QPoly x_minus(const Rational &root) { return QPoly({-root, Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational &coeff(std::size_t k) const { return c_[k]; }
    const Rational &leading() const { return c_.back(); }
    const std::vector<Rational> &coeffs() const { return c_; }

    QPoly monic() const;
    QPoly derivative() const;
    Rational operator()(const Rational &x) const;
    QMatrix operator()(const QMatrix &x) const;

    friend QPoly operator+(const QPoly &a, const QPoly &b);
    friend QPoly operator-(const QPoly &a, const QPoly &b);
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend bool operator==(const QPoly &, const QPoly &) = default;

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b);

/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly &a, const QPoly &b);

/// u, v with u a + v b = gcd(a, b).
struct Bezout {
    QPoly g, u, v;
};
Bezout xgcd(const QPoly &a, const QPoly &b);

QPoly power(const QPoly &a, unsigned k);

/// det(x I - a), via the Faddeev-LeVerrier recurrence.
QPoly char_poly(const QMatrix &a);

/// Squarefree factors s_1, s_2, ... with a = lc * prod s_k^k (Yun's algorithm). Entries may be 1.
std::vector<QPoly> squarefree_decomposition(const QPoly &a);

/// A rational root of a, if one is found. Gives up (nullopt) when the integer coefficients
/// are too large to enumerate divisors by trial division.
std::optional<Rational> find_rational_root(const QPoly &a);

/// A factorization a = q r into coprime monic factors of positive degree, if one is found
/// from the squarefree decomposition or a rational root.
std::optional<std::pair<QPoly, QPoly>> coprime_split(const QPoly &a);

} // namespace jetalg
