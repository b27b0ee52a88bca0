#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>

#include "jetalg/lattice.hpp"

namespace jetalg {

/// A finite linear combination of basis symbols with exact rational coefficients.
///
/// Only nonzero coefficients are stored, in the key's lexicographic order, so two sums
/// are mathematically equal iff they compare equal. `Basis` supplies the key type, a
/// display name and a `check` hook that rejects keys outside the basis family.
template <class Basis>
class FormalSum {
  public:
    using basis_type = Basis;
    using key_type = typename Basis::key_type;
    using container_type = std::map<key_type, Rational>;
    using const_iterator = typename container_type::const_iterator;

    FormalSum() = default;
    FormalSum(std::initializer_list<std::pair<key_type, Rational>> terms) {
        for (const auto &[k, c] : terms)
            add(k, c);
    }

    static FormalSum basis(key_type k, const Rational &c = 1) {
        FormalSum s;
        s.add(k, c);
        return s;
    }

    /// Adds c times the basis symbol k.
    void add(key_type k, const Rational &c) {
        Basis::check(k);
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    Rational coeff(key_type k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const container_type &terms() const { return terms_; }

    FormalSum &operator+=(const FormalSum &o) {
        for (const auto &[k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    FormalSum &operator-=(const FormalSum &o) {
        for (const auto &[k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    FormalSum &operator*=(const Rational &s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[k, c] : terms_)
            c *= s;
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }
    friend FormalSum operator-(FormalSum a) { return a *= Rational(-1); }
    friend FormalSum operator*(const Rational &s, FormalSum a) { return a *= s; }
    friend FormalSum operator*(FormalSum a, const Rational &s) { return a *= s; }
    friend bool operator==(const FormalSum &a, const FormalSum &b) { return a.terms_ == b.terms_; }

    friend std::ostream &operator<<(std::ostream &os, const FormalSum &s) {
        if (s.is_zero())
            return os << '0';
        bool first = true;
        for (const auto &[k, c] : s.terms_) {
            if (!first)
                os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0)
                os << '-';
            first = false;
            const Rational a = abs(c);
            if (a != 1)
                os << to_string(a) << '*';
            os << Basis::symbol << k;
        }
        return os;
    }

  private:
    container_type terms_;
};

/// d_m, m in Z^2 \ {0}
struct GBasis {
    using key_type = LatticePoint;
    static constexpr const char *name = "G";
    static constexpr const char *symbol = "d";
    static void check(const LatticePoint &m) {
        if (m.is_zero())
            throw Error("d_(0,0) is not a basis element of G");
    }
};

/// t^n, n in Z^2
struct ABasis {
    using key_type = LatticePoint;
    static constexpr const char *name = "A";
    static constexpr const char *symbol = "t";
    static void check(const LatticePoint &) {}
};

/// L(m), m in Z^2 \ {0}
struct LBasis {
    using key_type = LatticePoint;
    static constexpr const char *name = "L";
    static constexpr const char *symbol = "L";
    static void check(const LatticePoint &m) {
        if (m.is_zero())
            throw Error("L(0,0) is not a basis element of L");
    }
};

/// D_i, i in Z_+^2 (nonnegativity is enforced by MultiIndex itself)
struct BPlusBasis {
    using key_type = MultiIndex;
    static constexpr const char *name = "Bplus";
    static constexpr const char *symbol = "D";
    static void check(const MultiIndex &) {}
};

using GElement = FormalSum<GBasis>;
using AElement = FormalSum<ABasis>;
using LElement = FormalSum<LBasis>;
using BPlusElement = FormalSum<BPlusBasis>;

/// x + f in the semidirect product G ⋉ A.
struct GAElement {
    GElement g;
    AElement a;

    bool is_zero() const { return g.is_zero() && a.is_zero(); }

    GAElement &operator+=(const GAElement &o) {
        g += o.g;
        a += o.a;
        return *this;
    }
    GAElement &operator-=(const GAElement &o) {
        g -= o.g;
        a -= o.a;
        return *this;
    }
    GAElement &operator*=(const Rational &s) {
        g *= s;
        a *= s;
        return *this;
    }
    friend GAElement operator+(GAElement x, const GAElement &y) { return x += y; }
    friend GAElement operator-(GAElement x, const GAElement &y) { return x -= y; }
    friend GAElement operator*(const Rational &s, GAElement x) { return x *= s; }
    friend bool operator==(const GAElement &, const GAElement &) = default;
    friend std::ostream &operator<<(std::ostream &os, const GAElement &x) {
        return os << '(' << x.g << ") + (" << x.a << ')';
    }
};

} // namespace jetalg
