#include "jetalg/ideals.hpp"

#include <algorithm>
#include <numeric>

namespace jetalg {

ReductiveElement::ReductiveElement() : sl2_(2, 2) {}

ReductiveElement::ReductiveElement(QMatrix sl2, Rational z1, Rational z2)
    : sl2_(std::move(sl2)), z1_(std::move(z1)), z2_(std::move(z2)) {
    if (sl2_.rows() != 2 || sl2_.cols() != 2 || sgn(sl2_.trace()) != 0)
        throw Error("sl2 part must be a traceless 2x2 matrix");
}

ReductiveElement &ReductiveElement::operator+=(const ReductiveElement &o) {
    sl2_ += o.sl2_;
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
}

ReductiveElement operator*(const Rational &s, const ReductiveElement &x) {
    return {s * x.sl2_, s * x.z1_, s * x.z2_};
}

ReductiveElement bracket_reductive(const ReductiveElement &x, const ReductiveElement &y) {
    return {mat_commutator(x.sl2(), y.sl2()), 0, 0};
}

Rational phi_r(const LElement &x, MultiIndex r) {
    Rational acc = 0;
    for (const auto &[m, c] : x)
        acc += c * Rational(monomial(m, r));
    return acc;
}

std::vector<MultiIndex> multi_indices_by_degree(std::int64_t lo, std::int64_t hi) {
    std::vector<MultiIndex> out;
    for (std::int64_t d = std::max<std::int64_t>(lo, 0); d <= hi; ++d)
        for (std::int64_t a = d; a >= 0; --a)
            out.emplace_back(a, d - a);
    return out;
}

bool in_ideal_Ik(const LElement &x, std::int64_t k) {
    if (k < 2)
        throw Error("I_k is defined for k >= 2");
    for (const auto &r : multi_indices_by_degree(2, k))
        if (sgn(phi_r(x, r)) != 0)
            return false;
    return true;
}

bool in_derived(const LElement &x) {
    return sgn(phi_r(x, MultiIndex(1, 0))) == 0 && sgn(phi_r(x, MultiIndex(0, 1))) == 0;
}

ReductiveElement project_reductive(const LElement &x) {
    ReductiveElement out;
    for (const auto &[m, c] : x) {
        const Rational a = m.m1 * m.m2, b = -(m.m1 * m.m1), d = m.m2 * m.m2;
        out += c * ReductiveElement(QMatrix{{a, b}, {d, -a}}, Rational(m.m1), Rational(m.m2));
    }
    return out;
}

namespace {

std::vector<LatticePoint> punctured_window(std::int64_t radius) {
    std::vector<LatticePoint> pts;
    for (std::int64_t a = -radius; a <= radius; ++a)
        for (std::int64_t b = -radius; b <= radius; ++b)
            if (a != 0 || b != 0)
                pts.push_back({a, b});
    return pts;
}

QMatrix evaluation_matrix(const std::vector<MultiIndex> &rs, const std::vector<LatticePoint> &pts) {
    QMatrix a(rs.size(), pts.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            a(i, j) = Rational(monomial(pts[j], rs[i]));
    return a;
}

} // namespace

std::size_t window_codim_Ik(std::int64_t k, std::int64_t window_radius) {
    if (k < 2 || window_radius < 1)
        throw Error("window_codim_Ik needs k >= 2 and window_radius >= 1");
    return rank(evaluation_matrix(multi_indices_by_degree(2, k), punctured_window(window_radius)));
}

bool in_ideal_Jk(const BPlusElement &x, std::int64_t k) {
    if (k < 2)
        throw Error("J_k is defined for k >= 2");
    for (const auto &[i, c] : x)
        if (i.degree() < 2)
            throw Error("J_k membership needs an element of the degree >= 2 part of B+");
    return std::all_of(x.begin(), x.end(), [k](const auto &term) { return term.first.degree() >= k; });
}

LElement diff_derivative(int c, std::int64_t s, std::int64_t l) {
    if (c != 0 && c != 1)
        throw Error("difference derivative is defined for the families L(., 0) and L(., 1)");
    if (l < 0)
        throw Error("difference order must be nonnegative");
    if (c == 0 && s <= 0 && 0 <= s + l)
        throw Error("difference derivative would reference L(0,0)");
    LElement out;
    for (std::int64_t i = 0; i <= l; ++i) {
        Rational coeff(multi_binomial(MultiIndex(l, 0), MultiIndex(i, 0)));
        if ((l - i) % 2)
            coeff = -coeff;
        out.add({s + i, c}, coeff);
    }
    return out;
}

LElement sample_kernel(Rng &rng, const std::vector<LatticePoint> &support, const std::vector<MultiIndex> &conditions) {
    const auto basis = null_space_basis(evaluation_matrix(conditions, support));
    if (basis.empty())
        return {};
    for (;;) {
        QVector coeffs(support.size());
        for (const auto &v : basis) {
            const Rational w = rng.rational(3, 3);
            for (std::size_t j = 0; j < v.size(); ++j)
                coeffs[j] += w * v[j];
        }
        LElement x;
        for (std::size_t j = 0; j < support.size(); ++j)
            x.add(support[j], coeffs[j]);
        if (!x.is_zero())
            return x;
    }
}

namespace {

std::vector<LatticePoint> random_support(Rng &rng, std::int64_t radius, std::size_t size) {
    auto pts = punctured_window(radius);
    for (std::size_t k = pts.size(); k > 1; --k)
        std::swap(pts[k - 1], pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1))]);
    pts.resize(std::min(size, pts.size()));
    return pts;
}

} // namespace

LElement sample_Ik(Rng &rng, std::int64_t k, std::int64_t radius, std::size_t support_size) {
    const auto conditions = multi_indices_by_degree(2, k);
    support_size = std::max(support_size, conditions.size() + 4);
    return sample_kernel(rng, random_support(rng, radius, support_size), conditions);
}

LElement sample_I2_derived(Rng &rng, std::int64_t radius, std::size_t support_size) {
    const auto conditions = multi_indices_by_degree(1, 2);
    support_size = std::max(support_size, conditions.size() + 4);
    return sample_kernel(rng, random_support(rng, radius, support_size), conditions);
}

BPlusElement sample_Jk(Rng &rng, std::int64_t k, std::int64_t max_degree, int max_terms) {
    for (;;) {
        BPlusElement x = random_bplus(rng, std::max(k, max_degree), max_terms, k);
        if (!x.is_zero())
            return x;
    }
}

} // namespace jetalg
