#include "jetalg/lie.hpp"

#include <cassert>

namespace jetalg {

namespace {

// Bilinear extension of a bracket given on basis symbols. `basis` adds the bracket of
// two basis symbols, scaled by the product of their coefficients, into `out`.
template <class Out, class X, class Y, class Basis>
Out bilinear(const X &x, const Y &y, Basis &&basis) {
    Out out;
    for (const auto &[kx, cx] : x)
        for (const auto &[ky, cy] : y)
            basis(kx, ky, cx * cy, out);
    return out;
}

} // namespace

GElement bracket_g(const GElement &x, const GElement &y) {
    return bilinear<GElement>(x, y, [](LatticePoint m, LatticePoint n, const Rational &c, GElement &out) {
        const auto det = det_pair(n, m);
        if (det != 0)
            out.add(m + n, c * det);
    });
}

AElement g_action_on_a(const GElement &x, const AElement &f) {
    return bilinear<AElement>(x, f, [](LatticePoint m, LatticePoint n, const Rational &c, AElement &out) {
        const auto det = det_pair(n, m);
        if (det != 0)
            out.add(m + n, c * det);
    });
}

GAElement bracket_semidirect(const GAElement &u, const GAElement &v) {
    GAElement out;
    out.g = bracket_g(u.g, v.g);
    out.a = g_action_on_a(u.g, v.a) - g_action_on_a(v.g, u.a);
    return out;
}

LElement bracket_l(const LElement &x, const LElement &y) {
    return bilinear<LElement>(x, y, [](LatticePoint m, LatticePoint n, const Rational &c, LElement &out) {
        const auto det = det_pair(n, m);
        if (det == 0)
            return;
        const Rational s = c * det;
        out.add(m + n, s);
        out.add(m, -s);
        out.add(n, -s);
    });
}

BPlusElement bracket_bplus(const BPlusElement &x, const BPlusElement &y) {
    return bilinear<BPlusElement>(x, y, [](MultiIndex i, MultiIndex j, const Rational &c, BPlusElement &out) {
        if (i.degree() >= 2 && j.degree() >= 2) {
            const auto det = det_pair(j.as_point(), i.as_point());
            if (det == 0)
                return;
            // i+j-(1,1) leaves Z_+^2 only when i1 = j1 = 0 or i2 = j2 = 0, where det vanishes.
            assert(i.r1() + j.r1() >= 1 && i.r2() + j.r2() >= 1);
            out.add(MultiIndex(i.r1() + j.r1() - 1, i.r2() + j.r2() - 1), c * det);
            return;
        }
        if (i == MultiIndex(1, 0) && j == MultiIndex(0, 1))
            out.add(MultiIndex(0, 0), c);
        else if (i == MultiIndex(0, 1) && j == MultiIndex(1, 0))
            out.add(MultiIndex(0, 0), -c);
    });
}

} // namespace jetalg
