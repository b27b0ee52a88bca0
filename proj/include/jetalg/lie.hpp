#pragma once

#include "jetalg/formal_sum.hpp"

namespace jetalg {

/// [d_m, d_n] = det(n; m) d_{m+n}
GElement bracket_g(const GElement &x, const GElement &y);

/// d_m . t^n = det(n; m) t^{m+n}
AElement g_action_on_a(const GElement &x, const AElement &f);

/// [x + f, y + g] = [x, y] + x.g - y.f
GAElement bracket_semidirect(const GAElement &u, const GAElement &v);

/// [L(m), L(n)] = det(n; m) (L(m+n) - L(m) - L(n))
LElement bracket_l(const LElement &x, const LElement &y);

/// The Block-type bracket on B_+:
///   [D_i, D_j] = det(j; i) D_{i+j-(1,1)}  when |i|, |j| >= 2,
///   [D_(1,0), D_(0,1)] = D_(0,0) = -[D_(0,1), D_(1,0)],
///   and zero for every other pair of basis elements.
BPlusElement bracket_bplus(const BPlusElement &x, const BPlusElement &y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
template <class Element, class Bracket>
Element jacobi_defect(const Element &x, const Element &y, const Element &z, Bracket &&bracket) {
    Element out = bracket(x, bracket(y, z));
    out += bracket(y, bracket(z, x));
    out += bracket(z, bracket(x, y));
    return out;
}

} // namespace jetalg
