#include "jetalg/rep.hpp"

#include <set>
#include <sstream>

#include "jetalg/lie.hpp"
#include "jetalg/qpoly.hpp"
#include "jetalg/random.hpp"

namespace jetalg {

namespace {

std::string describe_relation(const char *what, const QMatrix &lhs, const QMatrix &rhs) {
    std::ostringstream os;
    os << what << ": lhs " << lhs << " != rhs " << rhs;
    return os.str();
}

} // namespace

SL2Rep::SL2Rep(QMatrix e, QMatrix f, QMatrix h) : e_(std::move(e)), f_(std::move(f)), h_(std::move(h)) {
    const std::size_t n = e_.rows();
    if (n == 0 || !e_.is_square() || f_.rows() != n || !f_.is_square() || h_.rows() != n || !h_.is_square())
        throw Error("sl2 rep needs three nonempty square matrices of one size");
    if (auto c = mat_commutator(h_, e_); c != 2 * e_)
        throw Error(describe_relation("[h,e] = 2e fails", c, 2 * e_));
    if (auto c = mat_commutator(h_, f_); c != -2 * f_)
        throw Error(describe_relation("[h,f] = -2f fails", c, -2 * f_));
    if (auto c = mat_commutator(e_, f_); c != h_)
        throw Error(describe_relation("[e,f] = h fails", c, h_));
}

QMatrix SL2Rep::image(const Rational &a, const Rational &b, const Rational &c) const {
    return a * h_ + b * e_ + c * f_;
}

SL2Rep sl2_irrep(std::int64_t n) {
    if (n < 0)
        throw Error("sl2_irrep needs n >= 0");
    const auto d = static_cast<std::size_t>(n + 1);
    QMatrix e(d, d), f(d, d), h(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const auto kk = static_cast<long>(k);
        h(k, k) = n - 2 * kk;
        if (k + 1 < d)
            f(k + 1, k) = 1;
        if (k > 0)
            e(k - 1, k) = kk * (n - kk + 1);
    }
    return {std::move(e), std::move(f), std::move(h)};
}

SL2Rep direct_sum(const SL2Rep &a, const SL2Rep &b) {
    return {direct_sum(a.e(), b.e()), direct_sum(a.f(), b.f()), direct_sum(a.h(), b.h())};
}

SL2Rep conjugate(const SL2Rep &rep, const QMatrix &p) {
    const auto p_inv = inverse(p);
    if (!p_inv)
        throw Error("conjugation by a singular matrix");
    return {conjugate(rep.e(), p, *p_inv), conjugate(rep.f(), p, *p_inv), conjugate(rep.h(), p, *p_inv)};
}

bool sl2_is_irreducible(const SL2Rep &rep) { return null_space_basis(rep.e()).size() == 1; }

bool sl2_isomorphic(const SL2Rep &a, const SL2Rep &b) {
    if (!sl2_is_irreducible(a) || !sl2_is_irreducible(b))
        throw Error("sl2_isomorphic is only defined for irreducible modules");
    return a.dim() == b.dim();
}

RelationViolation::RelationViolation(MultiIndex i_, MultiIndex j_, QMatrix lhs_, QMatrix rhs_)
    : Error([&] {
          std::ostringstream os;
          os << "B+ relation fails for [D" << i_ << ", D" << j_ << "]: commutator " << lhs_ << " != expected "
             << rhs_;
          return os.str();
      }()),
      i(i_), j(j_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}

BPlusRep::BPlusRep(std::size_t dim, GeneratorMap gens) : dim_(dim) {
    if (dim == 0)
        throw Error("B+ rep needs positive dimension");
    for (auto &[i, m] : gens) {
        if (m.rows() != dim || m.cols() != dim)
            throw Error("B+ generator has the wrong size");
        if (!m.is_zero())
            gens_.emplace(i, std::move(m));
    }
}

BPlusRep BPlusRep::unchecked(std::size_t dim, GeneratorMap gens) { return {dim, std::move(gens)}; }

std::int64_t BPlusRep::max_degree() const {
    std::int64_t d = -1;
    for (const auto &[i, m] : gens_)
        d = std::max(d, i.degree());
    return d;
}

QMatrix BPlusRep::generator(MultiIndex i) const {
    auto it = gens_.find(i);
    return it == gens_.end() ? QMatrix::zero(dim_, dim_) : it->second;
}

QMatrix BPlusRep::action(const BPlusElement &x) const {
    QMatrix out = QMatrix::zero(dim_, dim_);
    for (const auto &[i, c] : x) {
        auto it = gens_.find(i);
        if (it != gens_.end())
            out += c * it->second;
    }
    return out;
}

std::optional<RelationViolation> first_bplus_violation(const BPlusRep &rep) {
    std::set<std::pair<MultiIndex, MultiIndex>> pairs;
    const auto add_pair = [&](MultiIndex i, MultiIndex j) {
        if (i != j)
            pairs.insert(i < j ? std::pair{i, j} : std::pair{j, i});
    };
    for (const auto &[i, mi] : rep.gens())
        for (const auto &[j, mj] : rep.gens())
            add_pair(i, j);
    for (const auto &[k, mk] : rep.gens()) {
        if (k.degree() >= 2) {
            // i + j = k + (1,1) with |i|, |j| >= 2
            const std::int64_t s1 = k.r1() + 1, s2 = k.r2() + 1;
            for (std::int64_t a = 0; a <= s1; ++a)
                for (std::int64_t b = 0; b <= s2; ++b) {
                    const MultiIndex i(a, b), j(s1 - a, s2 - b);
                    if (i.degree() >= 2 && j.degree() >= 2)
                        add_pair(i, j);
                }
        } else if (k == MultiIndex(0, 0)) {
            add_pair(MultiIndex(1, 0), MultiIndex(0, 1));
        }
    }
    for (const auto &[i, j] : pairs) {
        QMatrix lhs = mat_commutator(rep.generator(i), rep.generator(j));
        QMatrix rhs = rep.action(bracket_bplus(BPlusElement::basis(i), BPlusElement::basis(j)));
        if (lhs != rhs)
            return RelationViolation(i, j, std::move(lhs), std::move(rhs));
    }
    return std::nullopt;
}

BPlusRep validate_bplus_rep(std::size_t dim, BPlusRep::GeneratorMap gens) {
    BPlusRep rep = BPlusRep::unchecked(dim, std::move(gens));
    if (auto v = first_bplus_violation(rep))
        throw *v;
    return rep;
}

BPlusRep bplus_from_sl2(const SL2Rep &rep, const std::pair<Rational, Rational> &alpha) {
    const QMatrix id = QMatrix::identity(rep.dim());
    BPlusRep::GeneratorMap gens;
    gens.emplace(MultiIndex(2, 0), Rational(-2) * rep.e());
    gens.emplace(MultiIndex(0, 2), Rational(2) * rep.f());
    gens.emplace(MultiIndex(1, 1), rep.h());
    gens.emplace(MultiIndex(1, 0), -alpha.second * id);
    gens.emplace(MultiIndex(0, 1), alpha.first * id);
    return validate_bplus_rep(rep.dim(), std::move(gens));
}

BPlusRep direct_sum(const BPlusRep &a, const BPlusRep &b) {
    std::set<MultiIndex> keys;
    for (const auto &[i, m] : a.gens())
        keys.insert(i);
    for (const auto &[i, m] : b.gens())
        keys.insert(i);
    BPlusRep::GeneratorMap gens;
    for (const auto &i : keys)
        gens.emplace(i, direct_sum(a.generator(i), b.generator(i)));
    return validate_bplus_rep(a.dim() + b.dim(), std::move(gens));
}

BPlusRep conjugate(const BPlusRep &rep, const QMatrix &p) {
    const auto p_inv = inverse(p);
    if (!p_inv)
        throw Error("conjugation by a singular matrix");
    BPlusRep::GeneratorMap gens;
    for (const auto &[i, m] : rep.gens())
        gens.emplace(i, conjugate(m, p, *p_inv));
    return validate_bplus_rep(rep.dim(), std::move(gens));
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::yes:
        return "yes";
    case Verdict::no:
        return "no";
    case Verdict::unknown:
        break;
    }
    return "unknown";
}

std::vector<QMatrix> commutant_basis(const BPlusRep &rep) {
    const std::size_t d = rep.dim();
    const std::size_t unknowns = d * d;
    std::vector<QVector> rows;
    for (const auto &[i, g] : rep.gens()) {
        // (X g - g X)(a, b) = sum_c X(a,c) g(c,b) - g(a,c) X(c,b)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                QVector row(unknowns);
                for (std::size_t c = 0; c < d; ++c) {
                    row[a * d + c] += g(c, b);
                    row[c * d + b] -= g(a, c);
                }
                rows.push_back(std::move(row));
            }
    }
    std::vector<QMatrix> basis;
    if (rows.empty()) {
        for (std::size_t k = 0; k < unknowns; ++k) {
            QMatrix x(d, d);
            x(k / d, k % d) = 1;
            basis.push_back(std::move(x));
        }
        return basis;
    }
    for (const auto &v : null_space_basis(QMatrix::from_rows(rows, unknowns))) {
        QMatrix x(d, d);
        for (std::size_t k = 0; k < unknowns; ++k)
            x(k / d, k % d) = v[k];
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

std::optional<QMatrix> splitting_idempotent(const QMatrix &x) {
    const auto split = coprime_split(char_poly(x));
    if (!split)
        return std::nullopt;
    const auto &[q, r] = *split;
    const Bezout bz = xgcd(q, r);
    if (bz.g.degree() != 0)
        return std::nullopt;
    QMatrix e = (bz.u * q)(x);
    const std::size_t d = x.rows();
    if (e * e != e || e.is_zero() || e == QMatrix::identity(d))
        return std::nullopt;
    return e;
}

} // namespace

IndecomposabilityReport bplus_indecomposable(const BPlusRep &rep, int trials, std::uint64_t seed) {
    IndecomposabilityReport report;
    const auto basis = commutant_basis(rep);
    report.commutant_dim = basis.size();
    if (basis.size() == 1) {
        report.verdict = Verdict::yes;
        return report;
    }
    std::vector<QMatrix> candidates = basis;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        QMatrix x = QMatrix::zero(rep.dim(), rep.dim());
        for (const auto &b : basis)
            x += Rational(rng.uniform(-3, 3)) * b;
        candidates.push_back(std::move(x));
    }
    for (const auto &x : candidates) {
        if (auto e = splitting_idempotent(x)) {
            report.verdict = Verdict::no;
            report.idempotent = std::move(e);
            return report;
        }
    }
    return report;
}

} // namespace jetalg
