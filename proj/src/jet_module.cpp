#include "jetalg/jet_module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace jetalg {

JetModuleSpec::JetModuleSpec(FSpec f) : v_(std::move(f)) {
    if (sgn(lambda()) == 0)
        throw Error("jet module parameter lambda must be nonzero");
}

JetModuleSpec::JetModuleSpec(BSpec b) : v_(std::move(b)) {
    if (sgn(lambda()) == 0)
        throw Error("jet module parameter lambda must be nonzero");
}

const Rational &JetModuleSpec::lambda() const {
    return std::visit([](const auto &s) -> const Rational & { return s.lambda; }, v_);
}

std::size_t JetModuleSpec::dim() const {
    return std::visit([](const auto &s) { return s.rep.dim(); }, v_);
}

JetModuleSpec make_f_spec(RationalPair alpha, Rational lambda, SL2Rep rep) {
    return JetModuleSpec(FSpec{std::move(alpha), std::move(lambda), std::move(rep)});
}

JetModuleSpec make_b_spec(Rational lambda, BPlusRep rep) {
    return JetModuleSpec(BSpec{std::move(lambda), std::move(rep)});
}

ModuleVector ModuleVector::basis(std::size_t dim, LatticePoint grade, std::size_t k) {
    if (k >= dim)
        throw Error("basis index out of range");
    ModuleVector v(dim);
    QVector u(dim);
    u[k] = 1;
    v.add(grade, u);
    return v;
}

QVector ModuleVector::component(LatticePoint grade) const {
    auto it = support_.find(grade);
    return it == support_.end() ? QVector(dim_) : it->second;
}

void ModuleVector::add(LatticePoint grade, const QVector &v) {
    if (v.size() != dim_)
        throw Error("module vector component has the wrong dimension");
    auto [it, inserted] = support_.try_emplace(grade, v);
    if (!inserted)
        for (std::size_t k = 0; k < dim_; ++k)
            it->second[k] += v[k];
    if (std::all_of(it->second.begin(), it->second.end(), [](const Rational &q) { return sgn(q) == 0; }))
        support_.erase(it);
}

ModuleVector &ModuleVector::operator+=(const ModuleVector &o) {
    if (o.dim_ != dim_)
        throw Error("module vector dimension mismatch");
    for (const auto &[g, v] : o.support_)
        add(g, v);
    return *this;
}

ModuleVector &ModuleVector::operator-=(const ModuleVector &o) {
    if (o.dim_ != dim_)
        throw Error("module vector dimension mismatch");
    for (const auto &[g, v] : o.support_) {
        QVector neg = v;
        for (auto &q : neg)
            q = -q;
        add(g, neg);
    }
    return *this;
}

ModuleVector &ModuleVector::operator*=(const Rational &s) {
    if (sgn(s) == 0) {
        support_.clear();
        return *this;
    }
    for (auto &[g, v] : support_)
        for (auto &q : v)
            q *= s;
    return *this;
}

QMatrix d_grade_matrix(const JetModuleSpec &spec, LatticePoint m, LatticePoint n) {
    if (m.is_zero())
        throw Error("d_(0,0) does not exist");
    const std::size_t d = spec.dim();
    if (spec.is_f()) {
        const FSpec &f = spec.f();
        // rho(m1 m2 h - m1^2 e + m2^2 f) + det(alpha + n; m)
        QMatrix out = f.rep.image(Rational(m.m1 * m.m2), Rational(-(m.m1 * m.m1)), Rational(m.m2 * m.m2));
        const Rational shift = (f.alpha.first + n.m1) * m.m2 - (f.alpha.second + n.m2) * m.m1;
        if (sgn(shift) != 0)
            out += shift * QMatrix::identity(d);
        return out;
    }
    const BSpec &b = spec.b();
    QMatrix out = Rational(det_pair(n, m)) * QMatrix::identity(d);
    for (const auto &[i, gen] : b.rep.gens()) {
        Rational w(monomial(m, i), multi_factorial(i));
        w.canonicalize();
        if (sgn(w) != 0)
            out += w * gen;
    }
    return out;
}

ModuleVector act_t(const JetModuleSpec &spec, LatticePoint m, const ModuleVector &v) {
    if (v.dim() != spec.dim())
        throw Error("module vector dimension does not match the module");
    ModuleVector out(v.dim());
    for (const auto &[g, u] : v.support()) {
        QVector w = u;
        for (auto &q : w)
            q *= spec.lambda();
        out.add(g + m, w);
    }
    return out;
}

ModuleVector act_d(const JetModuleSpec &spec, LatticePoint m, const ModuleVector &v) {
    if (m.is_zero())
        throw Error("d_(0,0) does not exist");
    if (v.dim() != spec.dim())
        throw Error("module vector dimension does not match the module");
    ModuleVector out(v.dim());
    for (const auto &[g, u] : v.support())
        out.add(g + m, d_grade_matrix(spec, m, g) * u);
    return out;
}

ModuleVector act_element(const JetModuleSpec &spec, const GAElement &x, const ModuleVector &v) {
    ModuleVector out(v.dim());
    for (const auto &[m, c] : x.g)
        out += c * act_d(spec, m, v);
    for (const auto &[n, c] : x.a)
        out += c * act_t(spec, n, v);
    return out;
}

QMatrix extract_L(const JetModuleSpec &spec, LatticePoint m) {
    const std::size_t d = spec.dim();
    QMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const QVector col = act_d(spec, m, ModuleVector::basis(d, {0, 0}, k)).component(m);
        for (std::size_t i = 0; i < d; ++i)
            out(i, k) = col[i];
    }
    return out;
}

QMatrix extract_L(const JetModuleSpec &spec, const LElement &x) {
    QMatrix out = QMatrix::zero(spec.dim(), spec.dim());
    for (const auto &[m, c] : x)
        out += c * extract_L(spec, m);
    return out;
}

std::vector<LatticePoint> default_sample_grades() { return {{0, 0}, {1, -2}, {-3, 1}}; }

namespace {

// Matrix of t^m from V_g to V_{g+m}, assembled from act_t on basis vectors.
QMatrix t_grade_matrix(const JetModuleSpec &spec, LatticePoint m, LatticePoint g) {
    const std::size_t d = spec.dim();
    QMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const QVector col = act_t(spec, m, ModuleVector::basis(d, g, k)).component(g + m);
        for (std::size_t i = 0; i < d; ++i)
            out(i, k) = col[i];
    }
    return out;
}

class AxiomRecorder {
  public:
    explicit AxiomRecorder(std::string name) { result_.axiom = std::move(name); }

    void check(bool ok, const std::function<std::string()> &describe) {
        if (ok || !result_.pass)
            return;
        result_.pass = false;
        result_.counterexample = describe();
    }
    AxiomResult take() { return std::move(result_); }

  private:
    AxiomResult result_;
};

std::string instance(LatticePoint m, LatticePoint n, LatticePoint g, const QMatrix &lhs, const QMatrix &rhs) {
    std::ostringstream os;
    os << "m=" << m << " n=" << n << " grade=" << g << ": lhs " << lhs << " != rhs " << rhs;
    return os.str();
}

} // namespace

std::vector<AxiomResult> verify_jet_axioms(const JetModuleSpec &spec, std::int64_t window_radius,
                                           const std::vector<LatticePoint> &sample_grades) {
    if (window_radius < 1)
        throw Error("window_radius must be >= 1");
    const std::size_t d = spec.dim();
    const QMatrix zero = QMatrix::zero(d, d);
    std::vector<LatticePoint> window, punctured;
    for (std::int64_t a = -window_radius; a <= window_radius; ++a)
        for (std::int64_t b = -window_radius; b <= window_radius; ++b) {
            window.push_back({a, b});
            if (a != 0 || b != 0)
                punctured.push_back({a, b});
        }

    AxiomRecorder dd("brackets-dd"), dt("brackets-dt"), tt("brackets-tt"), qa("quasi-associative"),
        bij("bijective"), dims("bounded-dims");

    for (const auto &g : sample_grades) {
        std::map<LatticePoint, QMatrix> d_at_g;
        for (const auto &m : punctured)
            d_at_g.emplace(m, d_grade_matrix(spec, m, g));

        for (const auto &m : punctured) {
            const QMatrix &dm = d_at_g.at(m);
            dims.check(dm.rows() == d && dm.cols() == d, [&] {
                std::ostringstream os;
                os << "d_m at grade " << g << " is " << dm.rows() << "x" << dm.cols() << ", expected " << d;
                return os.str();
            });
            for (const auto &n : punctured) {
                const QMatrix lhs = d_grade_matrix(spec, m, g + n) * d_at_g.at(n) -
                                    d_grade_matrix(spec, n, g + m) * dm;
                const auto det = det_pair(n, m);
                const QMatrix rhs = (m + n).is_zero() ? zero : Rational(det) * d_grade_matrix(spec, m + n, g);
                dd.check(lhs == rhs, [&] { return instance(m, n, g, lhs, rhs); });
            }
        }

        for (const auto &m : punctured)
            for (const auto &n : window) {
                const QMatrix lhs =
                    d_grade_matrix(spec, m, g + n) * t_grade_matrix(spec, n, g) - t_grade_matrix(spec, n, g + m) * d_at_g.at(m);
                const QMatrix rhs = Rational(det_pair(n, m)) * t_grade_matrix(spec, m + n, g);
                dt.check(lhs == rhs, [&] { return instance(m, n, g, lhs, rhs); });
            }

        for (const auto &m : window)
            for (const auto &n : window) {
                const QMatrix tmtn = t_grade_matrix(spec, m, g + n) * t_grade_matrix(spec, n, g);
                const QMatrix tntm = t_grade_matrix(spec, n, g + m) * t_grade_matrix(spec, m, g);
                tt.check(tmtn == tntm, [&] { return instance(m, n, g, tmtn, tntm); });
                if (m.is_zero() || n.is_zero() || (m + n).is_zero())
                    continue;
                const QMatrix rhs = spec.lambda() * t_grade_matrix(spec, m + n, g);
                qa.check(tmtn == rhs, [&] { return instance(m, n, g, tmtn, rhs); });
            }

        for (const auto &m : punctured) {
            const QMatrix tm = t_grade_matrix(spec, m, g);
            bij.check(rank(tm) == d, [&] {
                std::ostringstream os;
                os << "t^m with m=" << m << " at grade " << g << " has rank " << rank(tm) << " < " << d;
                return os.str();
            });
        }
    }

    std::vector<AxiomResult> out;
    for (auto *r : {&dd, &dt, &tt, &qa, &bij, &dims})
        out.push_back(r->take());
    return out;
}

bool f_is_irreducible(const JetModuleSpec &spec) {
    if (!spec.is_f())
        throw Error("irreducibility is only decided for F-specs; use bplus_indecomposable for B-specs");
    return sl2_is_irreducible(spec.f().rep);
}

bool f_isomorphic(const JetModuleSpec &a, const JetModuleSpec &b) {
    if (!f_is_irreducible(a) || !f_is_irreducible(b))
        throw Error("the isomorphism criterion needs irreducible F-specs");
    const FSpec &x = a.f(), &y = b.f();
    return is_integer(x.alpha.first - y.alpha.first) && is_integer(x.alpha.second - y.alpha.second) &&
           x.lambda == y.lambda && sl2_isomorphic(x.rep, y.rep);
}

} // namespace jetalg
