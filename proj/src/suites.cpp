#include "jetalg/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "jetalg/ideals.hpp"
#include "jetalg/lie.hpp"
#include "jetalg/poly_fit.hpp"

namespace jetalg {

namespace {

template <class T>
std::string str(const T &x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

class Report {
  public:
    Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

    void add(std::string check, bool pass, std::string detail) {
        out_.push_back({suite_, std::move(check), pass, seed_, std::move(detail)});
    }

    // Runs `n` randomized trials; stops at and reports the first failure.
    void trials(const std::string &check, int n, const std::function<std::optional<std::string>(int)> &trial) {
        for (int t = 0; t < n; ++t)
            if (auto failure = trial(t)) {
                add(check, false, "trial " + std::to_string(t) + ": " + *failure);
                return;
            }
        add(check, true, std::to_string(n) + " trials");
    }

    std::vector<CheckResult> take() { return std::move(out_); }

  private:
    std::string suite_;
    std::uint64_t seed_;
    std::vector<CheckResult> out_;
};

template <class Element, class Gen, class Bracket>
void jacobi_checks(Report &r, const std::string &name, int n, Gen gen, Bracket bracket) {
    r.trials("jacobi-" + name, n, [&](int) -> std::optional<std::string> {
        const Element x = gen(), y = gen(), z = gen();
        const Element defect = jacobi_defect(x, y, z, bracket);
        if (defect.is_zero())
            return std::nullopt;
        return "x=" + str(x) + " y=" + str(y) + " z=" + str(z) + " defect=" + str(defect);
    });
    r.trials("antisymmetry-" + name, n, [&](int) -> std::optional<std::string> {
        const Element x = gen(), y = gen();
        Element sum = bracket(x, y);
        sum += bracket(y, x);
        if (sum.is_zero())
            return std::nullopt;
        return "x=" + str(x) + " y=" + str(y);
    });
}

std::vector<CheckResult> jacobi_suite(const SuiteConfig &cfg) {
    Report r("jacobi", cfg.seed);
    Rng rng(cfg.seed);
    const int n = cfg.trials;
    jacobi_checks<GElement>(r, "g", n, [&] { return random_g(rng, 5); }, bracket_g);
    jacobi_checks<LElement>(r, "l", n, [&] { return random_l(rng, 5); }, bracket_l);
    jacobi_checks<BPlusElement>(r, "bplus", n, [&] { return random_bplus(rng, 5); }, bracket_bplus);

    // GAElement is not a FormalSum, so the semidirect checks are spelled out.
    r.trials("jacobi-semidirect", n, [&](int) -> std::optional<std::string> {
        const GAElement x = random_ga(rng, 5), y = random_ga(rng, 5), z = random_ga(rng, 5);
        const GAElement defect = jacobi_defect(x, y, z, bracket_semidirect);
        if (defect.is_zero())
            return std::nullopt;
        return "x=" + str(x) + " y=" + str(y) + " z=" + str(z) + " defect=" + str(defect);
    });
    r.trials("antisymmetry-semidirect", n, [&](int) -> std::optional<std::string> {
        const GAElement x = random_ga(rng, 5), y = random_ga(rng, 5);
        if ((bracket_semidirect(x, y) + bracket_semidirect(y, x)).is_zero())
            return std::nullopt;
        return "x=" + str(x) + " y=" + str(y);
    });

    r.trials("bplus-decomposition", n, [&](int) -> std::optional<std::string> {
        const BPlusElement x = random_bplus(rng, 5, 4, 2), y = random_bplus(rng, 5, 4, 2);
        const BPlusElement b = bracket_bplus(x, y);
        for (const auto &[i, c] : b)
            if (i.degree() < 2)
                return "[B'_+, B'_+] left B'_+: " + str(b);
        const BPlusElement u = random_bplus(rng, 1), v = random_bplus(rng, 1);
        for (const auto &[i, c] : bracket_bplus(u, v))
            if (i.degree() > 1)
                return "[Z, Z] left Z";
        if (!bracket_bplus(x, u).is_zero())
            return "Z does not commute with B'_+: " + str(x) + ", " + str(u);
        return std::nullopt;
    });
    return r.take();
}

std::vector<CheckResult> ideals_suite(const SuiteConfig &cfg) {
    Report r("ideals", cfg.seed);
    Rng rng(cfg.seed);
    const int n = cfg.trials;

    r.trials("filtration", n, [&](int) -> std::optional<std::string> {
        const auto k = rng.uniform(2, 4);
        const LElement x = sample_Ik(rng, k + 1, 4);
        if (!in_ideal_Ik(x, k + 1))
            return "sampled element not in I_" + std::to_string(k + 1);
        if (!in_ideal_Ik(x, k))
            return "element of I_" + std::to_string(k + 1) + " not in I_" + std::to_string(k) + ": " + str(x);
        return std::nullopt;
    });
    r.trials("ideal-property", n, [&](int) -> std::optional<std::string> {
        const auto k = rng.uniform(2, 4);
        const LElement x = sample_Ik(rng, k, 4), y = random_l(rng, 4);
        if (in_ideal_Ik(bracket_l(y, x), k))
            return std::nullopt;
        return "k=" + std::to_string(k) + " x=" + str(x) + " y=" + str(y);
    });
    r.trials("bracket-filtration", n, [&](int) -> std::optional<std::string> {
        const auto k = rng.uniform(2, 4), l = rng.uniform(2, 4);
        const LElement x = sample_Ik(rng, k, 4), y = sample_Ik(rng, l, 4);
        if (in_ideal_Ik(bracket_l(x, y), k + l - 1))
            return std::nullopt;
        return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " x=" + str(x) + " y=" + str(y);
    });
    r.trials("kernel-characterization", n, [&](int t) -> std::optional<std::string> {
        LElement x = sample_I2_derived(rng, 4);
        // Every other trial perturbs the kernel element off the kernel (or not).
        if (t % 2 == 1)
            x += random_l(rng, 2, 2);
        const bool in_kernel = project_reductive(x).is_zero();
        const bool predicted = in_ideal_Ik(x, 2) && in_derived(x);
        if (in_kernel == predicted)
            return std::nullopt;
        return "pi(x)=0 is " + std::string(in_kernel ? "true" : "false") + " for x=" + str(x);
    });

    bool diff_ok = true;
    std::string diff_detail = "s in [-" + std::to_string(cfg.window_radius) + "," +
                              std::to_string(cfg.window_radius) + "], 2 <= k < l <= 8";
    for (std::int64_t s = -cfg.window_radius; s <= cfg.window_radius && diff_ok; ++s)
        for (std::int64_t l = 3; l <= 8 && diff_ok; ++l)
            for (std::int64_t k = 2; k < l && diff_ok; ++k)
                if (!in_ideal_Ik(diff_derivative(1, s, l), k)) {
                    diff_ok = false;
                    diff_detail = "s=" + std::to_string(s) + " l=" + std::to_string(l) + " k=" + std::to_string(k);
                }
    r.add("diff-derivative", diff_ok, diff_detail);

    for (std::int64_t k = 2; k <= std::min<std::int64_t>(cfg.window_radius, 4); ++k) {
        const auto got = window_codim_Ik(k, cfg.window_radius);
        const auto want = static_cast<std::size_t>((k * k + 3 * k - 4) / 2);
        r.add("codim-I" + std::to_string(k), got == want,
              "window " + std::to_string(cfg.window_radius) + ": rank " + std::to_string(got) + ", expected " +
                  std::to_string(want));
    }
    return r.take();
}

std::vector<CheckResult> sl2_quotient_suite(const SuiteConfig &cfg) {
    Report r("sl2-quotient", cfg.seed);
    Rng rng(cfg.seed);
    const auto R = cfg.window_radius;

    std::optional<std::string> hom_failure;
    for (std::int64_t a = -R; a <= R && !hom_failure; ++a)
        for (std::int64_t b = -R; b <= R && !hom_failure; ++b)
            for (std::int64_t c = -R; c <= R && !hom_failure; ++c)
                for (std::int64_t d = -R; d <= R && !hom_failure; ++d) {
                    const LatticePoint m{a, b}, n{c, d};
                    if (m.is_zero() || n.is_zero())
                        continue;
                    const LElement x = LElement::basis(m), y = LElement::basis(n);
                    if (project_reductive(bracket_l(x, y)) != bracket_reductive(project_reductive(x), project_reductive(y)))
                        hom_failure = "m=" + str(m) + " n=" + str(n);
                }
    r.add("homomorphism-window", !hom_failure, hom_failure.value_or("all basis pairs in the window"));

    r.trials("homomorphism-random", cfg.trials, [&](int) -> std::optional<std::string> {
        const LElement x = random_l(rng, 4), y = random_l(rng, 4);
        if (project_reductive(bracket_l(x, y)) == bracket_reductive(project_reductive(x), project_reductive(y)))
            return std::nullopt;
        return "x=" + str(x) + " y=" + str(y);
    });

    const ReductiveElement e = project_reductive(LElement{{{1, 0}, -1}});
    const ReductiveElement f = project_reductive(LElement{{{0, 1}, 1}});
    const ReductiveElement h = project_reductive(LElement{{{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}});
    const bool standard = e.sl2() == QMatrix{{0, 1}, {0, 0}} && f.sl2() == QMatrix{{0, 0}, {1, 0}} &&
                          h.sl2() == QMatrix{{1, 0}, {0, -1}};
    r.add("standard-matrices", standard, "e, f, h project to the standard sl2 basis");
    const bool relations = bracket_reductive(e, f).sl2() == h.sl2() && bracket_reductive(h, e).sl2() == 2 * e.sl2() &&
                           bracket_reductive(h, f).sl2() == -2 * f.sl2();
    r.add("sl2-relations", relations, "[e,f]=h, [h,e]=2e, [h,f]=-2f");

    for (std::int64_t radius = 1; radius <= R; ++radius) {
        const auto got = window_codim_Ik(2, radius);
        r.add("codim-I2-window" + std::to_string(radius), got == 3, "rank " + std::to_string(got));
    }
    return r.take();
}

std::vector<CheckResult> jk_suite(const SuiteConfig &cfg) {
    Report r("jk", cfg.seed);
    Rng rng(cfg.seed);
    r.trials("j-filtration", cfg.trials, [&](int) -> std::optional<std::string> {
        const auto k = rng.uniform(2, 5), l = rng.uniform(2, 5);
        const BPlusElement x = sample_Jk(rng, k, k + 3), y = sample_Jk(rng, l, l + 3);
        if (!in_ideal_Jk(x, k) || !in_ideal_Jk(y, l))
            return "sampler left J_k";
        const BPlusElement b = bracket_bplus(x, y);
        if (b.is_zero() || in_ideal_Jk(b, k + l - 2))
            return std::nullopt;
        return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " [x,y]=" + str(b);
    });
    r.trials("j-ideal", cfg.trials, [&](int) -> std::optional<std::string> {
        const auto k = rng.uniform(2, 5);
        const BPlusElement x = sample_Jk(rng, k, k + 3), y = random_bplus(rng, 5, 4, 2);
        const BPlusElement b = bracket_bplus(y, x);
        if (b.is_zero() || in_ideal_Jk(b, k))
            return std::nullopt;
        return "k=" + std::to_string(k) + " [y,x]=" + str(b);
    });
    return r.take();
}

std::string spec_label(const JetModuleSpec &spec, std::size_t k) {
    std::ostringstream os;
    os << "spec" << k;
    if (spec.is_f())
        os << "(alpha=(" << to_string(spec.f().alpha.first) << "," << to_string(spec.f().alpha.second)
           << "),lambda=" << to_string(spec.lambda()) << ",dim=" << spec.dim() << ")";
    else
        os << "(B,lambda=" << to_string(spec.lambda()) << ",dim=" << spec.dim() << ")";
    return os.str();
}

void jet_checks(Report &r, const JetModuleSpec &spec, const std::string &label, const SuiteConfig &cfg, Rng &rng) {
    const std::string pre = label.empty() ? "" : label + "/";
    if (spec.is_b()) {
        const auto violation = first_bplus_violation(spec.b().rep);
        r.add(pre + "bplus-relations", !violation, violation ? violation->what() : "all relations hold");
    }
    for (const auto &a : verify_jet_axioms(spec, cfg.window_radius, default_sample_grades()))
        r.add(pre + a.axiom, a.pass, a.counterexample.value_or("window " + std::to_string(cfg.window_radius)));

    const auto R = cfg.window_radius;
    r.trials(pre + "representation", cfg.trials, [&](int) -> std::optional<std::string> {
        const GAElement x = random_ga(rng, 3, 2), y = random_ga(rng, 3, 2);
        const ModuleVector v = random_module_vector(rng, spec.dim(), 3);
        const ModuleVector lhs = act_element(spec, bracket_semidirect(x, y), v);
        const ModuleVector rhs = act_element(spec, x, act_element(spec, y, v)) - act_element(spec, y, act_element(spec, x, v));
        if (lhs == rhs)
            return std::nullopt;
        return "x=" + str(x) + " y=" + str(y);
    });

    std::optional<std::string> comm;
    std::optional<std::string> grade;
    std::map<LatticePoint, QMatrix> L;
    for (std::int64_t a = -2 * R; a <= 2 * R; ++a)
        for (std::int64_t b = -2 * R; b <= 2 * R; ++b)
            if (a != 0 || b != 0)
                L.emplace(LatticePoint{a, b}, extract_L(spec, {a, b}));
    const QMatrix id = QMatrix::identity(spec.dim());
    for (const auto &[m, lm] : L) {
        if (std::max(std::abs(m.m1), std::abs(m.m2)) > R)
            continue;
        for (const auto &[n, ln] : L) {
            if (std::max(std::abs(n.m1), std::abs(n.m2)) > R || comm)
                continue;
            const QMatrix lhs = mat_commutator(lm, ln);
            QMatrix rhs = -lm - ln;
            if (!(m + n).is_zero())
                rhs += L.at(m + n);
            rhs *= Rational(det_pair(n, m));
            if (lhs != rhs)
                comm = "m=" + str(m) + " n=" + str(n);
            if (!grade && d_grade_matrix(spec, m, n) != lm + Rational(det_pair(n, m)) * id)
                grade = "m=" + str(m) + " grade=" + str(n);
        }
    }
    r.add(pre + "l-commutator", !comm, comm.value_or("[L(m),L(n)] on the window"));
    r.add(pre + "grade-shift", !grade, grade.value_or("d_m on V_n equals L(m) + det(n;m)"));

    if (spec.is_f()) {
        const JetModuleSpec b = make_b_spec(spec.lambda(), bplus_from_sl2(spec.f().rep, spec.f().alpha));
        std::optional<std::string> disagree;
        for (std::int64_t g1 = -2; g1 <= 2 && !disagree; ++g1)
            for (std::int64_t g2 = -2; g2 <= 2 && !disagree; ++g2)
                for (std::int64_t a = -R; a <= R && !disagree; ++a)
                    for (std::int64_t c = -R; c <= R && !disagree; ++c) {
                        const LatticePoint g{g1, g2}, m{a, c};
                        if (!m.is_zero() && d_grade_matrix(spec, m, g) != d_grade_matrix(b, m, g))
                            disagree = "d_m with m=" + str(m) + " at grade " + str(g);
                        for (std::size_t k = 0; k < spec.dim() && !disagree; ++k) {
                            const ModuleVector v = ModuleVector::basis(spec.dim(), g, k);
                            if (act_t(spec, m, v) != act_t(b, m, v))
                                disagree = "t^m with m=" + str(m) + " at grade " + str(g);
                        }
                    }
        r.add(pre + "f-b-agreement", !disagree, disagree.value_or("grades [-2,2]^2"));
    }
}

std::vector<CheckResult> jet_suite(const SuiteConfig &cfg, const std::optional<JetModuleSpec> &spec) {
    Report r("jet", cfg.seed);
    Rng rng(cfg.seed);
    if (spec) {
        jet_checks(r, *spec, "", cfg, rng);
    } else {
        const auto specs = reference_f_specs();
        for (std::size_t k = 0; k < specs.size(); ++k)
            jet_checks(r, specs[k], spec_label(specs[k], k), cfg, rng);
    }
    return r.take();
}

void fit_checks(Report &r, const JetModuleSpec &spec, const std::string &label, const SuiteConfig &cfg) {
    const std::string pre = label.empty() ? "" : label + "/";
    const RoundtripReport rt = theorem51_roundtrip(spec, cfg.degree_cap);
    for (const auto &s : rt.stages)
        r.add(pre + s.name, s.pass, s.detail);
    if (!rt.family)
        return;
    const PolyOperatorFamily &fam = *rt.family;
    if (spec.is_f()) {
        const bool d00 = !fam.coeffs.contains(MultiIndex(0, 0));
        r.add(pre + "d00-zero", d00, d00 ? "fitted D_(0,0) is zero" : "fitted D_(0,0) is nonzero");
    }
    const auto d = std::max<std::int64_t>(fam.degree(), 0);
    std::optional<std::string> bad;
    for (std::int64_t l = d + 1; l <= d + 3 && !bad; ++l)
        for (std::int64_t s = -3; s <= 3 && !bad; ++s)
            if (!operator_difference(spec, s, l).is_zero())
                bad = "s=" + std::to_string(s) + " l=" + std::to_string(l);
    r.add(pre + "difference-operators", !bad, bad.value_or("alternating sums vanish past the fitted degree"));
}

std::vector<CheckResult> fit_suite(const SuiteConfig &cfg, const std::optional<JetModuleSpec> &spec) {
    Report r("fit", cfg.seed);
    if (spec) {
        fit_checks(r, *spec, "", cfg);
    } else {
        const auto specs = reference_f_specs();
        for (std::size_t k = 0; k < specs.size(); ++k)
            fit_checks(r, specs[k], spec_label(specs[k], k), cfg);
        Rng rng(cfg.seed);
        for (int k = 0; k < 3; ++k) {
            const JetModuleSpec b = make_b_spec(rng.nonzero_rational(), random_bplus_rep(rng, k % 2 == 0));
            fit_checks(r, b, "random-B" + std::to_string(k), cfg);
        }
    }
    return r.take();
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"jacobi", "ideals", "sl2-quotient", "jet", "fit", "jk"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string &name, const SuiteConfig &config,
                                   const std::optional<JetModuleSpec> &spec) {
    if (config.window_radius < 1)
        throw Error("window radius must be >= 1");
    if (config.degree_cap < 0)
        throw Error("degree cap must be >= 0");
    if (config.trials < 1)
        throw Error("trials must be >= 1");
    if (name == "jacobi")
        return jacobi_suite(config);
    if (name == "ideals")
        return ideals_suite(config);
    if (name == "sl2-quotient")
        return sl2_quotient_suite(config);
    if (name == "jet")
        return jet_suite(config, spec);
    if (name == "fit")
        return fit_suite(config, spec);
    if (name == "jk")
        return jk_suite(config);
    throw Error("unknown suite '" + name + "'");
}

bool all_pass(const std::vector<CheckResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &c) { return c.pass; });
}

std::vector<JetModuleSpec> reference_f_specs() {
    const std::vector<RationalPair> alphas{{0, 0}, {make_rational(1, 2), 0}, {make_rational(1, 3), -2}};
    const std::vector<Rational> lambdas{1, 2, make_rational(-1, 2)};
    std::vector<JetModuleSpec> out;
    for (const auto &a : alphas)
        for (const auto &l : lambdas)
            for (std::int64_t n = 0; n <= 2; ++n)
                out.push_back(make_f_spec(a, l, sl2_irrep(n)));
    return out;
}

BPlusRep truncated_adjoint_rep(std::int64_t top, const Rational &a, const Rational &b) {
    if (top < 2)
        throw Error("truncation degree must be >= 2");
    const auto basis = multi_indices_by_degree(2, top);
    std::map<MultiIndex, std::size_t> pos;
    for (std::size_t k = 0; k < basis.size(); ++k)
        pos.emplace(basis[k], k);
    const std::size_t d = basis.size();
    BPlusRep::GeneratorMap gens;
    for (const auto &j : basis) {
        QMatrix ad(d, d);
        for (const auto &i : basis) {
            for (const auto &[k, c] : bracket_bplus(BPlusElement::basis(j), BPlusElement::basis(i))) {
                auto it = pos.find(k);
                if (it != pos.end())
                    ad(it->second, pos.at(i)) = c;
            }
        }
        gens.emplace(j, std::move(ad));
    }
    gens.emplace(MultiIndex(1, 0), a * QMatrix::identity(d));
    gens.emplace(MultiIndex(0, 1), b * QMatrix::identity(d));
    return validate_bplus_rep(d, std::move(gens));
}

BPlusRep random_bplus_rep(Rng &rng, bool with_degree3_block) {
    const auto random_alpha = [&] { return RationalPair{rng.rational(3, 3), rng.rational(3, 3)}; };
    BPlusRep rep = bplus_from_sl2(sl2_irrep(rng.uniform(0, 2)), random_alpha());
    if (rng.uniform(0, 1) == 1)
        rep = direct_sum(rep, bplus_from_sl2(sl2_irrep(rng.uniform(0, 1)), random_alpha()));
    if (with_degree3_block) {
        const auto [a, b] = random_alpha();
        rep = direct_sum(rep, truncated_adjoint_rep(3, a, b));
    }
    return conjugate(rep, rng.invertible_matrix(rep.dim()));
}

ModuleVector random_module_vector(Rng &rng, std::size_t dim, std::int64_t radius, int max_terms) {
    ModuleVector v(dim);
    const auto n = rng.uniform(1, max_terms);
    for (std::int64_t t = 0; t < n; ++t) {
        QVector u(dim);
        for (auto &q : u)
            q = rng.rational();
        v.add(rng.point(radius), u);
    }
    return v;
}

QMatrix operator_difference(const JetModuleSpec &spec, std::int64_t s, std::int64_t l) {
    return extract_L(spec, diff_derivative(1, s, l));
}

} // namespace jetalg
