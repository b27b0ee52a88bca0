#include "jetalg/poly_fit.hpp"

#include <algorithm>
#include <sstream>

#include "jetalg/ideals.hpp"

namespace jetalg {

namespace {

Rational basis_weight(LatticePoint m, MultiIndex i) {
    Rational w(monomial(m, i), multi_factorial(i));
    w.canonicalize();
    return w;
}

} // namespace

QMatrix PolyOperatorFamily::evaluate(LatticePoint m) const {
    QMatrix out = QMatrix::zero(dim, dim);
    for (const auto &[i, d] : coeffs) {
        const Rational w = basis_weight(m, i);
        if (sgn(w) != 0)
            out += w * d;
    }
    return out;
}

std::int64_t PolyOperatorFamily::degree() const {
    std::int64_t deg = -1;
    for (const auto &[i, d] : coeffs)
        if (!d.is_zero())
            deg = std::max(deg, i.degree());
    return deg;
}

FitError::FitError(std::int64_t cap_, LatticePoint point_, QMatrix residual_)
    : Error([&] {
          std::ostringstream os;
          os << "no polynomial fit within cap " << cap_ << "; residual at " << point_ << ": " << residual_;
          return os.str();
      }()),
      cap(cap_), point(point_), residual(std::move(residual_)) {}

std::vector<LatticePoint> fit_grid(std::int64_t degree) {
    std::vector<LatticePoint> pts;
    for (std::int64_t a = 1; a <= degree + 2; ++a)
        for (std::int64_t b = 1; b <= degree + 2; ++b)
            pts.push_back({a, b});
    return pts;
}

std::vector<LatticePoint> fit_holdout(std::int64_t degree) {
    std::vector<LatticePoint> pts;
    for (std::int64_t k = 1; k <= degree + 2; ++k) {
        pts.push_back({-1, k});
        pts.push_back({k, -1});
    }
    return pts;
}

namespace {

struct Attempt {
    PolyOperatorFamily family;
    std::optional<std::pair<LatticePoint, QMatrix>> residual;
};

// Interpolates on the triangle {a, b >= 1, a + b <= d + 2} (unisolvent for total degree d),
// then checks the remaining grid points and the held-out set.
Attempt fit_degree(const OperatorSampler &sampler, std::int64_t degree, std::size_t dim,
                   std::map<LatticePoint, QMatrix> &cache) {
    const auto sample = [&](LatticePoint m) -> const QMatrix & {
        auto it = cache.find(m);
        if (it == cache.end()) {
            QMatrix v = sampler(m);
            if (v.rows() != dim || v.cols() != dim)
                throw Error("sampler returned a matrix of the wrong size");
            it = cache.emplace(m, std::move(v)).first;
        }
        return it->second;
    };

    const auto indices = multi_indices_by_degree(0, degree);
    std::vector<LatticePoint> nodes;
    for (std::int64_t a = 1; a <= degree + 1; ++a)
        for (std::int64_t b = 1; a + b <= degree + 2; ++b)
            nodes.push_back({a, b});

    QMatrix vander(nodes.size(), indices.size());
    QMatrix rhs(nodes.size(), dim * dim);
    for (std::size_t r = 0; r < nodes.size(); ++r) {
        for (std::size_t c = 0; c < indices.size(); ++c)
            vander(r, c) = basis_weight(nodes[r], indices[c]);
        const QMatrix &v = sample(nodes[r]);
        for (std::size_t k = 0; k < dim * dim; ++k)
            rhs(r, k) = v(k / dim, k % dim);
    }
    const auto sol = solve(vander, rhs);
    if (!sol)
        throw Error("interpolation nodes are not unisolvent");

    Attempt out;
    out.family.dim = dim;
    for (std::size_t c = 0; c < indices.size(); ++c) {
        QMatrix d(dim, dim);
        for (std::size_t k = 0; k < dim * dim; ++k)
            d(k / dim, k % dim) = (*sol)(c, k);
        if (!d.is_zero())
            out.family.coeffs.emplace(indices[c], std::move(d));
    }

    auto checks = fit_grid(degree);
    const auto held = fit_holdout(degree);
    checks.insert(checks.end(), held.begin(), held.end());
    for (const auto &m : checks) {
        QMatrix diff = sample(m) - out.family.evaluate(m);
        if (!diff.is_zero()) {
            out.residual.emplace(m, std::move(diff));
            break;
        }
    }
    return out;
}

} // namespace

PolyOperatorFamily fit_family(const OperatorSampler &sampler, std::int64_t degree_cap, std::size_t dim) {
    if (degree_cap < 0)
        throw Error("degree_cap must be >= 0");
    if (dim == 0)
        throw Error("operator dimension must be positive");
    std::map<LatticePoint, QMatrix> cache;
    std::optional<std::pair<LatticePoint, QMatrix>> last;
    for (std::int64_t d = 0; d <= degree_cap; ++d) {
        Attempt a = fit_degree(sampler, d, dim, cache);
        if (!a.residual)
            return std::move(a.family);
        last = std::move(a.residual);
    }
    throw FitError(degree_cap, last->first, last->second);
}

bool verify_fit(const PolyOperatorFamily &family, const OperatorSampler &sampler,
                const std::vector<LatticePoint> &probe_points) {
    for (const auto &m : probe_points)
        if (family.evaluate(m) != sampler(m))
            return false;
    return true;
}

bool check_bplus_relations(const PolyOperatorFamily &family) {
    if (family.coeffs.empty())
        return true;
    return !first_bplus_violation(BPlusRep::unchecked(family.dim, family.coeffs)).has_value();
}

std::vector<LatticePoint> default_probe_points() {
    return {{-5, 7}, {7, -5}, {-6, -4}, {-4, -6}, {9, 3},   {3, 9},  {-9, 1},   {1, -9},  {0, -7},  {-7, 0},
            {10, -10}, {-3, -3}, {0, 11}, {11, 0}, {-2, 9}, {9, -2}, {-8, -8}, {12, 5}, {5, 12}, {-2, -11}};
}

bool RoundtripReport::pass() const {
    return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const auto &s) { return s.pass; });
}

RoundtripReport theorem51_roundtrip(const JetModuleSpec &spec, std::int64_t degree_cap) {
    RoundtripReport report;
    const OperatorSampler sampler = [&spec](LatticePoint m) { return extract_L(spec, m); };
    try {
        report.family = fit_family(sampler, degree_cap, spec.dim());
    } catch (const FitError &e) {
        report.stages.push_back({"fit", false, e.what()});
        return report;
    }
    const PolyOperatorFamily &family = *report.family;
    report.stages.push_back({"fit", true, "degree " + std::to_string(family.degree())});

    const bool probes = verify_fit(family, sampler, default_probe_points());
    report.stages.push_back({"probes", probes, probes ? "20 probe points exact" : "probe mismatch"});

    const bool rel = check_bplus_relations(family);
    report.stages.push_back({"bplus-relations", rel, rel ? "all relations hold" : "relation violated"});

    const BPlusRep expected =
        spec.is_f() ? bplus_from_sl2(spec.f().rep, spec.f().alpha) : spec.b().rep;
    const bool same = family.coeffs == expected.gens();
    report.stages.push_back({spec.is_f() ? "closed-form" : "generators", same,
                             same ? "coefficients equal the expected generators" : "coefficient mismatch"});
    return report;
}

} // namespace jetalg
