#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetalg/jet_module.hpp"

namespace jetalg {

/// An operator family m -> sum_i (m^i / i!) D_i with finitely many nonzero D_i.
struct PolyOperatorFamily {
    std::size_t dim = 0;
    std::map<MultiIndex, QMatrix> coeffs;

    QMatrix evaluate(LatticePoint m) const;
    /// Largest |i| with nonzero D_i, or -1 for the zero family.
    std::int64_t degree() const;

    friend bool operator==(const PolyOperatorFamily &, const PolyOperatorFamily &) = default;
};

using OperatorSampler = std::function<QMatrix(LatticePoint)>;

/// No polynomial of total degree <= cap reproduces the sampler; `point` is the first
/// grid or held-out point where the degree-cap attempt disagrees.
class FitError : public Error {
  public:
    FitError(std::int64_t cap, LatticePoint point, QMatrix residual);
    std::int64_t cap;
    LatticePoint point;
    QMatrix residual;
};

/// Evaluation grid {1..d+2}^2 for degree d.
std::vector<LatticePoint> fit_grid(std::int64_t degree);
/// Held-out points (-1, k), (k, -1) for 1 <= k <= d+2.
std::vector<LatticePoint> fit_holdout(std::int64_t degree);

/// Exact interpolation of the sampler by the least total degree d <= degree_cap that
/// agrees on both the grid and the held-out points. Throws FitError otherwise.
PolyOperatorFamily fit_family(const OperatorSampler &sampler, std::int64_t degree_cap, std::size_t dim);

/// sum_i m^i/i! D_i == sampler(m) at every probe point.
bool verify_fit(const PolyOperatorFamily &family, const OperatorSampler &sampler,
                const std::vector<LatticePoint> &probe_points);

/// The coefficients satisfy the B_+ relations (delegates to validate_bplus_rep).
bool check_bplus_relations(const PolyOperatorFamily &family);

/// 20 fixed nonzero points outside every fit grid and held-out set for caps <= 6.
std::vector<LatticePoint> default_probe_points();

struct RoundtripStage {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RoundtripReport {
    std::vector<RoundtripStage> stages;
    std::optional<PolyOperatorFamily> family;
    bool pass() const;
};

/// extract_L -> fit_family -> verify_fit on probe points -> check_bplus_relations, then an
/// exact comparison of the coefficients with the expected generators: bplus_from_sl2(U, alpha)
/// for F-specs, the input generators for B-specs.
RoundtripReport theorem51_roundtrip(const JetModuleSpec &spec, std::int64_t degree_cap);

} // namespace jetalg
