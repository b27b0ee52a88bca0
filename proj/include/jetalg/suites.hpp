#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetalg/jet_module.hpp"
#include "jetalg/random.hpp"

namespace jetalg {

/// One line of a verification report.
struct CheckResult {
    std::string suite;
    std::string check;
    bool pass = true;
    std::uint64_t seed = 0;
    std::string detail;
};

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::int64_t window_radius = 3;
    std::int64_t degree_cap = 6;
    /// Random samples per randomized check (also the indecomposability probe budget).
    int trials = 16;
};

/// "jacobi", "ideals", "sl2-quotient", "jet", "fit", "jk".
const std::vector<std::string> &suite_names();

/// Runs the named suite. `spec` is used by "jet" and "fit"; without it they run over
/// reference_f_specs(). Throws Error for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string &name, const SuiteConfig &config,
                                   const std::optional<JetModuleSpec> &spec = std::nullopt);

bool all_pass(const std::vector<CheckResult> &results);

/// The 27 F-specs alpha in {(0,0), (1/2,0), (1/3,-2)}, lambda in {1, 2, -1/2},
/// U = sl2_irrep(n), n in {0, 1, 2}.
std::vector<JetModuleSpec> reference_f_specs();

/// Adjoint action of B'_+ / J_{top+1} on span{D_i : 2 <= |i| <= top}, with D_(1,0), D_(0,1)
/// acting as the scalars a, b. Generators reach degree `top`.
BPlusRep truncated_adjoint_rep(std::int64_t top, const Rational &a, const Rational &b);

/// A valid rep of degree <= 3: a random direct sum of bplus_from_sl2 blocks and (optionally)
/// a truncated adjoint block, conjugated by a random invertible matrix.
BPlusRep random_bplus_rep(Rng &rng, bool with_degree3_block);

ModuleVector random_module_vector(Rng &rng, std::size_t dim, std::int64_t radius, int max_terms = 3);

/// Alternating sum sum_i (-1)^(l-i) C(l,i) L(s+i, 1) of extracted operators.
QMatrix operator_difference(const JetModuleSpec &spec, std::int64_t s, std::int64_t l);

} // namespace jetalg
