#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jetalg/formal_sum.hpp"
#include "jetalg/matrix.hpp"
#include "jetalg/rep.hpp"

namespace jetalg {

using RationalPair = std::pair<Rational, Rational>;

/// F(alpha, lambda, U): the jet module A ⊗ U built from an sl2-module U.
struct FSpec {
    RationalPair alpha;
    Rational lambda;
    SL2Rep rep;

    friend bool operator==(const FSpec &, const FSpec &) = default;
};

/// A ⊗ U for a finite-dimensional B_+ module U, with L(m) = sum m^i/i! D_i.
struct BSpec {
    Rational lambda;
    BPlusRep rep;

    friend bool operator==(const BSpec &, const BSpec &) = default;
};

/// Recipe for a jet module. Construction rejects lambda = 0.
class JetModuleSpec {
  public:
    JetModuleSpec(FSpec f);
    JetModuleSpec(BSpec b);

    bool is_f() const { return std::holds_alternative<FSpec>(v_); }
    bool is_b() const { return std::holds_alternative<BSpec>(v_); }
    const FSpec &f() const { return std::get<FSpec>(v_); }
    const BSpec &b() const { return std::get<BSpec>(v_); }
    const Rational &lambda() const;
    std::size_t dim() const;

    friend bool operator==(const JetModuleSpec &, const JetModuleSpec &) = default;

  private:
    std::variant<FSpec, BSpec> v_;
};

JetModuleSpec make_f_spec(RationalPair alpha, Rational lambda, SL2Rep rep);
JetModuleSpec make_b_spec(Rational lambda, BPlusRep rep);

/// A vector of V = ⊕_n t^n ⊗ U with finite grade support; zero components are not stored.
class ModuleVector {
  public:
    explicit ModuleVector(std::size_t dim) : dim_(dim) {}

    /// The basis vector t^grade ⊗ u_k.
    static ModuleVector basis(std::size_t dim, LatticePoint grade, std::size_t k);

    std::size_t dim() const { return dim_; }
    const std::map<LatticePoint, QVector> &support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    /// Component at `grade` (zero if absent).
    QVector component(LatticePoint grade) const;
    void add(LatticePoint grade, const QVector &v);

    ModuleVector &operator+=(const ModuleVector &o);
    ModuleVector &operator-=(const ModuleVector &o);
    ModuleVector &operator*=(const Rational &s);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector &b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector &b) { return a -= b; }
    friend ModuleVector operator*(const Rational &s, ModuleVector a) { return a *= s; }
    friend bool operator==(const ModuleVector &, const ModuleVector &) = default;

  private:
    std::size_t dim_;
    std::map<LatticePoint, QVector> support_;
};

/// Matrix of d_m on the grade-n component, as a map V_n -> V_{m+n}.
QMatrix d_grade_matrix(const JetModuleSpec &spec, LatticePoint m, LatticePoint n);

/// t^m (t^n ⊗ u) = lambda t^{m+n} ⊗ u, for every m including (0,0).
ModuleVector act_t(const JetModuleSpec &spec, LatticePoint m, const ModuleVector &v);

/// d_m on V; m must be nonzero.
ModuleVector act_d(const JetModuleSpec &spec, LatticePoint m, const ModuleVector &v);

/// Linear extension of act_d and act_t to G ⋉ A.
ModuleVector act_element(const JetModuleSpec &spec, const GAElement &x, const ModuleVector &v);

/// The operator L(m) on V_0 defined by d_m v = t^m L(m) v.
QMatrix extract_L(const JetModuleSpec &spec, LatticePoint m);

/// Linear extension of extract_L to elements of L.
QMatrix extract_L(const JetModuleSpec &spec, const LElement &x);

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    /// First failing instance, human-readable.
    std::optional<std::string> counterexample;
};

/// Checks the jet-module axioms exactly on the window [-R, R]^2 and the sampled grades:
///   brackets-dd  [d_m, d_n] = det(n;m) d_{m+n}
///   brackets-dt  [d_m, t^n] = det(n;m) t^{m+n}
///   brackets-tt  [t^m, t^n] = 0
///   quasi-associative  t^m t^n = lambda t^{m+n}  (m, n, m+n nonzero)
///   bijective    t^m is invertible between homogeneous components
///   bounded-dims every homogeneous component has dimension dim U
std::vector<AxiomResult> verify_jet_axioms(const JetModuleSpec &spec, std::int64_t window_radius,
                                           const std::vector<LatticePoint> &sample_grades);

/// Grades probed when the caller does not supply any.
std::vector<LatticePoint> default_sample_grades();

/// Irreducibility of F(alpha, lambda, U) is that of U. Throws on B-specs.
bool f_is_irreducible(const JetModuleSpec &spec);

/// F(a, l, U) ≅ F(a', l', U') iff a - a' in Z^2, l = l' and U ≅ U'. Both must be irreducible.
bool f_isomorphic(const JetModuleSpec &a, const JetModuleSpec &b);

} // namespace jetalg
