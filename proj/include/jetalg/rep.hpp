#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "jetalg/formal_sum.hpp"
#include "jetalg/matrix.hpp"

namespace jetalg {

/// A finite-dimensional sl2 representation, given by the images of e, f, h.
/// The relations [h,e] = 2e, [h,f] = -2f, [e,f] = h are checked on construction.
class SL2Rep {
  public:
    SL2Rep(QMatrix e, QMatrix f, QMatrix h);

    std::size_t dim() const { return e_.rows(); }
    const QMatrix &e() const { return e_; }
    const QMatrix &f() const { return f_; }
    const QMatrix &h() const { return h_; }

    /// The image of the 2x2 traceless matrix [[a, b], [c, -a]] = a h + b e + c f.
    QMatrix image(const Rational &a, const Rational &b, const Rational &c) const;

    friend bool operator==(const SL2Rep &, const SL2Rep &) = default;

  private:
    QMatrix e_, f_, h_;
};

/// The (n+1)-dimensional irreducible module on v_0..v_n:
/// h v_k = (n-2k) v_k,  f v_k = v_{k+1},  e v_k = k(n-k+1) v_{k-1}.
SL2Rep sl2_irrep(std::int64_t n);

SL2Rep direct_sum(const SL2Rep &a, const SL2Rep &b);

/// p^{-1} x p applied to each of e, f, h.
SL2Rep conjugate(const SL2Rep &rep, const QMatrix &p);

/// dim ker e == 1; by complete reducibility this counts the irreducible summands.
bool sl2_is_irreducible(const SL2Rep &rep);

/// Irreducible sl2-modules are classified by dimension. Throws on reducible input.
bool sl2_isomorphic(const SL2Rep &a, const SL2Rep &b);

/// Raised by validate_bplus_rep with the offending pair and both sides of the relation.
class RelationViolation : public Error {
  public:
    RelationViolation(MultiIndex i, MultiIndex j, QMatrix lhs, QMatrix rhs);
    MultiIndex i, j;
    QMatrix lhs, rhs;
};

/// A finite-dimensional B_+ representation: a finite map D_i -> matrix, absent indices
/// acting as zero. Zero generators are dropped on construction.
class BPlusRep {
  public:
    using GeneratorMap = std::map<MultiIndex, QMatrix>;

    /// Builds the rep without checking the B_+ relations (used to probe invalid inputs).
    static BPlusRep unchecked(std::size_t dim, GeneratorMap gens);

    std::size_t dim() const { return dim_; }
    const GeneratorMap &gens() const { return gens_; }
    /// Largest |i| among nonzero generators, or -1 when every generator is zero.
    std::int64_t max_degree() const;

    /// Matrix of D_i (zero if absent).
    QMatrix generator(MultiIndex i) const;
    /// Linear extension to B_+ elements.
    QMatrix action(const BPlusElement &x) const;

    friend bool operator==(const BPlusRep &, const BPlusRep &) = default;

  private:
    BPlusRep(std::size_t dim, GeneratorMap gens);
    std::size_t dim_ = 0;
    GeneratorMap gens_;
};

/// Checks every relation [D_i, D_j] = [D_i, D_j]_{B_+} that can involve a nonzero generator:
/// all pairs of present generators, plus every pair (i, j) whose bracket lands on a present
/// generator. Throws RelationViolation on the first failure.
BPlusRep validate_bplus_rep(std::size_t dim, BPlusRep::GeneratorMap gens);

/// Same as validate_bplus_rep but reports the first failure instead of throwing.
std::optional<RelationViolation> first_bplus_violation(const BPlusRep &rep);

/// D_(2,0) = -2e, D_(0,2) = 2f, D_(1,1) = h, D_(1,0) = -alpha2, D_(0,1) = alpha1, D_(0,0) = 0.
BPlusRep bplus_from_sl2(const SL2Rep &rep, const std::pair<Rational, Rational> &alpha);

BPlusRep direct_sum(const BPlusRep &a, const BPlusRep &b);
BPlusRep conjugate(const BPlusRep &rep, const QMatrix &p);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

/// Outcome of the indecomposability probe. When the verdict is `no`, `idempotent` holds a
/// commutant element E with E^2 = E, E != 0, E != 1.
struct IndecomposabilityReport {
    Verdict verdict = Verdict::unknown;
    std::size_t commutant_dim = 0;
    std::optional<QMatrix> idempotent;
};

/// Basis of {X : X D_i = D_i X for every generator}.
std::vector<QMatrix> commutant_basis(const BPlusRep &rep);

/// yes if the commutant is the scalars; no if some probed commutant element has a
/// characteristic polynomial with two coprime rational factors; unknown otherwise.
/// Probes each commutant basis element, then `trials` random combinations drawn from `seed`.
IndecomposabilityReport bplus_indecomposable(const BPlusRep &rep, int trials, std::uint64_t seed = 0);

} // namespace jetalg
