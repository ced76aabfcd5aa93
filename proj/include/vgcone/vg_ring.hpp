#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgcone/arrangement.hpp"
#include "vgcone/oriented_matroid.hpp"
#include "vgcone/polynomial.hpp"

namespace vgcone {

/// An integer-valued function on the chambers of a cone, keyed by sign vector.
using ChamberFunction = std::map<SignVector, BigInt>;

enum class RelationKind { Idempotent, Unit, ConeCircuit, Circuit };
std::string to_string(RelationKind kind);

struct Relation {
  RelationKind kind;
  IntegerPolynomial polynomial;
  IntegerPolynomial degree_initial;
  Monomial leading;
  std::optional<SignedSet> source;  // the oriented circuit for (Cone)Circuit rows
};

/// The relations of the cone presentation, listed Idempotents by index,
/// Units by index, then ConeCircuits, then Circuits by circuit order.
using RelationSet = std::vector<Relation>;

/// Builds the relation table. `circuits` are canonical representatives; both
/// orientations are considered.
RelationSet generate_relations(const Cone& k, const std::vector<SignedSet>& circuits, const MonomialOrder& order);
RelationSet generate_relations(const Cone& k, const MonomialOrder& order);

struct InitialForms {
  IntegerPolynomial degree_initial;
  Monomial leading;
};
/// Throws std::invalid_argument on the zero polynomial.
InitialForms initial_forms(const IntegerPolynomial& g, const MonomialOrder& order);

struct Division {
  IntegerPolynomial remainder;
  std::vector<IntegerPolynomial> quotients;  // one per divisor
};

/// Multivariate division. Each step reduces the leading term of the running
/// polynomial by the first divisor (in list order) whose leading monomial
/// divides it. Throws std::invalid_argument unless every divisor has leading
/// coefficient +1 or -1.
Division divide(const IntegerPolynomial& p, const RelationSet& divisors, const MonomialOrder& order);

/// Squarefree monomials divisible by no leading monomial. Throws
/// std::invalid_argument unless an Idempotent relation exists for every
/// variable.
std::vector<Monomial> standard_monomials(const RelationSet& relations, std::size_t n);

struct HilbertSeries {
  std::vector<std::int64_t> coefficients;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

HilbertSeries hilbert_from_monomials(const std::vector<Monomial>& monomials);

/// Evaluation of the Heaviside generators and polynomials on the chambers of
/// a fixed cone.
class VgRing {
 public:
  explicit VgRing(Cone cone, unsigned threads = 1);
  VgRing(Cone cone, std::vector<SignVector> chambers);

  [[nodiscard]] const Cone& cone() const { return cone_; }
  [[nodiscard]] std::size_t variables() const { return cone_.size(); }
  [[nodiscard]] const std::vector<SignVector>& chambers() const { return chambers_; }

  /// x_i: 1 on chambers in H_i^+, 0 elsewhere. Throws std::out_of_range.
  [[nodiscard]] ChamberFunction heaviside(std::size_t i) const;
  /// The ring map sending e_i to x_i.
  [[nodiscard]] ChamberFunction evaluate(const IntegerPolynomial& p) const;
  /// Value of a monomial on one chamber.
  [[nodiscard]] bool monomial_value(const Monomial& m, const SignVector& chamber) const;
  /// sum_C f(C) prod_{i: C in H_i^+} e_i prod_{j: C in H_j^-} (1 - e_j).
  /// Throws std::invalid_argument if f is not defined on exactly the cone chambers.
  [[nodiscard]] IntegerPolynomial chamber_expansion(const ChamberFunction& f) const;

  /// rank over Q of span{ phi(e_S) : |S| <= j } for j = 0..max_degree.
  [[nodiscard]] std::vector<std::size_t> filtration_ranks(std::size_t max_degree) const;

  /// Matrix [phi(m)(C)]: one row per chamber, one column per monomial.
  [[nodiscard]] RationalMatrix evaluation_matrix(const std::vector<Monomial>& monomials) const;

 private:
  Cone cone_;
  std::vector<SignVector> chambers_;
};

HilbertSeries hilbert_series(const Cone& k, const MonomialOrder& order);

bool is_zero_function(const ChamberFunction& f);

struct Check {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;  // offending objects
};

struct TheoremReport {
  std::vector<Check> checks;
  std::size_t chamber_count = 0;
  std::size_t basis_size = 0;
  HilbertSeries hilbert;
  PoincarePolynomial poincare;
  std::vector<std::size_t> filtration_ranks;
  Rational determinant;
  [[nodiscard]] bool passed() const;
};

/// Runs the composite presentation checks: relations vanish on the
/// chambers; standard monomials are the K-NBC monomials; their evaluation
/// matrix is square and invertible over Q; Hilbert series equals the
/// Poincare polynomial; filtration rank jumps equal the Hilbert series.
TheoremReport verify_main_theorem(const Cone& k, const MonomialOrder& order, unsigned threads = 1);

}  // namespace vgcone
