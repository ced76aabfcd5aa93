#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vgcone/index_set.hpp"
#include "vgcone/linalg.hpp"

namespace vgcone {

/// Raised when raw input cannot form a valid arrangement or cone.
class ArrangementError : public std::runtime_error {
 public:
  enum class Kind { ZeroNormal, DuplicateHyperplane, EmptyCone, WallOutOfRange, DimensionMismatch, TooLarge };
  ArrangementError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A word over {+,-,0}, one letter per hyperplane.
using SignVector = std::string;

/// Central arrangement given by normal vectors v_1..v_n in Q^dimension.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws ArrangementError on zero, parallel or wrong-length normals.
  Arrangement(std::size_t dimension, std::vector<RationalVector> normals, std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::size_t size() const { return normals_.size(); }
  [[nodiscard]] const RationalVector& normal(std::size_t i) const { return normals_.at(i); }
  [[nodiscard]] const std::vector<RationalVector>& normals() const { return normals_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// Rank of the normal configuration (codimension of the center).
  [[nodiscard]] std::size_t rank() const { return rank_; }
  /// Normals of the given hyperplanes, in increasing index order.
  [[nodiscard]] std::vector<RationalVector> normals_of(IndexSet s) const;
  /// Sign of v_i . x for each hyperplane.
  [[nodiscard]] SignVector sign_vector(const RationalVector& x) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalVector> normals_;
  std::vector<std::string> labels_;
  std::size_t rank_ = 0;
};

/// The open cone K = intersection of H_i^+ over the walls W.
class Cone {
 public:
  /// Throws ArrangementError::EmptyCone when the open region is empty.
  Cone(Arrangement arrangement, IndexSet walls);

  [[nodiscard]] const Arrangement& arrangement() const { return arrangement_; }
  [[nodiscard]] IndexSet walls() const { return walls_; }
  [[nodiscard]] std::size_t size() const { return arrangement_.size(); }
  /// A point of the open cone with coprime integer coordinates.
  [[nodiscard]] const RationalVector& interior_point() const { return interior_point_; }
  [[nodiscard]] std::vector<RationalVector> wall_normals() const { return arrangement_.normals_of(walls_); }

 private:
  Arrangement arrangement_;
  IndexSet walls_;
  RationalVector interior_point_;
};

/// Builds a cone from raw input. `walls` are 1-based; a negative entry -i
/// selects the negative side of H_i, and v_i is negated so the cone is an
/// intersection of positive halfspaces.
Cone validate(std::size_t dimension, std::vector<RationalVector> normals, const std::vector<long long>& walls,
              std::vector<std::string> labels = {});

/// Braid arrangement A_{n-1} in R^n with normals e_j - e_i for i < j in
/// lexicographic order of (i, j).
Arrangement braid_arrangement(std::size_t n);
/// 0-based index of the hyperplane x_i = x_j (0-based i < j) in braid_arrangement(n).
std::size_t braid_index(std::size_t n, std::size_t i, std::size_t j);

/// Full-support sign vectors of the chambers, sorted lexicographically
/// ('+' before '-'). Incremental insertion; feasibility probes of each
/// insertion step are spread over `threads` workers.
std::vector<SignVector> chambers(const Arrangement& a, unsigned threads = 1);
/// Chambers contained in the cone (sign '+' on every wall).
std::vector<SignVector> cone_chambers(const Cone& k, unsigned threads = 1);

/// Oracle: filters all 2^n sign vectors with strict_feasible.
std::vector<SignVector> chambers_exhaustive(const Arrangement& a, IndexSet forced_positive = {});

/// A flat of the arrangement: the subspace X = intersection of H_i over
/// `flat`, where `flat` holds every hyperplane containing X.
struct PosetNode {
  IndexSet flat;
  std::size_t codim = 0;
  /// Reduced row echelon basis of the span of normals of `flat`; the
  /// canonical fingerprint of X.
  RationalMatrix fingerprint;
};

/// Intersection poset ordered by reverse inclusion. Node 0 is the ambient
/// space V; nodes are sorted by codimension, then by flat.
class IntersectionPoset {
 public:
  IntersectionPoset() = default;
  explicit IntersectionPoset(std::vector<PosetNode> nodes);

  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const std::vector<PosetNode>& nodes() const { return nodes_; }
  [[nodiscard]] const PosetNode& node(std::size_t i) const { return nodes_.at(i); }
  /// X <= Y in reverse inclusion (Y is contained in X).
  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const;
  /// Upper covers of each node.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& covers() const { return covers_; }
  /// mu(V, X) for each node, computed inside this poset.
  [[nodiscard]] const std::vector<std::int64_t>& mobius() const { return mobius_; }
  /// Index of the node with the given flat, or size() if absent.
  [[nodiscard]] std::size_t find(IndexSet flat) const;
  [[nodiscard]] std::size_t max_codim() const;

 private:
  std::vector<PosetNode> nodes_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::int64_t> mobius_;
};

IntersectionPoset intersection_poset(const Arrangement& a);
/// Nodes X with X meeting the open cone; Mobius values recomputed.
IntersectionPoset interior_poset(const Cone& k);
/// Same as interior_poset, reusing an already built full poset.
IntersectionPoset interior_poset(const Cone& k, const IntersectionPoset& full);

/// mu(V, X) by the defining recurrence over lower intervals.
std::vector<std::int64_t> mobius(const IntersectionPoset& p);

/// The smallest flat containing `s`: every hyperplane containing the
/// intersection of H_i, i in s.
IndexSet closure(const Arrangement& a, IndexSet s);
/// Does the intersection of H_i over `s` meet the open cone?
bool meets_cone(const Cone& k, IndexSet s);

struct PoincarePolynomial {
  std::vector<std::int64_t> coefficients;  // index d holds the coefficient of t^d
  [[nodiscard]] std::int64_t at_one() const;
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

PoincarePolynomial poincare(const IntersectionPoset& p);
PoincarePolynomial poincare(const Cone& k);

}  // namespace vgcone
