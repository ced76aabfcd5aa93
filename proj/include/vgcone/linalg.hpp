#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vgcone {

/// Arbitrary-precision integer.
using BigInt = mpz_class;
/// Exact rational, always canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer literal. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Scales a nonzero vector by a positive rational so that its entries are
/// coprime integers. The zero vector is returned unchanged.
RationalVector primitive_integer(RationalVector v);

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);
  static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t rows);
  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  [[nodiscard]] RationalVector row(std::size_t r) const;
  [[nodiscard]] RationalVector column(std::size_t c) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form with its pivot columns (increasing).
struct Echelon {
  RationalMatrix reduced;  // only the nonzero rows are kept
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination, smallest-index pivot per column.
Echelon reduced_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space, one vector per free column in increasing
/// column order, with a 1 in its free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Exact determinant of a square matrix.
Rational determinant(RationalMatrix m);

/// Decides whether some x satisfies e.x = 0 for every equality row and
/// s.x > 0 for every strict row. Returns a witness with coprime integer
/// entries, or nullopt when the system is infeasible.
///
/// Equalities are eliminated by parametrizing their kernel; the remaining
/// homogeneous strict system A y > 0 is feasible iff A y >= 1 is, which is
/// decided by an exact phase-one simplex with Bland's rule.
///
/// Throws std::invalid_argument if any vector length differs from `dimension`.
std::optional<RationalVector> strict_feasible(std::span<const RationalVector> equalities,
                                              std::span<const RationalVector> strict_positives,
                                              std::size_t dimension);

}  // namespace vgcone
