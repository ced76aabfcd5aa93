#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vgcone/index_set.hpp"
#include "vgcone/linalg.hpp"

namespace vgcone {

/// e_1^{a_1} ... e_n^{a_n}
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}
  /// Squarefree monomial e_S.
  static Monomial squarefree(std::size_t n, IndexSet s);
  static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1);

  [[nodiscard]] std::size_t variables() const { return exponents_.size(); }
  [[nodiscard]] std::uint32_t exponent(std::size_t i) const { return exponents_.at(i); }
  [[nodiscard]] const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  [[nodiscard]] std::uint64_t degree() const;
  [[nodiscard]] bool is_one() const { return degree() == 0; }
  [[nodiscard]] bool is_squarefree() const;
  /// Variables with positive exponent.
  [[nodiscard]] IndexSet support() const;
  [[nodiscard]] bool divides(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  [[nodiscard]] Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded reverse lexicographic order with a configurable variable chain
/// e_{chain[0]} < e_{chain[1]} < ...: compare total degree, then the
/// monomial with the smaller exponent on the smallest variable where the two
/// differ is the larger one.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(ElementOrder variables) : variables_(std::move(variables)) {}
  static MonomialOrder natural(std::size_t n) { return MonomialOrder(ElementOrder::natural(n)); }

  [[nodiscard]] const ElementOrder& variables() const { return variables_; }
  [[nodiscard]] std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  [[nodiscard]] bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  ElementOrder variables_;
};

/// Polynomial over Z in e_1..e_n. No zero coefficients are stored.
class IntegerPolynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::size_t n) : variables_(n) {}
  static IntegerPolynomial constant(std::size_t n, const BigInt& c);
  static IntegerPolynomial monomial(const Monomial& m, const BigInt& c = 1);
  /// e_i, 0-based i.
  static IntegerPolynomial variable(std::size_t n, std::size_t i);

  [[nodiscard]] std::size_t variables() const { return variables_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] BigInt coefficient(const Monomial& m) const;
  [[nodiscard]] std::uint64_t degree() const;
  /// Adds c * m in place.
  void add_term(const Monomial& m, const BigInt& c);

  /// Top-degree homogeneous component.
  [[nodiscard]] IntegerPolynomial degree_initial() const;
  /// Largest monomial under `order`; throws std::invalid_argument on zero.
  [[nodiscard]] Monomial leading_monomial(const MonomialOrder& order) const;
  [[nodiscard]] BigInt leading_coefficient(const MonomialOrder& order) const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& other);
  IntegerPolynomial& operator-=(const IntegerPolynomial& other);
  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator-(const IntegerPolynomial& a);
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  std::size_t variables_ = 0;
  Terms terms_;
};

/// 1-based rendering like "e1^2 - e1" or "e2*e3 - e2", terms in decreasing
/// `order`.
std::string to_string(const Monomial& m);
std::string to_string(const IntegerPolynomial& p, const MonomialOrder& order);

}  // namespace vgcone
