#include "vgcone/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vgcone {

Monomial Monomial::squarefree(std::size_t n, IndexSet s) {
  Monomial m(n);
  for (auto i : s.elements()) m.exponents_.at(i) = 1;
  return m;
}

Monomial Monomial::variable(std::size_t n, std::size_t i, std::uint32_t power) {
  Monomial m(n);
  m.exponents_.at(i) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto a : exponents_) d += a;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint32_t a) { return a <= 1; });
}

IndexSet Monomial::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) s.insert(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (exponents_.size() != other.exponents_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("Monomial::quotient: not divisible");
  Monomial q = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) q.exponents_[i] -= divisor.exponents_[i];
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exponents_.size() != b.exponents_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exponents_.size(); ++i) m.exponents_[i] += b.exponents_[i];
  return m;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.variables() != b.variables() || a.variables() != variables_.size()) {
    throw std::invalid_argument("MonomialOrder: variable count mismatch");
  }
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (auto v : variables_.chain()) {
    if (a.exponent(v) != b.exponent(v)) return b.exponent(v) <=> a.exponent(v);
  }
  return std::strong_ordering::equal;
}

IntegerPolynomial IntegerPolynomial::constant(std::size_t n, const BigInt& c) {
  IntegerPolynomial p(n);
  p.add_term(Monomial(n), c);
  return p;
}

IntegerPolynomial IntegerPolynomial::monomial(const Monomial& m, const BigInt& c) {
  IntegerPolynomial p(m.variables());
  p.add_term(m, c);
  return p;
}

IntegerPolynomial IntegerPolynomial::variable(std::size_t n, std::size_t i) { return monomial(Monomial::variable(n, i)); }

BigInt IntegerPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint64_t IntegerPolynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void IntegerPolynomial::add_term(const Monomial& m, const BigInt& c) {
  if (m.variables() != variables_) throw std::invalid_argument("IntegerPolynomial: variable count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntegerPolynomial IntegerPolynomial::degree_initial() const {
  IntegerPolynomial out(variables_);
  const auto d = degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace(m, c);
  }
  return out;
}

Monomial IntegerPolynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading monomial of the zero polynomial");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (order.less(*best, m)) best = &m;
  }
  return *best;
}

BigInt IntegerPolynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntegerPolynomial operator-(const IntegerPolynomial& a) {
  IntegerPolynomial out(a.variables_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.variables_ != b.variables_) throw std::invalid_argument("IntegerPolynomial: variable count mismatch");
  IntegerPolynomial out(a.variables_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string to_string(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.variables(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!first) out << '*';
    out << 'e' << i + 1;
    if (m.exponent(i) > 1) out << '^' << m.exponent(i);
    first = false;
  }
  return first ? "1" : out.str();
}

std::string to_string(const IntegerPolynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, BigInt>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return order.less(y.first, x.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (m.is_one()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << to_string(m);
    }
    first = false;
  }
  return out.str();
}

}  // namespace vgcone
