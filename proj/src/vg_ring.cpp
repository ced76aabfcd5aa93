#include "vgcone/vg_ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vgcone {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Idempotent:
      return "Idempotent";
    case RelationKind::Unit:
      return "Unit";
    case RelationKind::ConeCircuit:
      return "ConeCircuit";
    case RelationKind::Circuit:
      return "Circuit";
  }
  return "?";
}

namespace {

// prod_{j in s} (e_j - 1)
IntegerPolynomial shifted_product(std::size_t n, IndexSet s) {
  IntegerPolynomial out = IntegerPolynomial::constant(n, 1);
  for (auto j : s.elements()) out = out * (IntegerPolynomial::variable(n, j) - IntegerPolynomial::constant(n, 1));
  return out;
}

IntegerPolynomial squarefree_poly(std::size_t n, IndexSet s) { return IntegerPolynomial::monomial(Monomial::squarefree(n, s)); }

Relation make_relation(RelationKind kind, IntegerPolynomial g, const MonomialOrder& order,
                       std::optional<SignedSet> source = std::nullopt) {
  auto forms = initial_forms(g, order);
  return Relation{kind, std::move(g), std::move(forms.degree_initial), std::move(forms.leading), std::move(source)};
}

// Subtracts c * m * g from p.
void subtract_multiple(IntegerPolynomial& p, const BigInt& c, const Monomial& m, const IntegerPolynomial& g) {
  for (const auto& [gm, gc] : g.terms()) p.add_term(m * gm, -c * gc);
}

}  // namespace

RelationSet generate_relations(const Cone& k, const std::vector<SignedSet>& circuits, const MonomialOrder& order) {
  const std::size_t n = k.size();
  const IndexSet walls = k.walls();
  RelationSet out;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = IntegerPolynomial::variable(n, i);
    out.push_back(make_relation(RelationKind::Idempotent, x * x - x, order));
  }
  for (auto i : walls.elements()) {
    out.push_back(make_relation(RelationKind::Unit,
                                IntegerPolynomial::variable(n, i) - IntegerPolynomial::constant(n, 1), order));
  }
  RelationSet cone_rows;
  RelationSet circuit_rows;
  for (const auto& c : circuits) {
    const IndexSet on_walls = walls & c.support();
    if (on_walls.empty()) {
      auto g = squarefree_poly(n, c.plus()) * shifted_product(n, c.minus()) -
               squarefree_poly(n, c.minus()) * shifted_product(n, c.plus());
      circuit_rows.push_back(make_relation(RelationKind::Circuit, std::move(g), order, c));
      continue;
    }
    for (const auto& d : {c, -c}) {
      // Every wall of the circuit lies on the positive side of this orientation.
      if (!on_walls.is_subset_of(d.plus())) continue;
      auto g = squarefree_poly(n, d.plus() - walls) * shifted_product(n, d.minus());
      const bool duplicate = std::any_of(cone_rows.begin(), cone_rows.end(),
                                         [&](const Relation& r) { return r.polynomial == g; });
      if (!duplicate) cone_rows.push_back(make_relation(RelationKind::ConeCircuit, std::move(g), order, d));
    }
  }
  for (auto& r : cone_rows) out.push_back(std::move(r));
  for (auto& r : circuit_rows) out.push_back(std::move(r));
  return out;
}

RelationSet generate_relations(const Cone& k, const MonomialOrder& order) {
  return generate_relations(k, circuits(k.arrangement()), order);
}

InitialForms initial_forms(const IntegerPolynomial& g, const MonomialOrder& order) {
  if (g.is_zero()) throw std::invalid_argument("initial_forms: zero polynomial");
  return {g.degree_initial(), g.leading_monomial(order)};
}

Division divide(const IntegerPolynomial& p, const RelationSet& divisors, const MonomialOrder& order) {
  std::vector<BigInt> lead_coeff;
  for (const auto& g : divisors) {
    BigInt lc = g.polynomial.coefficient(g.leading);
    if (lc != 1 && lc != -1) {
      throw std::invalid_argument("divide: divisor " + to_string(g.polynomial, order) + " is not monic");
    }
    lead_coeff.push_back(std::move(lc));
  }
  const std::size_t n = p.variables();
  Division out{IntegerPolynomial(n), std::vector<IntegerPolynomial>(divisors.size(), IntegerPolynomial(n))};
  IntegerPolynomial rest = p;
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial(order);
    const BigInt c = rest.coefficient(m);
    std::size_t chosen = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].leading.divides(m)) {
        chosen = i;
        break;
      }
    }
    if (chosen == divisors.size()) {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
      continue;
    }
    const BigInt factor = c * lead_coeff[chosen];
    const Monomial shift = m.quotient(divisors[chosen].leading);
    out.quotients[chosen].add_term(shift, factor);
    subtract_multiple(rest, factor, shift, divisors[chosen].polynomial);
  }
  return out;
}

std::vector<Monomial> standard_monomials(const RelationSet& relations, std::size_t n) {
  IndexSet idempotent;
  std::vector<IndexSet> blockers;
  for (const auto& r : relations) {
    if (r.kind == RelationKind::Idempotent) {
      const auto s = r.leading.support();
      if (s.size() == 1 && r.leading.degree() == 2) idempotent = idempotent | s;
    }
    if (r.leading.is_squarefree()) blockers.push_back(r.leading.support());
  }
  if (idempotent != IndexSet::range(n)) {
    throw std::invalid_argument("standard_monomials: an idempotent relation is missing, the set would be infinite");
  }
  std::vector<IndexSet> found;
  auto visit = [&](auto&& self, IndexSet current, std::size_t next) -> void {
    found.push_back(current);
    for (std::size_t i = next; i < n; ++i) {
      const IndexSet candidate = current.with(i);
      const bool blocked = std::any_of(blockers.begin(), blockers.end(),
                                       [&](IndexSet b) { return b.contains(i) && b.is_subset_of(candidate); });
      if (!blocked) self(self, candidate, i + 1);
    }
  };
  // The empty monomial is blocked only by a constant relation.
  const bool one_blocked = std::any_of(blockers.begin(), blockers.end(), [](IndexSet b) { return b.empty(); });
  if (!one_blocked) visit(visit, IndexSet{}, 0);
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<Monomial> out;
  out.reserve(found.size());
  for (auto s : found) out.push_back(Monomial::squarefree(n, s));
  return out;
}

HilbertSeries hilbert_from_monomials(const std::vector<Monomial>& monomials) {
  HilbertSeries h;
  for (const auto& m : monomials) {
    const auto d = static_cast<std::size_t>(m.degree());
    if (h.coefficients.size() <= d) h.coefficients.resize(d + 1, 0);
    ++h.coefficients[d];
  }
  return h;
}

VgRing::VgRing(Cone cone, unsigned threads) : cone_(std::move(cone)), chambers_(cone_chambers(cone_, threads)) {}

VgRing::VgRing(Cone cone, std::vector<SignVector> chambers) : cone_(std::move(cone)), chambers_(std::move(chambers)) {}

ChamberFunction VgRing::heaviside(std::size_t i) const {
  if (i >= cone_.size()) throw std::out_of_range("heaviside: hyperplane index out of range");
  ChamberFunction f;
  for (const auto& c : chambers_) f.emplace(c, c[i] == '+' ? 1 : 0);
  return f;
}

bool VgRing::monomial_value(const Monomial& m, const SignVector& chamber) const {
  for (std::size_t i = 0; i < m.variables(); ++i) {
    if (m.exponent(i) > 0 && chamber[i] != '+') return false;
  }
  return true;
}

ChamberFunction VgRing::evaluate(const IntegerPolynomial& p) const {
  if (p.variables() != cone_.size()) throw std::invalid_argument("evaluate: variable count mismatch");
  ChamberFunction f;
  for (const auto& c : chambers_) {
    BigInt value = 0;
    for (const auto& [m, coeff] : p.terms()) {
      if (monomial_value(m, c)) value += coeff;
    }
    f.emplace(c, std::move(value));
  }
  return f;
}

IntegerPolynomial VgRing::chamber_expansion(const ChamberFunction& f) const {
  const std::size_t n = cone_.size();
  if (f.size() != chambers_.size()) throw std::invalid_argument("chamber_expansion: function is not defined on every chamber");
  IntegerPolynomial out(n);
  const auto one = IntegerPolynomial::constant(n, 1);
  for (const auto& c : chambers_) {
    auto it = f.find(c);
    if (it == f.end()) throw std::invalid_argument("chamber_expansion: no value for chamber " + c);
    if (it->second == 0) continue;
    IntegerPolynomial term = IntegerPolynomial::constant(n, it->second);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = IntegerPolynomial::variable(n, i);
      term = term * (c[i] == '+' ? x : one - x);
    }
    out += term;
  }
  return out;
}

RationalMatrix VgRing::evaluation_matrix(const std::vector<Monomial>& monomials) const {
  RationalMatrix m(chambers_.size(), monomials.size());
  for (std::size_t r = 0; r < chambers_.size(); ++r) {
    for (std::size_t c = 0; c < monomials.size(); ++c) m(r, c) = monomial_value(monomials[c], chambers_[r]) ? 1 : 0;
  }
  return m;
}

std::vector<std::size_t> VgRing::filtration_ranks(std::size_t max_degree) const {
  const std::size_t n = cone_.size();
  const std::size_t dim = chambers_.size();
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
  std::set<std::vector<char>> seen;
  auto insert = [&](const std::vector<char>& bits) {
    if (!seen.insert(bits).second) return;
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = bits[i];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (sgn(v[pivots[r]]) == 0) continue;
      const Rational f = v[pivots[r]];
      for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(rows[r][i]) != 0) v[i] -= f * rows[r][i];
      }
    }
    std::size_t p = 0;
    while (p < dim && sgn(v[p]) == 0) ++p;
    if (p == dim) return;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
  };

  std::vector<std::size_t> ranks;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    if (rows.size() < dim && d <= n) {
      // All d-subsets of [n], as bitmasks.
      std::vector<std::size_t> pick(d);
      for (std::size_t i = 0; i < d; ++i) pick[i] = i;
      while (rows.size() < dim) {
        std::vector<char> bits(dim, 1);
        for (std::size_t c = 0; c < dim; ++c) {
          for (auto i : pick) {
            if (chambers_[c][i] != '+') {
              bits[c] = 0;
              break;
            }
          }
        }
        insert(bits);
        // next combination
        std::size_t pos = d;
        while (pos > 0 && pick[pos - 1] == n - d + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t i = pos; i < d; ++i) pick[i] = pick[i - 1] + 1;
      }
    }
    ranks.push_back(rows.size());
  }
  return ranks;
}

HilbertSeries hilbert_series(const Cone& k, const MonomialOrder& order) {
  return hilbert_from_monomials(standard_monomials(generate_relations(k, order), k.size()));
}

bool is_zero_function(const ChamberFunction& f) {
  return std::all_of(f.begin(), f.end(), [](const auto& kv) { return kv.second == 0; });
}

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {
template <typename T>
std::vector<T> trimmed(std::vector<T> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}
}  // namespace

TheoremReport verify_main_theorem(const Cone& k, const MonomialOrder& order, unsigned threads) {
  const std::size_t n = k.size();
  TheoremReport report;
  const VgRing ring(k, threads);
  report.chamber_count = ring.chambers().size();
  const auto relations = generate_relations(k, order);

  Check kernel{"relations_vanish", true, {}};
  for (const auto& r : relations) {
    if (!is_zero_function(ring.evaluate(r.polynomial))) {
      kernel.passed = false;
      kernel.failures.push_back(to_string(r.polynomial, order));
    }
  }
  report.checks.push_back(std::move(kernel));

  const auto standard = standard_monomials(relations, n);
  report.basis_size = standard.size();
  Check basis{"standard_equals_knbc", true, {}};
  {
    std::set<std::vector<std::size_t>> lhs;
    std::set<std::vector<std::size_t>> rhs;
    for (const auto& m : standard) lhs.insert(m.support().elements());
    for (auto s : k_nbc_sets(k, order.variables())) rhs.insert(s.elements());
    for (const auto& s : lhs) {
      if (!rhs.contains(s)) basis.failures.push_back("standard but not K-NBC: " + to_string(IndexSet::from_elements(s)));
    }
    for (const auto& s : rhs) {
      if (!lhs.contains(s)) basis.failures.push_back("K-NBC but not standard: " + to_string(IndexSet::from_elements(s)));
    }
    basis.passed = basis.failures.empty();
  }
  report.checks.push_back(std::move(basis));

  Check invertible{"evaluation_matrix_invertible", false, {}};
  if (standard.size() != ring.chambers().size()) {
    invertible.failures.push_back(std::to_string(ring.chambers().size()) + " chambers vs " +
                                  std::to_string(standard.size()) + " standard monomials");
    report.determinant = 0;
  } else {
    report.determinant = determinant(ring.evaluation_matrix(standard));
    invertible.passed = sgn(report.determinant) != 0;
    if (!invertible.passed) invertible.failures.push_back("determinant is zero");
  }
  report.checks.push_back(std::move(invertible));

  report.hilbert = hilbert_from_monomials(standard);
  report.poincare = poincare(k);
  Check hp{"hilbert_equals_poincare", true, {}};
  if (trimmed(report.hilbert.coefficients) != trimmed(report.poincare.coefficients)) {
    hp.passed = false;
    hp.failures.push_back("coefficient lists differ");
  }
  report.checks.push_back(std::move(hp));

  const std::size_t top = std::min(n, report.hilbert.coefficients.size());
  report.filtration_ranks = ring.filtration_ranks(top);
  Check filtration{"filtration_matches_hilbert", true, {}};
  for (std::size_t d = 0; d < report.filtration_ranks.size(); ++d) {
    const auto jump = report.filtration_ranks[d] - (d == 0 ? 0 : report.filtration_ranks[d - 1]);
    const std::int64_t expected = d < report.hilbert.coefficients.size() ? report.hilbert.coefficients[d] : 0;
    if (static_cast<std::int64_t>(jump) != expected) {
      filtration.passed = false;
      filtration.failures.push_back("degree " + std::to_string(d) + ": rank jump " + std::to_string(jump) +
                                    ", Hilbert coefficient " + std::to_string(expected));
    }
  }
  report.checks.push_back(std::move(filtration));
  return report;
}

}  // namespace vgcone
