#include "vgcone/oriented_matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace vgcone {

SignedSet::SignedSet(std::size_t ground, IndexSet plus, IndexSet minus) : ground_(ground), plus_(plus), minus_(minus) {
  if (plus_.intersects(minus_)) throw std::invalid_argument("SignedSet: plus and minus overlap");
  if (!support().is_subset_of(IndexSet::range(ground_))) {
    throw std::invalid_argument("SignedSet: element outside the ground set");
  }
}

int SignedSet::sign(std::size_t e) const {
  if (plus_.contains(e)) return 1;
  if (minus_.contains(e)) return -1;
  return 0;
}

namespace {
void require_same_ground(const SignedSet& c, const SignedSet& d) {
  if (c.ground() != d.ground()) throw std::invalid_argument("signed sets live on different ground sets");
}
}  // namespace

SignedSet compose(const SignedSet& c, const SignedSet& d) {
  require_same_ground(c, d);
  const IndexSet free = IndexSet::range(c.ground()) - c.support();
  return SignedSet(c.ground(), c.plus() | (d.plus() & free), c.minus() | (d.minus() & free));
}

IndexSet separator(const SignedSet& c, const SignedSet& d) {
  require_same_ground(c, d);
  return (c.plus() & d.minus()) | (c.minus() & d.plus());
}

std::string to_sign_string(const SignedSet& s) {
  std::string out(s.ground(), '0');
  for (std::size_t e = 0; e < s.ground(); ++e) {
    const int v = s.sign(e);
    if (v != 0) out[e] = v > 0 ? '+' : '-';
  }
  return out;
}

std::string to_string(const SignedSet& s) { return "(" + to_string(s.plus()) + "," + to_string(s.minus()) + ")"; }

bool circuit_less(const SignedSet& a, const SignedSet& b) {
  if (a.support() != b.support()) return canonical_less(a.support(), b.support());
  return a.plus().elements() < b.plus().elements();
}

namespace {

// Advances a k-subset bitmask to the next one with the same popcount.
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<RationalVector> kernel_of(const Arrangement& a, IndexSet s) {
  const auto cols = a.normals_of(s);
  return kernel_basis(RationalMatrix::from_columns(cols, a.dimension()));
}

}  // namespace

std::vector<SignedSet> circuits(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<SignedSet> out;
  const std::size_t max_size = std::min(n, a.rank() + 1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    const std::uint64_t last = std::uint64_t{1} << n;
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < last; mask = next_combination(mask)) {
      const IndexSet s(mask);
      const auto kernel = kernel_of(a, s);
      if (kernel.size() != 1) continue;
      const auto& lambda = kernel.front();
      if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
      IndexSet plus;
      IndexSet minus;
      const auto elems = s.elements();
      for (std::size_t t = 0; t < elems.size(); ++t) {
        (sgn(lambda[t]) < 0 ? plus : minus).insert(elems[t]);
      }
      SignedSet c(n, plus, minus);
      if (!c.plus().contains(s.min())) c = -c;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), circuit_less);
  return out;
}

bool is_signed_dependency(const Arrangement& a, const SignedSet& d) {
  const std::size_t n = a.size();
  if (d.ground() != n) throw std::invalid_argument("is_signed_dependency: ground mismatch");
  std::vector<RationalVector> eqs;
  for (std::size_t row = 0; row < a.dimension(); ++row) {
    RationalVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a.normal(i)[row];
    eqs.push_back(std::move(r));
  }
  std::vector<RationalVector> strict;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n);
    const int s = d.sign(i);
    if (s == 0) {
      e[i] = 1;
      eqs.push_back(std::move(e));
    } else {
      e[i] = s > 0 ? -1 : 1;
      strict.push_back(std::move(e));
    }
  }
  return strict_feasible(eqs, strict, n).has_value();
}

RationalVector circuit_coefficients(const Arrangement& a, const SignedSet& c) {
  const auto kernel = kernel_of(a, c.support());
  if (kernel.size() != 1) throw std::invalid_argument("circuit_coefficients: support is not a circuit");
  RationalVector lambda(a.size());
  const auto elems = c.support().elements();
  for (std::size_t t = 0; t < elems.size(); ++t) lambda[elems[t]] = kernel.front()[t];
  lambda = primitive_integer(std::move(lambda));
  const auto first = elems.front();
  // lambda < 0 on plus.
  if ((sgn(lambda[first]) < 0) != (c.sign(first) > 0)) {
    for (auto& x : lambda) x = -x;
  }
  return lambda;
}

std::vector<IndexSet> broken_circuits(const std::vector<SignedSet>& circuits, const ElementOrder& order) {
  std::vector<IndexSet> out;
  for (const auto& c : circuits) {
    const auto s = c.support();
    out.push_back(s.without(order.min_of(s)));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> broken_circuits(const Arrangement& a) {
  return broken_circuits(circuits(a), ElementOrder::natural(a.size()));
}

std::vector<IndexSet> nbc_sets(std::size_t n, const std::vector<IndexSet>& broken) {
  std::vector<IndexSet> out;
  // Depth-first over increasing elements; any superset of a set containing a
  // broken circuit also contains it, so such branches are cut.
  auto visit = [&](auto&& self, IndexSet current, std::size_t next) -> void {
    out.push_back(current);
    for (std::size_t i = next; i < n; ++i) {
      const IndexSet candidate = current.with(i);
      const bool blocked =
          std::any_of(broken.begin(), broken.end(), [&](IndexSet b) { return b.contains(i) && b.is_subset_of(candidate); });
      if (!blocked) self(self, candidate, i + 1);
    }
  };
  visit(visit, IndexSet{}, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<IndexSet> nbc_sets(const Arrangement& a, const ElementOrder& order) {
  return nbc_sets(a.size(), broken_circuits(circuits(a), order));
}

std::vector<IndexSet> nbc_sets(const Arrangement& a) { return nbc_sets(a, ElementOrder::natural(a.size())); }

std::vector<IndexSet> k_nbc_sets(const Cone& k, const ElementOrder& order) {
  std::vector<IndexSet> out;
  for (auto n : nbc_sets(k.arrangement(), order)) {
    if (meets_cone(k, n)) out.push_back(n);
  }
  return out;
}

std::vector<IndexSet> k_nbc_sets(const Cone& k) { return k_nbc_sets(k, ElementOrder::natural(k.size())); }

std::vector<IndexSet> minimal_sets(const std::vector<IndexSet>& family) {
  std::vector<IndexSet> out;
  for (auto s : family) {
    const bool has_smaller =
        std::any_of(family.begin(), family.end(), [&](IndexSet t) { return t != s && t.is_subset_of(s); });
    if (!has_smaller) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vgcone
