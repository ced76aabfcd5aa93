#include "vgcone/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vgcone/oriented_matroid.hpp"

namespace vgcone {

TruncatedSeries invert_hilb_neg(const HilbertSeries& h, std::size_t truncation) {
  if (h.coefficients.empty() || h.coefficients.front() != 1) {
    throw std::invalid_argument("invert_hilb_neg: constant term must be 1");
  }
  // c_k = -sum_{j=1..k} h_j (-1)^j c_{k-j}
  TruncatedSeries out;
  out.coefficients.reserve(truncation + 1);
  out.coefficients.emplace_back(1);
  for (std::size_t k = 1; k <= truncation; ++k) {
    BigInt sum = 0;
    for (std::size_t j = 1; j <= k && j < h.coefficients.size(); ++j) {
      const BigInt term = BigInt(static_cast<long>(h.coefficients[j])) * out.coefficients[k - j];
      if (j % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out.coefficients.push_back(-sum);
  }
  return out;
}

std::optional<std::size_t> koszul_obstruction(const HilbertSeries& h, std::size_t truncation) {
  const auto series = invert_hilb_neg(h, truncation);
  for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
    if (series.coefficients[k] < 0) return k;
  }
  return std::nullopt;
}

bool quadratic_certificate(const std::vector<SignedSet>& circuits, const ElementOrder& order) {
  const auto minimal = minimal_sets(broken_circuits(circuits, order));
  return std::all_of(minimal.begin(), minimal.end(), [](IndexSet s) { return s.size() == 2; });
}

bool quadratic_certificate(const Arrangement& a, const ElementOrder& order) {
  return quadratic_certificate(circuits(a), order);
}

std::optional<ElementOrder> supersolvable_order_search(const Arrangement& a, std::size_t bound) {
  const std::size_t n = a.size();
  if (n > bound) {
    throw std::invalid_argument("supersolvable_order_search: " + std::to_string(n) + " hyperplanes exceed the bound " +
                                std::to_string(bound));
  }
  const auto all = circuits(a);
  std::vector<IndexSet> supports;
  for (const auto& c : all) supports.push_back(c.support());

  // Depth-first over chain prefixes. Once every element of a circuit's
  // support is placed, its broken circuit is fixed; a prefix is abandoned if
  // some fixed broken circuit of size >= 3 contains no fixed size-2 broken
  // circuit and cannot gain one later.
  std::vector<std::size_t> chain;
  std::vector<bool> used(n, false);
  std::optional<ElementOrder> found;
  auto search = [&](auto&& self) -> void {
    if (found) return;
    if (chain.size() == n) {
      auto order = ElementOrder::from_chain(chain);
      if (quadratic_certificate(all, order)) found = std::move(order);
      return;
    }
    for (std::size_t e = 0; e < n && !found; ++e) {
      if (used[e]) continue;
      chain.push_back(e);
      used[e] = true;
      IndexSet placed;
      for (auto x : chain) placed.insert(x);
      // A broken circuit is decided once its minimum (the first placed
      // element of the support) is known, i.e. as soon as any element is placed.
      bool viable = true;
      std::vector<IndexSet> decided;
      for (auto s : supports) {
        if (!s.intersects(placed)) continue;
        std::size_t first = n;
        for (auto x : chain) {
          if (s.contains(x)) {
            first = x;
            break;
          }
        }
        decided.push_back(s.without(first));
      }
      for (auto b : decided) {
        if (b.size() <= 2 || !b.is_subset_of(placed)) continue;
        // Every broken circuit inside b must already be decided, since b's
        // elements are all placed.
        const bool has_pair = std::any_of(decided.begin(), decided.end(),
                                          [&](IndexSet d) { return d.size() == 2 && d.is_subset_of(b); });
        if (!has_pair) {
          viable = false;
          break;
        }
      }
      if (viable) self(self);
      used[e] = false;
      chain.pop_back();
    }
  };
  search(search);
  return found;
}

std::string to_string(KoszulVerdict v) {
  switch (v) {
    case KoszulVerdict::CertifiedKoszul:
      return "certified Koszul";
    case KoszulVerdict::CertifiedNonKoszul:
      return "certified non-Koszul";
    case KoszulVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace vgcone
