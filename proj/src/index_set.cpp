#include "vgcone/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vgcone {

std::string to_string(IndexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto e : s.elements()) {
    if (!first) out << ',';
    out << e + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

ElementOrder ElementOrder::natural(std::size_t n) {
  std::vector<std::size_t> chain(n);
  std::iota(chain.begin(), chain.end(), std::size_t{0});
  return from_chain(std::move(chain));
}

ElementOrder ElementOrder::from_chain(std::vector<std::size_t> chain) {
  ElementOrder order;
  order.position_.assign(chain.size(), chain.size());
  for (std::size_t pos = 0; pos < chain.size(); ++pos) {
    const auto e = chain[pos];
    if (e >= chain.size() || order.position_[e] != chain.size()) {
      throw std::invalid_argument("ElementOrder: chain is not a permutation");
    }
    order.position_[e] = pos;
  }
  order.chain_ = std::move(chain);
  return order;
}

std::size_t ElementOrder::min_of(IndexSet s) const {
  if (s.empty()) throw std::invalid_argument("ElementOrder::min_of: empty set");
  std::size_t best = s.min();
  for (auto e : s.elements()) {
    if (position_.at(e) < position_.at(best)) best = e;
  }
  return best;
}

bool ElementOrder::is_natural() const {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (chain_[i] != i) return false;
  }
  return true;
}

}  // namespace vgcone
