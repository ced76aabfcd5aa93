#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgcone {

/// Largest ground set supported by the bitset-backed IndexSet.
inline constexpr std::size_t kMaxHyperplanes = 64;

/// A subset of the ground set {0, ..., n-1}, stored as a 64-bit mask.
///
/// Indices are 0-based internally; all user-facing output is 1-based.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> elements) {
    for (auto e : elements) insert(e);
  }
  static IndexSet from_elements(const std::vector<std::size_t>& elements) {
    IndexSet s;
    for (auto e : elements) s.insert(e);
    return s;
  }
  /// {0, ..., n-1}
  static IndexSet range(std::size_t n) {
    if (n > kMaxHyperplanes) throw std::out_of_range("IndexSet::range: n exceeds 64");
    return IndexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool contains(std::size_t i) const {
    return i < kMaxHyperplanes && ((bits_ >> i) & 1U) != 0;
  }
  void insert(std::size_t i) {
    if (i >= kMaxHyperplanes) throw std::out_of_range("IndexSet: index exceeds 63");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) {
    if (i < kMaxHyperplanes) bits_ &= ~(std::uint64_t{1} << i);
  }
  [[nodiscard]] IndexSet with(std::size_t i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }
  [[nodiscard]] IndexSet without(std::size_t i) const {
    IndexSet s = *this;
    s.erase(i);
    return s;
  }
  [[nodiscard]] constexpr bool is_subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool intersects(IndexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest element by index; undefined on the empty set.
  [[nodiscard]] constexpr std::size_t min() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  [[nodiscard]] std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order for listing sets: by cardinality, then lexicographically
/// by sorted element list.
inline bool canonical_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

/// 1-based rendering, e.g. "{2,3}".
std::string to_string(IndexSet s);

/// A linear order on the ground set: `chain()[0]` is the smallest element.
///
/// Drives which element is dropped when breaking a circuit and the variable
/// order e_{chain[0]} < e_{chain[1]} < ... of monomial orders.
class ElementOrder {
 public:
  ElementOrder() = default;
  /// Natural order 0 < 1 < ... < n-1.
  static ElementOrder natural(std::size_t n);
  /// `chain` must be a permutation of {0, ..., n-1}, listed smallest first.
  static ElementOrder from_chain(std::vector<std::size_t> chain);

  [[nodiscard]] std::size_t size() const { return chain_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& chain() const { return chain_; }
  /// Position of element i in the chain.
  [[nodiscard]] std::size_t position(std::size_t i) const { return position_.at(i); }
  [[nodiscard]] bool less(std::size_t a, std::size_t b) const { return position_.at(a) < position_.at(b); }
  /// Smallest element of a nonempty set under this order.
  [[nodiscard]] std::size_t min_of(IndexSet s) const;
  [[nodiscard]] bool is_natural() const;

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;

 private:
  std::vector<std::size_t> chain_;
  std::vector<std::size_t> position_;
};

}  // namespace vgcone
