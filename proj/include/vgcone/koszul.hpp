#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vgcone/arrangement.hpp"
#include "vgcone/index_set.hpp"
#include "vgcone/linalg.hpp"
#include "vgcone/vg_ring.hpp"

namespace vgcone {

/// Default truncation order for obstruction scans.
inline constexpr std::size_t kDefaultTruncation = 16;
/// Default bound on n for exhaustive order search.
inline constexpr std::size_t kDefaultSearchBound = 8;

/// Power series coefficients c_0..c_N.
struct TruncatedSeries {
  std::vector<BigInt> coefficients;
};

/// 1 / h(-t) modulo t^{N+1}. Throws std::invalid_argument unless h_0 = 1.
TruncatedSeries invert_hilb_neg(const HilbertSeries& h, std::size_t truncation);

/// Degree of the first negative coefficient of 1/h(-t) up to t^N. A hit
/// rules out Koszulity; no hit is inconclusive.
std::optional<std::size_t> koszul_obstruction(const HilbertSeries& h, std::size_t truncation);

/// True iff every inclusion-minimal broken circuit under `order` has
/// exactly two elements.
bool quadratic_certificate(const Arrangement& a, const ElementOrder& order);
bool quadratic_certificate(const std::vector<SignedSet>& circuits, const ElementOrder& order);

/// Smallest (lexicographic chain) hyperplane order passing
/// quadratic_certificate, or nullopt. Throws std::invalid_argument when the
/// arrangement has more than `bound` hyperplanes.
std::optional<ElementOrder> supersolvable_order_search(const Arrangement& a, std::size_t bound = kDefaultSearchBound);

enum class KoszulVerdict { CertifiedKoszul, CertifiedNonKoszul, Inconclusive };
std::string to_string(KoszulVerdict v);

}  // namespace vgcone
