#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vgcone/cli.hpp"
#include "vgcone/koszul.hpp"

using namespace vgcone;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// h(-t) * c(t) truncated to degree N, by direct convolution.
std::vector<BigInt> product_with_h_neg(const HilbertSeries& h, const std::vector<BigInt>& c) {
  std::vector<BigInt> out(c.size(), 0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t j = 0; j <= k && j < h.coefficients.size(); ++j) {
      const BigInt hj = (j % 2 == 0 ? 1 : -1) * h.coefficients[j];
      out[k] += hj * c[k - j];
    }
  }
  return out;
}

Arrangement generic_four_planes() {
  return Arrangement(3, {RationalVector{1, 0, 0}, RationalVector{0, 1, 0}, RationalVector{0, 0, 1}, RationalVector{1, 1, 1}});
}

}  // namespace

TEST_CASE("inverting h(-t)") {
  CHECK(invert_hilb_neg(HilbertSeries{{1, 1}}, 5).coefficients == big({1, 1, 1, 1, 1, 1}));
  CHECK(invert_hilb_neg(HilbertSeries{{1}}, 3).coefficients == big({1, 0, 0, 0}));
  CHECK(invert_hilb_neg(HilbertSeries{{1, 3, 1}}, 6).coefficients == big({1, 3, 8, 21, 55, 144, 377}));
  CHECK_THROWS_AS(invert_hilb_neg(HilbertSeries{{2, 1}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(invert_hilb_neg(HilbertSeries{{}}, 3), std::invalid_argument);
}

TEST_CASE("A5 cone series") {
  const HilbertSeries h{{1, 12, 43, 30, 4}};
  const auto c = invert_hilb_neg(h, 16).coefficients;
  CHECK(std::vector<BigInt>(c.begin(), c.begin() + 13) ==
        big({1, 12, 101, 726, 4725, 28464, 159769, 832122, 3950417, 16302972, 50092317, 15264030, -1497513779}));
  const auto check = product_with_h_neg(h, c);
  CHECK(check[0] == 1);
  for (std::size_t k = 1; k < check.size(); ++k) CHECK(check[k] == 0);
  CHECK(koszul_obstruction(h, 16) == std::optional<std::size_t>{12});
  CHECK_FALSE(koszul_obstruction(h, 11).has_value());
}

TEST_CASE("no obstruction for ExB up to degree 20") {
  CHECK_FALSE(koszul_obstruction(HilbertSeries{{1, 3, 1}}, 20).has_value());
}

TEST_CASE("quadratic certificate") {
  const auto exa = cli::to_cone(cli::fixture("exa"));
  CHECK(quadratic_certificate(exa.arrangement(), ElementOrder::natural(3)));
  CHECK(quadratic_certificate(braid_arrangement(4), ElementOrder::natural(6)));
  const auto g = generic_four_planes();
  CHECK_FALSE(quadratic_certificate(g, ElementOrder::natural(4)));
  CHECK(quadratic_certificate(std::vector<SignedSet>{}, ElementOrder::natural(2)));
}

TEST_CASE("order search") {
  const auto found = supersolvable_order_search(braid_arrangement(4));
  REQUIRE(found);
  CHECK(found->is_natural());
  CHECK_FALSE(supersolvable_order_search(generic_four_planes()).has_value());
  CHECK_THROWS_AS(supersolvable_order_search(braid_arrangement(6)), std::invalid_argument);
  CHECK_NOTHROW(supersolvable_order_search(braid_arrangement(4), 6));

  // ExB with walls dropped: the search result must satisfy the certificate.
  const auto exb = cli::to_cone(cli::fixture("exb"));
  if (const auto o = supersolvable_order_search(exb.arrangement())) {
    CHECK(quadratic_certificate(exb.arrangement(), *o));
  }
}

TEST_CASE("the two probes never contradict each other") {
  for (const auto& doc : oracle::random_cones(25, 77, 6, 3)) {
    CAPTURE(cli::to_json(doc).dump());
    const auto k = cli::to_cone(doc);
    const Cone whole(k.arrangement(), {});
    const auto h = hilbert_series(whole, MonomialOrder::natural(whole.size()));
    const auto order = supersolvable_order_search(whole.arrangement());
    if (order) CHECK_FALSE(koszul_obstruction(h, 16).has_value());
    if (koszul_obstruction(h, 16)) CHECK_FALSE(order.has_value());
  }
}

TEST_CASE("verdict strings") {
  CHECK(to_string(KoszulVerdict::CertifiedKoszul) == "certified Koszul");
  CHECK(to_string(KoszulVerdict::CertifiedNonKoszul) == "certified non-Koszul");
  CHECK(to_string(KoszulVerdict::Inconclusive) == "inconclusive");
}
