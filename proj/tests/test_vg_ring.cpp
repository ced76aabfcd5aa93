#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vgcone/cli.hpp"
#include "vgcone/vg_ring.hpp"

using namespace vgcone;

namespace {

Cone exa() { return cli::to_cone(cli::fixture("exa")); }
Cone exb() { return cli::to_cone(cli::fixture("exb")); }

IntegerPolynomial e(std::size_t n, std::size_t i) { return IntegerPolynomial::variable(n, i); }
IntegerPolynomial one(std::size_t n) { return IntegerPolynomial::constant(n, 1); }

// Value of p on a chamber, computed straight from the sign letters.
BigInt value_on(const IntegerPolynomial& p, const SignVector& chamber) {
  BigInt total = 0;
  for (const auto& [m, c] : p.terms()) {
    bool on = true;
    for (auto i : m.support().elements()) on = on && chamber[i] == '+';
    if (on) total += c;
  }
  return total;
}

IntegerPolynomial random_polynomial(std::size_t n, std::mt19937& rng) {
  IntegerPolynomial p(n);
  const int terms = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> exps(n);
    for (auto& x : exps) x = std::uniform_int_distribution<std::uint32_t>(0, 2)(rng) == 2 ? 1 : 0;
    p.add_term(Monomial(exps), std::uniform_int_distribution<int>(-3, 3)(rng));
  }
  return p;
}

ElementOrder shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> chain(n);
  std::iota(chain.begin(), chain.end(), 0);
  std::shuffle(chain.begin(), chain.end(), rng);
  return ElementOrder::from_chain(chain);
}

}  // namespace

TEST_CASE("monomials and grevlex") {
  const auto m = Monomial::squarefree(3, {1, 2});
  CHECK(m.degree() == 2);
  CHECK(m.is_squarefree());
  CHECK(Monomial::variable(3, 0).divides(Monomial::variable(3, 0, 3)));
  CHECK_FALSE(m.divides(Monomial::variable(3, 1)));
  CHECK(Monomial::variable(3, 0, 3).quotient(Monomial::variable(3, 0)) == Monomial::variable(3, 0, 2));
  CHECK(to_string(m) == "e2*e3");
  CHECK(to_string(Monomial::variable(3, 0, 2)) == "e1^2");

  const auto order = MonomialOrder::natural(3);
  // degree first
  CHECK(order.less(Monomial::variable(3, 2), Monomial::squarefree(3, {0, 1})));
  // e1 < e2 < e3, and among e1e2, e1e3, e2e3 the one avoiding e1 is largest
  CHECK(order.less(Monomial::variable(3, 0), Monomial::variable(3, 1)));
  CHECK(order.less(Monomial::squarefree(3, {0, 1}), Monomial::squarefree(3, {0, 2})));
  CHECK(order.less(Monomial::squarefree(3, {0, 2}), Monomial::squarefree(3, {1, 2})));
  // e2^3 avoids the smallest variable, so it beats e1*e3^2
  CHECK(order.less(Monomial(std::vector<std::uint32_t>{1, 0, 2}), Monomial::variable(3, 1, 3)));

  const MonomialOrder reversed(ElementOrder::from_chain({2, 1, 0}));
  CHECK(reversed.less(Monomial::variable(3, 2), Monomial::variable(3, 1)));
  CHECK(reversed.less(Monomial::squarefree(3, {1, 2}), Monomial::squarefree(3, {0, 1})));
}

TEST_CASE("polynomial arithmetic") {
  const std::size_t n = 3;
  const auto p = e(n, 0) * e(n, 0) - e(n, 0);
  CHECK(to_string(p, MonomialOrder::natural(n)) == "e1^2 - e1");
  CHECK((p - p).is_zero());
  CHECK((e(n, 1) - one(n)) * (e(n, 1) - one(n)) == e(n, 1) * e(n, 1) - e(n, 1) - e(n, 1) + one(n));
  CHECK(p.degree() == 2);
  CHECK(p.degree_initial() == e(n, 0) * e(n, 0));
  CHECK(p.leading_coefficient(MonomialOrder::natural(n)) == 1);
  CHECK(-p == e(n, 0) - e(n, 0) * e(n, 0));
  CHECK_THROWS_AS((void)IntegerPolynomial(n).leading_monomial(MonomialOrder::natural(n)), std::invalid_argument);
}

TEST_CASE("heaviside functions on ExA") {
  const VgRing ring(exa());
  REQUIRE(ring.chambers().size() == 3);
  for (const auto& [c, v] : ring.heaviside(0)) CHECK(v == 1);
  std::int64_t on = 0;
  for (const auto& [c, v] : ring.heaviside(1)) on += v.get_si();
  CHECK(on == 1);
  CHECK_THROWS_AS((void)ring.heaviside(3), std::out_of_range);
  const auto f = ring.evaluate(e(3, 1) * e(3, 2) - e(3, 1));
  CHECK(is_zero_function(f));
  CHECK(is_zero_function(ring.evaluate(e(3, 0) - one(3))));
  CHECK_FALSE(is_zero_function(ring.evaluate(e(3, 1))));
}

TEST_CASE("ExA relations") {
  const auto order = MonomialOrder::natural(3);
  const auto rel = generate_relations(exa(), order);
  REQUIRE(rel.size() == 5);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rel[i].kind == RelationKind::Idempotent);
    CHECK(rel[i].polynomial == e(3, i) * e(3, i) - e(3, i));
  }
  CHECK(rel[3].kind == RelationKind::Unit);
  CHECK(rel[3].polynomial == e(3, 0) - one(3));
  CHECK(rel[3].leading == Monomial::variable(3, 0));
  CHECK(rel[4].kind == RelationKind::ConeCircuit);
  CHECK(rel[4].polynomial == e(3, 1) * e(3, 2) - e(3, 1));
  CHECK(rel[4].degree_initial == e(3, 1) * e(3, 2));
  CHECK(rel[4].leading == Monomial::squarefree(3, {1, 2}));
}

TEST_CASE("circuit relation of the full ExA arrangement") {
  const auto order = MonomialOrder::natural(3);
  const Cone whole(exa().arrangement(), {});
  const auto rel = generate_relations(whole, order);
  REQUIRE(rel.size() == 4);
  CHECK(rel[3].kind == RelationKind::Circuit);
  // e1e2(e3 - 1) - e3(e1 - 1)(e2 - 1), up to sign
  const auto expected = e(3, 0) * e(3, 1) * (e(3, 2) - one(3)) - e(3, 2) * (e(3, 0) - one(3)) * (e(3, 1) - one(3));
  CHECK((rel[3].polynomial == expected || rel[3].polynomial == -expected));
  CHECK(rel[3].leading == Monomial::squarefree(3, {1, 2}));
  const auto in = initial_forms(expected, order);
  CHECK(in.degree_initial == e(3, 0) * e(3, 2) + e(3, 1) * e(3, 2) - e(3, 0) * e(3, 1));
  CHECK(in.leading == Monomial::squarefree(3, {1, 2}));
}

TEST_CASE("ExB relations: units and leading monomials") {
  const auto order = MonomialOrder::natural(5);
  const auto rel = generate_relations(exb(), order);
  std::vector<Monomial> units, cone;
  for (const auto& r : rel) {
    if (r.kind == RelationKind::Unit) units.push_back(r.leading);
    if (r.kind == RelationKind::ConeCircuit) cone.push_back(r.leading);
    CHECK(r.kind != RelationKind::Circuit);
  }
  CHECK(units == std::vector<Monomial>{Monomial::variable(5, 3), Monomial::variable(5, 4)});
  std::sort(cone.begin(), cone.end());
  for (const auto& m : cone) {
    CHECK(m.support().is_subset_of(IndexSet{0, 1, 2}));
    CHECK(m.degree() >= 2);
  }
  CHECK(std::count(cone.begin(), cone.end(), Monomial::squarefree(5, {0, 1})) == 1);
  CHECK(std::count(cone.begin(), cone.end(), Monomial::squarefree(5, {0, 2})) == 1);
  CHECK(std::count(cone.begin(), cone.end(), Monomial::squarefree(5, {0, 1, 2})) >= 1);
}

TEST_CASE("division") {
  const auto order = MonomialOrder::natural(3);
  const auto rel = generate_relations(exa(), order);
  CHECK(divide(e(3, 1) * e(3, 2), rel, order).remainder == e(3, 1));
  auto e1_5 = one(3);
  for (int i = 0; i < 5; ++i) e1_5 = e1_5 * e(3, 0);
  CHECK(divide(e1_5, rel, order).remainder == one(3));
  const auto d = divide(e(3, 2) * e(3, 2) * e(3, 1), rel, order);
  // p = sum q_i g_i + r
  auto rebuilt = d.remainder;
  for (std::size_t i = 0; i < rel.size(); ++i) rebuilt += d.quotients[i] * rel[i].polynomial;
  CHECK(rebuilt == e(3, 2) * e(3, 2) * e(3, 1));

  RelationSet bad = rel;
  bad[0].polynomial = IntegerPolynomial::monomial(Monomial::variable(3, 0, 2), 2);
  bad[0].leading = Monomial::variable(3, 0, 2);
  CHECK_THROWS_AS(divide(e(3, 0), bad, order), std::invalid_argument);
}

TEST_CASE("standard monomials") {
  const auto order = MonomialOrder::natural(3);
  const auto sm = standard_monomials(generate_relations(exa(), order), 3);
  CHECK(sm == std::vector<Monomial>{Monomial(3), Monomial::variable(3, 1), Monomial::variable(3, 2)});
  CHECK(hilbert_from_monomials(sm).coefficients == std::vector<std::int64_t>{1, 2});

  const auto smb = standard_monomials(generate_relations(exb(), MonomialOrder::natural(5)), 5);
  CHECK(hilbert_from_monomials(smb).coefficients == std::vector<std::int64_t>{1, 3, 1});
  CHECK(std::find(smb.begin(), smb.end(), Monomial::squarefree(5, {1, 2})) != smb.end());

  RelationSet missing = generate_relations(exa(), order);
  missing.erase(missing.begin());
  CHECK_THROWS_AS(standard_monomials(missing, 3), std::invalid_argument);
}

TEST_CASE("filtration ranks") {
  CHECK(VgRing(exa()).filtration_ranks(2) == std::vector<std::size_t>{1, 3, 3});
}

TEST_CASE("main theorem checks on the fixtures") {
  for (const char* name : {"exa", "exb", "a5cone", "braid3", "braid4"}) {
    CAPTURE(name);
    const auto k = cli::to_cone(cli::fixture(name));
    const auto report = verify_main_theorem(k, MonomialOrder::natural(k.size()), 2);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
    CHECK(report.passed());
    CHECK(report.basis_size == report.chamber_count);
    CHECK(abs(report.determinant) == 1);
  }
  const auto a5 = verify_main_theorem(cli::to_cone(cli::fixture("a5cone")), MonomialOrder::natural(15));
  CHECK(a5.chamber_count == 90);
  CHECK(a5.hilbert.coefficients == std::vector<std::int64_t>{1, 12, 43, 30, 4});
}

TEST_CASE("ring properties on random cones") {
  std::mt19937 rng(17);
  for (const auto& doc : oracle::random_cones(40, 4242, 6)) {
    CAPTURE(cli::to_json(doc).dump());
    const auto k = cli::to_cone(doc);
    const std::size_t n = k.size();
    const VgRing ring(k);

    // evaluate is a ring map into functions on chambers
    for (int t = 0; t < 5; ++t) {
      const auto p = random_polynomial(n, rng);
      const auto q = random_polynomial(n, rng);
      const auto fp = ring.evaluate(p);
      const auto fq = ring.evaluate(q);
      const auto fpq = ring.evaluate(p * q);
      const auto fsum = ring.evaluate(p + q);
      for (const auto& c : ring.chambers()) {
        CHECK(fp.at(c) == value_on(p, c));
        CHECK(fpq.at(c) == fp.at(c) * fq.at(c));
        CHECK(fsum.at(c) == fp.at(c) + fq.at(c));
      }
    }

    // chamber_expansion inverts evaluate
    ChamberFunction f;
    for (const auto& c : ring.chambers()) f[c] = std::uniform_int_distribution<int>(-5, 5)(rng);
    const auto g = ring.chamber_expansion(f);
    CHECK(ring.evaluate(g) == f);
    ChamberFunction wrong = f;
    wrong["?"] = 1;
    CHECK_THROWS_AS((void)ring.chamber_expansion(wrong), std::invalid_argument);

    for (int trial = 0; trial < 2; ++trial) {
      const MonomialOrder order(trial == 0 ? ElementOrder::natural(n) : shuffled(n, rng));
      const auto rel = generate_relations(k, order);
      for (const auto& r : rel) {
        for (const auto& c : ring.chambers()) CHECK(value_on(r.polynomial, c) == 0);
        // degree compatibility: the leading monomial sits in the top degree
        CHECK(r.leading.degree() == r.polynomial.degree());
        CHECK(abs(r.polynomial.leading_coefficient(order)) == 1);
      }
      // division leaves a standard-monomial remainder with the same values
      const auto sm = standard_monomials(rel, n);
      const auto p = random_polynomial(n, rng) * random_polynomial(n, rng);
      const auto r = divide(p, rel, order).remainder;
      for (const auto& [m, c] : r.terms()) CHECK(std::find(sm.begin(), sm.end(), m) != sm.end());
      CHECK(ring.evaluate(r) == ring.evaluate(p));

      const auto report = verify_main_theorem(k, order);
      CHECK(report.passed());
      CHECK(abs(report.determinant) == 1);
      CHECK(report.hilbert.coefficients == poincare(k).coefficients);
    }
  }
}
