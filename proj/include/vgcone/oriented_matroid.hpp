#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vgcone/arrangement.hpp"
#include "vgcone/index_set.hpp"

namespace vgcone {

/// A disjoint pair (plus, minus) of subsets of a ground set of size n.
class SignedSet {
 public:
  SignedSet() = default;
  /// Throws std::invalid_argument if plus and minus meet or leave the ground set.
  SignedSet(std::size_t ground, IndexSet plus, IndexSet minus);

  [[nodiscard]] std::size_t ground() const { return ground_; }
  [[nodiscard]] IndexSet plus() const { return plus_; }
  [[nodiscard]] IndexSet minus() const { return minus_; }
  [[nodiscard]] IndexSet support() const { return plus_ | minus_; }
  /// +1, -1 or 0 at element e.
  [[nodiscard]] int sign(std::size_t e) const;
  [[nodiscard]] bool is_zero() const { return support().empty(); }

  friend SignedSet operator-(const SignedSet& s) { return SignedSet(s.ground_, s.minus_, s.plus_); }
  friend bool operator==(const SignedSet&, const SignedSet&) = default;

 private:
  std::size_t ground_ = 0;
  IndexSet plus_;
  IndexSet minus_;
};

/// (C o D)_e = C_e if C_e != 0, else D_e.
SignedSet compose(const SignedSet& c, const SignedSet& d);
/// {e : C_e = -D_e != 0}.
IndexSet separator(const SignedSet& c, const SignedSet& d);

/// "+-0..." rendering over the ground set.
std::string to_sign_string(const SignedSet& s);
/// "({1,3},{2})" rendering, 1-based.
std::string to_string(const SignedSet& s);

/// Order used for listing circuits: by support (canonical_less), then plus.
bool circuit_less(const SignedSet& a, const SignedSet& b);

/// Signed circuits of the normal configuration, one representative per
/// pair +-C with min(support) in plus. A relation sum lambda_i v_i = 0 puts
/// i in plus when lambda_i < 0 and in minus when lambda_i > 0.
std::vector<SignedSet> circuits(const Arrangement& a);

/// Is there a linear relation sum lambda_i v_i = 0 whose sign pattern is
/// exactly `d` (lambda_i < 0 on plus, > 0 on minus, 0 elsewhere)?
bool is_signed_dependency(const Arrangement& a, const SignedSet& d);

/// Kernel coefficients lambda of a circuit, scaled to coprime integers and
/// oriented to match the circuit's signs.
RationalVector circuit_coefficients(const Arrangement& a, const SignedSet& c);

/// support(C) minus its smallest element under `order`, deduplicated, canonical order.
std::vector<IndexSet> broken_circuits(const std::vector<SignedSet>& circuits, const ElementOrder& order);
std::vector<IndexSet> broken_circuits(const Arrangement& a);

/// Subsets of [n] containing no broken circuit, by pruned depth-first search.
std::vector<IndexSet> nbc_sets(std::size_t n, const std::vector<IndexSet>& broken);
std::vector<IndexSet> nbc_sets(const Arrangement& a, const ElementOrder& order);
std::vector<IndexSet> nbc_sets(const Arrangement& a);

/// NBC sets whose hyperplane intersection meets the open cone.
std::vector<IndexSet> k_nbc_sets(const Cone& k, const ElementOrder& order);
std::vector<IndexSet> k_nbc_sets(const Cone& k);

/// Inclusion-minimal members of a family of sets (canonical order).
std::vector<IndexSet> minimal_sets(const std::vector<IndexSet>& family);

}  // namespace vgcone
