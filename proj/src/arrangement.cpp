#include "vgcone/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace vgcone {

namespace {

char sign_char(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

RationalVector signed_normal(const RationalVector& v, char sign) {
  if (sign == '+') return v;
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::string fingerprint_key(const RationalMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << m(r, c).get_str() << ',';
    out << ';';
  }
  return out.str();
}

// Is v in the row space spanned by an echelon basis?
bool in_row_space(const Echelon& e, const RationalVector& v) {
  RationalVector w = v;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const auto p = e.pivots[r];
    if (sgn(w[p]) == 0) continue;
    const Rational f = w[p];
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (sgn(e.reduced(r, c)) != 0) w[c] -= f * e.reduced(r, c);
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Echelon span_of(const Arrangement& a, IndexSet s) {
  const auto rows = a.normals_of(s);
  return reduced_echelon(RationalMatrix::from_rows(rows, a.dimension()));
}

IndexSet flat_of(const Arrangement& a, const Echelon& e) {
  IndexSet flat;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (in_row_space(e, a.normal(j))) flat.insert(j);
  }
  return flat;
}

template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, unsigned threads, Fn fn) {
  using Result = decltype(fn(items.front()));
  std::vector<Result> out(items.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, items.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) out[i] = fn(items[i]);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

struct PartialChamber {
  SignVector prefix;
  RationalVector witness;
};

std::vector<SignVector> enumerate_chambers(const Arrangement& a, IndexSet forced_positive,
                                           const RationalVector& start, unsigned threads) {
  const auto base = a.normals_of(forced_positive);
  std::vector<PartialChamber> frontier{{SignVector{}, start}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto extend = [&](const PartialChamber& item) {
      std::vector<PartialChamber> children;
      const int s = sgn(dot(a.normal(i), item.witness));
      for (char side : {'+', '-'}) {
        if (side == '-' && forced_positive.contains(i)) continue;
        if ((side == '+' && s > 0) || (side == '-' && s < 0)) {
          children.push_back({item.prefix + side, item.witness});
          continue;
        }
        std::vector<RationalVector> strict = base;
        for (std::size_t j = 0; j < i; ++j) strict.push_back(signed_normal(a.normal(j), item.prefix[j]));
        strict.push_back(signed_normal(a.normal(i), side));
        if (auto w = strict_feasible({}, strict, a.dimension())) {
          children.push_back({item.prefix + side, std::move(*w)});
        }
      }
      return children;
    };
    std::vector<PartialChamber> next;
    for (auto& children : parallel_map(frontier, threads, extend)) {
      for (auto& c : children) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }
  std::vector<SignVector> out;
  out.reserve(frontier.size());
  for (auto& item : frontier) out.push_back(std::move(item.prefix));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Arrangement::Arrangement(std::size_t dimension, std::vector<RationalVector> normals, std::vector<std::string> labels)
    : dimension_(dimension), normals_(std::move(normals)), labels_(std::move(labels)) {
  using Kind = ArrangementError::Kind;
  if (normals_.size() >= kMaxHyperplanes) throw ArrangementError(Kind::TooLarge, "at most 63 hyperplanes are supported");
  if (!labels_.empty() && labels_.size() != normals_.size()) {
    throw ArrangementError(Kind::DimensionMismatch, "label count differs from hyperplane count");
  }
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].size() != dimension_) {
      throw ArrangementError(Kind::DimensionMismatch, "normal " + std::to_string(i + 1) + " has length " +
                                                          std::to_string(normals_[i].size()) + ", expected " +
                                                          std::to_string(dimension_));
    }
    if (std::all_of(normals_[i].begin(), normals_[i].end(), [](const Rational& x) { return sgn(x) == 0; })) {
      throw ArrangementError(Kind::ZeroNormal, "normal " + std::to_string(i + 1) + " is zero");
    }
  }
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    for (std::size_t j = i + 1; j < normals_.size(); ++j) {
      const std::vector<RationalVector> pair{normals_[i], normals_[j]};
      if (vgcone::rank(RationalMatrix::from_rows(pair, dimension_)) < 2) {
        throw ArrangementError(Kind::DuplicateHyperplane, "hyperplanes " + std::to_string(i + 1) + " and " +
                                                              std::to_string(j + 1) + " coincide");
      }
    }
  }
  rank_ = vgcone::rank(RationalMatrix::from_rows(normals_, dimension_));
}

std::vector<RationalVector> Arrangement::normals_of(IndexSet s) const {
  std::vector<RationalVector> out;
  for (auto i : s.elements()) out.push_back(normals_.at(i));
  return out;
}

SignVector Arrangement::sign_vector(const RationalVector& x) const {
  SignVector out;
  out.reserve(normals_.size());
  for (const auto& v : normals_) out.push_back(sign_char(sgn(dot(v, x))));
  return out;
}

Cone::Cone(Arrangement arrangement, IndexSet walls) : arrangement_(std::move(arrangement)), walls_(walls) {
  if (!walls_.is_subset_of(IndexSet::range(arrangement_.size()))) {
    throw ArrangementError(ArrangementError::Kind::WallOutOfRange, "wall index out of range");
  }
  const auto strict = wall_normals();
  auto point = strict_feasible({}, strict, arrangement_.dimension());
  if (!point) throw ArrangementError(ArrangementError::Kind::EmptyCone, "the open cone " + to_string(walls_) + " is empty");
  interior_point_ = std::move(*point);
}

Cone validate(std::size_t dimension, std::vector<RationalVector> normals, const std::vector<long long>& walls,
              std::vector<std::string> labels) {
  using Kind = ArrangementError::Kind;
  const auto n = static_cast<long long>(normals.size());
  IndexSet positive;
  IndexSet negative;
  for (auto w : walls) {
    if (w == 0 || std::llabs(w) > n) {
      throw ArrangementError(Kind::WallOutOfRange, "wall index " + std::to_string(w) + " is out of range 1.." +
                                                       std::to_string(n));
    }
    const auto i = static_cast<std::size_t>(std::llabs(w) - 1);
    (w > 0 ? positive : negative).insert(i);
  }
  Arrangement arrangement(dimension, std::move(normals), std::move(labels));
  if (positive.intersects(negative)) {
    throw ArrangementError(Kind::EmptyCone, "wall set uses both sides of a hyperplane");
  }
  if (!negative.empty()) {
    auto flipped = arrangement.normals();
    for (auto i : negative.elements()) {
      for (auto& x : flipped[i]) x = -x;
    }
    arrangement = Arrangement(dimension, std::move(flipped), arrangement.labels());
  }
  return Cone(std::move(arrangement), positive | negative);
}

Arrangement braid_arrangement(std::size_t n) {
  std::vector<RationalVector> normals;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalVector v(n);
      v[j] = 1;
      v[i] = -1;
      normals.push_back(std::move(v));
      labels.push_back("x" + std::to_string(j + 1) + "-x" + std::to_string(i + 1));
    }
  }
  return Arrangement(n, std::move(normals), std::move(labels));
}

std::size_t braid_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw std::out_of_range("braid_index: need i < j < n");
  // Pairs (a, b) with a < i come first: sum_{a<i} (n-1-a).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::vector<SignVector> chambers(const Arrangement& a, unsigned threads) {
  return enumerate_chambers(a, {}, RationalVector(a.dimension()), threads);
}

std::vector<SignVector> cone_chambers(const Cone& k, unsigned threads) {
  return enumerate_chambers(k.arrangement(), k.walls(), k.interior_point(), threads);
}

std::vector<SignVector> chambers_exhaustive(const Arrangement& a, IndexSet forced_positive) {
  const std::size_t n = a.size();
  if (n > 24) throw std::invalid_argument("chambers_exhaustive: too many hyperplanes");
  std::vector<SignVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SignVector sigma(n, '+');
    std::vector<RationalVector> strict;
    bool allowed = true;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        if (forced_positive.contains(i)) allowed = false;
        sigma[i] = '-';
      }
      strict.push_back(signed_normal(a.normal(i), sigma[i]));
    }
    if (allowed && strict_feasible({}, strict, a.dimension())) out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntersectionPoset::IntersectionPoset(std::vector<PosetNode> nodes) : nodes_(std::move(nodes)) {
  covers_.assign(nodes_.size(), {});
  for (std::size_t x = 0; x < nodes_.size(); ++x) {
    for (std::size_t y = 0; y < nodes_.size(); ++y) {
      if (nodes_[y].codim == nodes_[x].codim + 1 && nodes_[x].flat.is_subset_of(nodes_[y].flat)) {
        covers_[x].push_back(y);
      }
    }
  }
  mobius_ = vgcone::mobius(*this);
}

bool IntersectionPoset::leq(std::size_t x, std::size_t y) const {
  return nodes_.at(x).flat.is_subset_of(nodes_.at(y).flat);
}

std::size_t IntersectionPoset::find(IndexSet flat) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].flat == flat) return i;
  }
  return nodes_.size();
}

std::size_t IntersectionPoset::max_codim() const {
  std::size_t m = 0;
  for (const auto& node : nodes_) m = std::max(m, node.codim);
  return m;
}

IntersectionPoset intersection_poset(const Arrangement& a) {
  std::map<std::string, std::size_t> seen;
  std::vector<PosetNode> nodes;
  {
    Echelon e = reduced_echelon(RationalMatrix(0, a.dimension()));
    PosetNode bottom{flat_of(a, e), 0, e.reduced};
    seen.emplace(fingerprint_key(bottom.fingerprint), 0);
    nodes.push_back(std::move(bottom));
  }
  std::size_t level_begin = 0;
  for (std::size_t codim = 1; level_begin < nodes.size(); ++codim) {
    const std::size_t level_end = nodes.size();
    for (std::size_t x = level_begin; x < level_end; ++x) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (nodes[x].flat.contains(i)) continue;
        Echelon e = span_of(a, nodes[x].flat.with(i));
        auto key = fingerprint_key(e.reduced);
        if (seen.contains(key)) continue;
        seen.emplace(std::move(key), nodes.size());
        nodes.push_back(PosetNode{flat_of(a, e), codim, std::move(e.reduced)});
      }
    }
    level_begin = level_end;
  }
  std::sort(nodes.begin(), nodes.end(), [](const PosetNode& x, const PosetNode& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.flat.elements() < y.flat.elements();
  });
  return IntersectionPoset(std::move(nodes));
}

IntersectionPoset interior_poset(const Cone& k) { return interior_poset(k, intersection_poset(k.arrangement())); }

IntersectionPoset interior_poset(const Cone& k, const IntersectionPoset& full) {
  std::vector<PosetNode> kept;
  const auto walls = k.wall_normals();
  for (const auto& node : full.nodes()) {
    std::vector<RationalVector> eqs;
    for (std::size_t r = 0; r < node.fingerprint.rows(); ++r) eqs.push_back(node.fingerprint.row(r));
    if (strict_feasible(eqs, walls, k.arrangement().dimension())) kept.push_back(node);
  }
  return IntersectionPoset(std::move(kept));
}

std::vector<std::int64_t> mobius(const IntersectionPoset& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return p.node(x).codim < p.node(y).codim; });
  std::vector<std::int64_t> mu(p.size(), 0);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const auto x = order[idx];
    if (p.node(x).codim == 0) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t jdx = 0; jdx < idx; ++jdx) {
      const auto y = order[jdx];
      if (p.node(y).flat != p.node(x).flat && p.leq(y, x)) sum += mu[y];
    }
    mu[x] = -sum;
  }
  return mu;
}

IndexSet closure(const Arrangement& a, IndexSet s) { return flat_of(a, span_of(a, s)); }

bool meets_cone(const Cone& k, IndexSet s) {
  const auto eqs = k.arrangement().normals_of(s);
  const auto walls = k.wall_normals();
  return strict_feasible(eqs, walls, k.arrangement().dimension()).has_value();
}

std::int64_t PoincarePolynomial::at_one() const {
  std::int64_t sum = 0;
  for (auto c : coefficients) sum += c;
  return sum;
}

PoincarePolynomial poincare(const IntersectionPoset& p) {
  PoincarePolynomial out;
  out.coefficients.assign(p.max_codim() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out.coefficients[p.node(i).codim] += std::llabs(p.mobius()[i]);
  return out;
}

PoincarePolynomial poincare(const Cone& k) { return poincare(interior_poset(k)); }

}  // namespace vgcone
