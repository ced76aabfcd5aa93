#include "vgcone/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace vgcone {

Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

RationalVector primitive_integer(RationalVector v) {
  BigInt den_lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  BigInt num_gcd = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    BigInt scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  for (auto& x : v) {
    x = Rational(x * den_lcm / num_gcd);
    x.canonicalize();
  }
  return v;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("RationalMatrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Echelon reduced_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && sgn(m(pivot_row, c)) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != lead) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot_row, k), m(lead, k));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (sgn(m(lead, k)) != 0) m(r, k) -= factor * m(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  RationalMatrix reduced(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const auto ech = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

namespace {

// Phase-one simplex for { y free : A y >= 1 }. Returns y or nullopt.
std::optional<RationalVector> solve_strict_system(const std::vector<RationalVector>& a, std::size_t m) {
  const std::size_t r = a.size();
  // Columns: y+ [0,m), y- [m,2m), surplus [2m,2m+r), artificial [2m+r,2m+2r), rhs.
  const std::size_t n_vars = 2 * m + 2 * r;
  const std::size_t rhs = n_vars;
  RationalMatrix t(r, n_vars + 1);
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      t(i, j) = a[i][j];
      t(i, m + j) = -a[i][j];
    }
    t(i, 2 * m + i) = -1;
    t(i, 2 * m + r + i) = 1;
    t(i, rhs) = 1;
    basis[i] = 2 * m + r + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(n_vars + 1);
  for (std::size_t j = 0; j <= n_vars; ++j) {
    if (j >= 2 * m + r && j < n_vars) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < r; ++i) s += t(i, j);
    cost[j] = -s;
  }

  while (true) {
    std::size_t enter = n_vars;
    for (std::size_t j = 0; j < n_vars; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n_vars) break;
    std::size_t leave = r;
    Rational best_ratio;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == r || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == r) throw std::logic_error("strict_feasible: unbounded phase-one simplex");
    const Rational inv = 1 / t(leave, enter);
    for (std::size_t k = 0; k <= n_vars; ++k) {
      if (sgn(t(leave, k)) != 0) t(leave, k) *= inv;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational factor = t(i, enter);
      for (std::size_t k = 0; k <= n_vars; ++k) {
        if (sgn(t(leave, k)) != 0) t(i, k) -= factor * t(leave, k);
      }
    }
    if (sgn(cost[enter]) != 0) {
      const Rational factor = cost[enter];
      for (std::size_t k = 0; k <= n_vars; ++k) {
        if (sgn(t(leave, k)) != 0) cost[k] -= factor * t(leave, k);
      }
    }
    basis[leave] = enter;
  }
  // Objective value is -cost[rhs].
  if (sgn(cost[rhs]) != 0) return std::nullopt;
  RationalVector y(m);
  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i] < m) {
      y[basis[i]] += t(i, rhs);
    } else if (basis[i] < 2 * m) {
      y[basis[i] - m] -= t(i, rhs);
    }
  }
  return y;
}

}  // namespace

std::optional<RationalVector> strict_feasible(std::span<const RationalVector> equalities,
                                              std::span<const RationalVector> strict_positives,
                                              std::size_t dimension) {
  for (const auto& v : equalities) {
    if (v.size() != dimension) throw std::invalid_argument("strict_feasible: equality vector has wrong dimension");
  }
  for (const auto& v : strict_positives) {
    if (v.size() != dimension) throw std::invalid_argument("strict_feasible: strict vector has wrong dimension");
  }

  // Parametrize the solution space of the equalities: x = K y.
  std::vector<RationalVector> kernel =
      equalities.empty() ? std::vector<RationalVector>{} : kernel_basis(RationalMatrix::from_rows(equalities, dimension));
  if (equalities.empty()) {
    for (std::size_t i = 0; i < dimension; ++i) {
      RationalVector e(dimension);
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  }
  if (strict_positives.empty()) {
    return kernel.empty() ? RationalVector(dimension) : primitive_integer(kernel.front());
  }
  if (kernel.empty()) return std::nullopt;

  const std::size_t m = kernel.size();
  std::vector<RationalVector> reduced;
  reduced.reserve(strict_positives.size());
  for (const auto& s : strict_positives) {
    RationalVector row(m);
    bool nonzero = false;
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = dot(s, kernel[j]);
      nonzero = nonzero || sgn(row[j]) != 0;
    }
    if (!nonzero) return std::nullopt;
    reduced.push_back(std::move(row));
  }
  auto y = solve_strict_system(reduced, m);
  if (!y) return std::nullopt;
  RationalVector x(dimension);
  for (std::size_t j = 0; j < m; ++j) {
    if (sgn((*y)[j]) == 0) continue;
    for (std::size_t k = 0; k < dimension; ++k) x[k] += (*y)[j] * kernel[j][k];
  }
  return primitive_integer(std::move(x));
}

}  // namespace vgcone
