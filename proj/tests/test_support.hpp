#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the optimizer or the
// expansion code it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "polya/forms.hpp"
#include "polya/rational.hpp"

namespace polya::testing {

using Matrix = std::vector<std::vector<Rational>>;

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline QuadraticForm form(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix m;
  for (const auto& r : rows) m.emplace_back(r);
  return QuadraticForm(m);
}

inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

/// Symmetric matrix with entries p/q, |p| <= 9, 1 <= q <= 6.
inline QuadraticForm random_symmetric(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m[i][j] = random_rational(rng, 9, 6);
      m[j][i] = m[i][j];
    }
  }
  return QuadraticForm(m);
}

/// B^T B + shift * I with small integer B and a positive rational shift, so the
/// form is positive definite and hence positive on the simplex.
inline QuadraticForm random_positive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> rows_dist(1, n + 1);
  std::uniform_int_distribution<long> shift_num(1, 8);
  std::uniform_int_distribution<long> shift_den(1, 4);
  const std::size_t k = rows_dist(rng);
  std::vector<std::vector<int>> b(k, std::vector<int>(n));
  for (auto& row : b)
    for (auto& v : row) v = entry(rng);
  const Rational shift = make_rational(shift_num(rng), shift_den(rng));
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t r = 0; r < k; ++r) s += static_cast<long>(b[r][i]) * b[r][j];
      m[i][j] = s;
    }
    m[i][i] += shift;
  }
  return QuadraticForm(m);
}

/// Uniform-ish random simplex point with denominator dividing `den`.
inline SimplexPoint random_simplex_point(std::mt19937_64& rng, std::size_t n, unsigned den = 97) {
  std::vector<unsigned> cuts;
  std::uniform_int_distribution<unsigned> cut(0, den);
  for (std::size_t i = 0; i + 1 < n; ++i) cuts.push_back(cut(rng));
  cuts.push_back(0);
  cuts.push_back(den);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(make_rational(cuts[i + 1] - cuts[i], den));
  return SimplexPoint(c);
}

/// Random form with up to `terms` monomials of the given degree.
inline SparseForm random_sparse(std::mt19937_64& rng, std::size_t n, unsigned degree, int terms) {
  SparseForm g(n, degree);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> e(n, 0);
    for (unsigned d = 0; d < degree; ++d) ++e[pick(rng)];
    g.add_term(ExponentVector(e), random_rational(rng, 9, 4));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Oracles

/// Binary forms as dense coefficient lists c[k] = coefficient of x1^{d-k} x2^k.
/// Multiplying by (x1 + x2) is convolution with [1, 1].
inline std::vector<Rational> convolve_with_ones(const std::vector<Rational>& c) {
  std::vector<Rational> out(c.size() + 1, Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k] += c[k];
    out[k + 1] += c[k];
  }
  return out;
}

/// t^T A t by direct substitution into the matrix.
inline Rational matrix_value(const QuadraticForm& a, const std::vector<Rational>& t) {
  Rational s = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) s += a(i, j) * t[i] * t[j];
  return s;
}

/// Exact min and max of a binary form over the simplex by calculus on
/// s -> f(s, 1 - s) = alpha s^2 + beta s + gamma.
struct Extremes {
  Rational min;
  Rational max;
};

inline Extremes binary_extremes(const QuadraticForm& a) {
  if (a.size() != 2) throw std::invalid_argument("binary_extremes needs n = 2");
  const Rational alpha = a(0, 0) - 2 * a(0, 1) + a(1, 1);
  const Rational beta = 2 * a(0, 1) - 2 * a(1, 1);
  const Rational gamma = a(1, 1);
  auto value = [&](const Rational& s) -> Rational { return alpha * s * s + beta * s + gamma; };
  std::vector<Rational> cand{Rational(0), Rational(1)};
  if (alpha != 0) {
    Rational s = -beta / (2 * alpha);
    if (s > 0 && s < 1) cand.push_back(s);
  }
  Extremes e{value(cand[0]), value(cand[0])};
  for (const auto& s : cand) {
    e.min = std::min(e.min, value(s));
    e.max = std::max(e.max, value(s));
  }
  return e;
}

/// Extremes of f over the grid {alpha / N : |alpha| = N}, exact, plus the
/// certified bound |f(t) - f(nearest grid point)| <= 2 n max|a_ij| / N.
struct GridScan {
  Rational min;
  Rational max;
  Rational error;
};

namespace detail {
inline void grid_rec(std::size_t pos, long remaining, std::vector<long>& alpha,
                     const std::vector<std::vector<Integer>>& scaled, Integer& lo, Integer& hi,
                     bool& first) {
  const std::size_t n = alpha.size();
  if (pos + 1 == n) {
    alpha[pos] = remaining;
    Integer v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alpha[i]) continue;
      Integer row = 0;
      for (std::size_t j = 0; j < n; ++j) row += scaled[i][j] * alpha[j];
      v += row * alpha[i];
    }
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
    return;
  }
  for (long k = 0; k <= remaining; ++k) {
    alpha[pos] = k;
    grid_rec(pos + 1, remaining - k, alpha, scaled, lo, hi, first);
  }
}
}  // namespace detail

inline GridScan grid_scan(const QuadraticForm& a, long denominator) {
  const std::size_t n = a.size();
  Integer common = 1;
  Rational max_abs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a(i, j).get_den_mpz_t());
      max_abs = std::max(max_abs, Rational(abs(a(i, j))));
    }
  }
  std::vector<std::vector<Integer>> scaled(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = a(i, j) * common;
      scaled[i][j] = s.get_num();
    }
  std::vector<long> alpha(n, 0);
  Integer lo, hi;
  bool first = true;
  detail::grid_rec(0, denominator, alpha, scaled, lo, hi, first);
  Rational scale(common * denominator * denominator);
  GridScan g;
  g.min = Rational(lo) / scale;
  g.max = Rational(hi) / scale;
  g.error = 2 * static_cast<long>(n) * max_abs / denominator;
  return g;
}

}  // namespace polya::testing
