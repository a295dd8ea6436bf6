#include "polya/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace polya {

namespace {

struct Reduced {
  std::vector<std::vector<Integer>> rows;  // upper triangular after elimination
  bool singular = false;
  int sign = 1;
  Integer row_scale = 1;  // product of the per-row integer scalings
};

// Integer scaling of a row by the lcm of its denominators.
std::vector<Integer> integer_row(const RationalMatrix& a, std::size_t i, const Rational* rhs,
                                 Integer& scale) {
  scale = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
  }
  if (rhs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rhs->get_den_mpz_t());

  std::vector<Integer> row;
  row.reserve(a.cols() + 1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    row.push_back(scale / a(i, j).get_den() * a(i, j).get_num());
  }
  if (rhs) row.push_back(scale / rhs->get_den() * rhs->get_num());
  return row;
}

Reduced bareiss(const RationalMatrix& a, const Rational* rhs) {
  const std::size_t n = a.rows();
  Reduced r;
  r.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer scale;
    r.rows.push_back(integer_row(a, i, rhs ? rhs + i : nullptr, scale));
    r.row_scale *= scale;
  }
  auto& m = r.rows;
  const std::size_t width = m.empty() ? 0 : m[0].size();

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) {
      r.singular = true;
      return r;
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      r.sign = -r.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return r;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("solve_exact: matrix is not square");
  if (b.size() != n) throw std::invalid_argument("solve_exact: right-hand side has wrong length");
  if (n == 0) return std::vector<Rational>{};

  const Reduced r = bareiss(a, b.data());
  if (r.singular) return std::nullopt;

  const auto& m = r.rows;
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Rational(1);
  const Reduced r = bareiss(a, nullptr);
  if (r.singular) return Rational(0);
  // The last Bareiss pivot is det of the integer-scaled matrix.
  Rational det(r.rows[n - 1][n - 1] * r.sign);
  det /= Rational(r.row_scale);
  return det;
}

}  // namespace polya
