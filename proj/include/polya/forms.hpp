#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

/// Exponent vector beta = (beta_1, ..., beta_n) of a monomial x^beta.
///
/// Ordered lexicographically, which fixes the iteration order of every
/// SparseForm and therefore the serialized output.
class ExponentVector {
 public:
  /// Throws std::invalid_argument if entries is empty.
  explicit ExponentVector(std::vector<unsigned> entries);

  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  std::span<const unsigned> entries() const { return entries_; }

  /// |beta| = beta_1 + ... + beta_n.
  unsigned total_degree() const;

  /// beta + e_i.
  ExponentVector incremented(std::size_t i) const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<unsigned> entries_;
};

std::string to_string(const ExponentVector& beta);

/// Every exponent vector of length n with total degree d, in lexicographic order.
std::vector<ExponentVector> exponents_of_degree(std::size_t n, unsigned degree);

/// Number of monomials of degree d in n variables, C(d + n - 1, n - 1).
Integer monomial_count(std::size_t n, unsigned degree);

/// d! / (alpha_1! ... alpha_n!). Throws std::invalid_argument if |alpha| != d.
Integer multinomial(unsigned d, const ExponentVector& alpha);

/// Exact point of the standard simplex: t_i >= 0 and sum t_i = 1.
class SimplexPoint {
 public:
  /// Throws std::invalid_argument unless coords is a nonempty point of the simplex.
  explicit SimplexPoint(std::vector<Rational> coords);

  static SimplexPoint vertex(std::size_t n, std::size_t i);
  static SimplexPoint barycenter(std::size_t n);
  /// alpha / |alpha|. Throws if |alpha| == 0.
  static SimplexPoint from_lattice(const ExponentVector& alpha);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const SimplexPoint& a, const SimplexPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const SimplexPoint& a, const SimplexPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const SimplexPoint& t);

/// Thrown for matrices that violate a_ij = a_ji; row/col are 0-based.
class AsymmetricMatrixError : public std::invalid_argument {
 public:
  AsymmetricMatrixError(std::size_t row, std::size_t col);
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// f = sum_{i,j} a_ij x_i x_j with a symmetric rational coefficient matrix.
class QuadraticForm {
 public:
  /// Throws std::invalid_argument for empty or non-square input and
  /// AsymmetricMatrixError for the first (i < j) with a_ij != a_ji.
  explicit QuadraticForm(const std::vector<std::vector<Rational>>& rows);

  static QuadraticForm identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::vector<std::vector<Rational>> rows() const;

  /// M(f) = max_i a_ii.
  Rational diag_max() const;
  /// max_{i,j} a_ij.
  Rational entry_max() const;

  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b);
  friend QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b);
  friend QuadraticForm operator*(const Rational& c, const QuadraticForm& q);
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  QuadraticForm(std::size_t n, std::vector<Rational> entries);

  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Homogeneous polynomial g = sum_{|beta| = degree} b_beta x^beta.
///
/// Zero coefficients are never stored; an absent monomial has coefficient 0.
class SparseForm {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  /// The zero form. Throws std::invalid_argument if n == 0.
  SparseForm(std::size_t n, unsigned degree);

  /// The constant form c (degree 0).
  static SparseForm constant(std::size_t n, const Rational& c);

  std::size_t variables() const { return n_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of x^beta. Throws on length or degree mismatch.
  void add_term(const ExponentVector& beta, const Rational& c);

  /// [x^alpha] g. Throws std::invalid_argument on length or degree mismatch.
  Rational coefficient(const ExponentVector& alpha) const;

  friend SparseForm operator+(const SparseForm& a, const SparseForm& b);
  friend bool operator==(const SparseForm& a, const SparseForm& b) = default;

 private:
  void check_key(const ExponentVector& beta) const;

  std::size_t n_;
  unsigned degree_;
  Terms terms_;
};

std::string to_string(const SparseForm& g);

/// Degree-2 form with a_ii on x_i^2 and 2 a_ij on x_i x_j (i < j).
SparseForm quadratic_to_form(const QuadraticForm& q);

/// sum_beta b_beta t^beta. Throws std::invalid_argument on dimension mismatch.
Rational eval(const SparseForm& g, const SimplexPoint& t);

/// t^T A t. Throws std::invalid_argument on dimension mismatch.
Rational eval(const QuadraticForm& q, const SimplexPoint& t);

/// The associated form with entries (a_ii + a_jj) / 2.
QuadraticForm associated_form(const QuadraticForm& q);

/// (x_1 + ... + x_n) g.
SparseForm multiply_by_simplex_sum(const SparseForm& g);

/// (x_1 + ... + x_n)^m g, by m successive single multiplications.
SparseForm expand(const SparseForm& g, unsigned m);

/// True iff every one of the C(l + n - 1, n - 1) monomials of degree l has a
/// coefficient > 0.
bool strictly_positive_coefficients(const SparseForm& g);

}  // namespace polya
