#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

/// Dense row-major rational matrix. Only what the KKT solves need.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Solves A x = b exactly; std::nullopt when A is singular.
///
/// Each row of [A | b] is scaled to integers, then reduced with Bareiss
/// fraction-free elimination (pivot = first row with a nonzero entry, so the
/// only pivot decision is an exact zero test). Back-substitution happens over
/// the rationals.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a, std::span<const Rational> b);

/// det(A) via the same fraction-free elimination.
Rational determinant(const RationalMatrix& a);

}  // namespace polya
