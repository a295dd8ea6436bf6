#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polya/forms.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Largest variable count accepted by face enumeration (2^n - 1 faces).
inline constexpr std::size_t kMaxVariables = 16;

/// Support S of a face of the simplex: {t : t_i = 0 for i not in S}.
class FaceSupport {
 public:
  /// Throws std::invalid_argument unless indices is nonempty and strictly increasing.
  explicit FaceSupport(std::vector<std::size_t> indices);

  /// The support encoded by the bits of mask (bit i set <=> i in S).
  static FaceSupport from_mask(std::uint32_t mask);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  std::vector<std::size_t> indices_;
};

/// A KKT point on the face with the given support: A_S t_S = value * 1.
struct StationaryPoint {
  SimplexPoint point;
  Rational value;
  FaceSupport support;
};

struct OptimumResult {
  Rational value;
  SimplexPoint argpoint;
  std::size_t candidates_examined = 0;
};

/// Thrown when an operation needs f > 0 on the simplex and it is not.
class NotPositiveOnSimplex : public std::domain_error {
 public:
  NotPositiveOnSimplex(const std::string& what, SimplexPoint witness, Rational value);
  /// A point t with f(t) <= 0 (the exact minimizer).
  const SimplexPoint& witness() const { return witness_; }
  const Rational& value() const { return value_; }

 private:
  SimplexPoint witness_;
  Rational value_;
};

/// All KKT stationary points over every nonempty face, deduplicated by point.
///
/// For each support S the bordered system  A_S t_S - mu 1 = 0,  1^T t_S = 1
/// is solved exactly; singular systems and solutions with a negative
/// coordinate are dropped. The n vertices are always present. Throws
/// std::invalid_argument if the form has more than kMaxVariables variables.
std::vector<StationaryPoint> face_stationary_points(const QuadraticForm& q);

/// Exact minimum of t^T A t over the simplex. Ties go to the
/// lexicographically smallest point.
OptimumResult min_over_simplex(const QuadraticForm& q);

/// Exact maximum of t^T A t over the simplex, same tie-break.
OptimumResult max_over_simplex(const QuadraticForm& q);

bool is_positive_on_simplex(const QuadraticForm& q);

/// Returns min_over_simplex(q), or throws NotPositiveOnSimplex naming the minimizer.
OptimumResult require_positive_on_simplex(const QuadraticForm& q, const char* what = "form");

/// floor(sup_t num(t) / den(t)) for den > 0 on the simplex.
///
/// The largest integer k with max_t (num - k den)(t) >= 0, located by
/// binary search between the barycenter ratio and
/// floor(max(0, max num) / min den) + 1. Each probe is one exact
/// maximization. Throws NotPositiveOnSimplex if den is not positive.
Integer sup_ratio_floor(const QuadraticForm& num, const QuadraticForm& den);

/// Result of the exact ratio-supremum search.
struct RatioSupremum {
  /// The certified supremum, or nullopt when the search budget ran out
  /// (the supremum is then irrational or has a very large denominator).
  std::optional<Rational> value;
  /// Certified bracket lower <= sup <= upper.
  Rational lower;
  Rational upper;
  /// A point whose ratio is at least `lower` (attains it when certified).
  SimplexPoint argpoint;
  std::size_t iterations = 0;
};

/// sup_t num(t) / den(t) for den > 0 on the simplex, exactly when rational.
///
/// Dinkelbach iteration r <- num(t*)/den(t*) with t* maximizing num - r den,
/// each new r rounded down to a short rational to keep sizes in check.
/// A candidate c is certified when max_t (num - c den)(t) == 0, which holds
/// for exactly one c. Each step also tries the simplest rational inside the
/// current bracket, so rational suprema are recovered after finitely many
/// steps. The search gives up after max_iterations steps or once the
/// iterate's denominator exceeds max_bits bits. Throws NotPositiveOnSimplex
/// if den is not positive.
RatioSupremum sup_ratio(const QuadraticForm& num, const QuadraticForm& den,
                        std::size_t max_iterations = 256, std::size_t max_bits = 4096);

}  // namespace polya
