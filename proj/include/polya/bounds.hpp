#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polya/forms.hpp"
#include "polya/rational.hpp"
#include "polya/simplex_opt.hpp"

namespace polya {

// Upper bounds on the Polya exponent mu(f) of a quadratic form f that is
// positive on the standard simplex, where mu(f) is the least m >= 0 such that
// (x_1 + ... + x_n)^m f has every coefficient strictly positive.
//
// All three bounds throw NotPositiveOnSimplex when f is not positive on the
// simplex.

/// sup_t floor(fhat(t) / f(t)) - 1, fhat the associated form. The raw value
/// can be -1 (fhat < f everywhere); mu(f) = 0 in that case.
Integer bound_new(const QuadraticForm& q);

/// floor(max_i a_ii / min f) - 1.
Integer bound_corollary(const QuadraticForm& q);

/// floor(max_{i,j} a_ij / min f) - 1.
Integer bound_klp(const QuadraticForm& q);

/// Everything `polya bounds` reports for one form.
struct BoundReport {
  Rational min_f;
  SimplexPoint argmin;
  std::size_t candidates_examined = 0;
  Rational diag_max;
  Rational entry_max;
  // The rest are empty unless min_f > 0.
  std::optional<Integer> ratio_floor;
  std::optional<Integer> bound_new;
  std::optional<Integer> bound_corollary;
  std::optional<Integer> bound_klp;

  bool positive() const { return min_f > 0; }
  /// max(bound_new, 0); mu(f) is a nonnegative integer.
  std::optional<Integer> usable_bound_new() const;
};

/// Never throws for valid forms; bounds are left empty when f is not positive.
BoundReport bound_report(const QuadraticForm& q);

enum class ExponentOutcome { Found, CapExceeded, CertifiedInfinite };

const char* to_string(ExponentOutcome outcome);

struct ExponentResult {
  ExponentOutcome outcome;
  /// Found: mu(f). CapExceeded: the cap. CertifiedInfinite: unused (0).
  unsigned exponent = 0;
  /// Exact minimum of f over the simplex; its argpoint is the witness for
  /// CertifiedInfinite.
  OptimumResult minimum;
  /// Found with retention requested: (x_1 + ... + x_n)^m f.
  std::optional<SparseForm> witness;
};

/// 10 * (bound_new + 2), clamped to at least 0. Requires f positive.
unsigned default_exponent_cap(const QuadraticForm& q);

/// Exact Polya exponent by incremental expansion, m = 0, 1, ..., cap.
///
/// Returns CertifiedInfinite without searching when min f <= 0 on the
/// simplex (Polya's theorem), CapExceeded when no m <= cap works.
ExponentResult exact_polya_exponent(const QuadraticForm& q, unsigned cap,
                                    bool retain_witness = false);

/// Right-hand side of the coefficient identity
///   [x^{t(m+2)}] (x_1 + ... + x_n)^m f
///     = multinomial(m+2, t(m+2)) / (m+1) * ((m+2) f(t) - fhat(t)).
/// Throws std::invalid_argument unless t(m+2) is an integer vector.
Rational identity_rhs(const QuadraticForm& q, const SimplexPoint& t, unsigned m);

/// Checks the identity at every exponent vector alpha with |alpha| = m + 2
/// (t = alpha / (m+2)). Also checks that the coefficient is positive
/// wherever f(t) > 0 and m > fhat(t)/f(t) - 2.
bool check_identity(const QuadraticForm& q, unsigned m);

/// lambda^2 x1^2 - 2 kappa lambda x1 x2 + x2^2.
QuadraticForm fkappa_form(const Rational& kappa, const Rational& lambda);

struct FKappaRow {
  Rational lambda;
  Integer bound_new;
  Integer bound_corollary;
  Integer bound_klp;
  /// Exact sup fhat/f - 1 (empty only if the supremum search gave up).
  std::optional<Rational> sup_ratio_minus_one;
  /// (lambda^2 + 2 kappa lambda + 1) / (2 lambda - 2 kappa lambda).
  Rational closed_form_sup_minus_one;
  Rational min_f;
  /// lambda^2 (1 - kappa^2) / (lambda^2 + 2 kappa lambda + 1).
  Rational closed_form_min_f;
  /// bound_new / bound_klp.
  Rational ratio;
  /// (1 + kappa) / (2 lambda).
  Rational predicted_ratio;

  bool sup_matches() const {
    return sup_ratio_minus_one && *sup_ratio_minus_one == closed_form_sup_minus_one;
  }
  bool min_matches() const { return min_f == closed_form_min_f; }
};

/// One row per lambda. Throws std::invalid_argument unless 0 <= kappa < 1 < lambda.
std::vector<FKappaRow> fkappa_report(const Rational& kappa, const std::vector<Rational>& lambdas);

}  // namespace polya
