#include "polya/bounds.hpp"

#include <stdexcept>
#include <string>

namespace polya {

Integer bound_new(const QuadraticForm& q) {
  return sup_ratio_floor(associated_form(q), q) - 1;
}

Integer bound_corollary(const QuadraticForm& q) {
  const Rational min_f = require_positive_on_simplex(q).value;
  return floor(q.diag_max() / min_f) - 1;
}

Integer bound_klp(const QuadraticForm& q) {
  const Rational min_f = require_positive_on_simplex(q).value;
  return floor(q.entry_max() / min_f) - 1;
}

std::optional<Integer> BoundReport::usable_bound_new() const {
  if (!bound_new) return std::nullopt;
  return *bound_new < 0 ? Integer(0) : *bound_new;
}

BoundReport bound_report(const QuadraticForm& q) {
  const OptimumResult min = min_over_simplex(q);
  BoundReport r{min.value, min.argpoint, min.candidates_examined, q.diag_max(), q.entry_max(),
                std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (!r.positive()) return r;
  r.ratio_floor = sup_ratio_floor(associated_form(q), q);
  r.bound_new = *r.ratio_floor - 1;
  r.bound_corollary = floor(r.diag_max / r.min_f) - 1;
  r.bound_klp = floor(r.entry_max / r.min_f) - 1;
  return r;
}

const char* to_string(ExponentOutcome outcome) {
  switch (outcome) {
    case ExponentOutcome::Found:
      return "found";
    case ExponentOutcome::CapExceeded:
      return "cap_exceeded";
    case ExponentOutcome::CertifiedInfinite:
      return "certified_infinite";
  }
  return "unknown";
}

unsigned default_exponent_cap(const QuadraticForm& q) {
  Integer b = bound_new(q);
  if (b < 0) b = 0;
  Integer cap = 10 * (b + 2);
  if (!cap.fits_uint_p()) throw std::overflow_error("default exponent cap does not fit in 32 bits");
  return static_cast<unsigned>(cap.get_ui());
}

ExponentResult exact_polya_exponent(const QuadraticForm& q, unsigned cap, bool retain_witness) {
  OptimumResult min = min_over_simplex(q);
  if (min.value <= 0) {
    return ExponentResult{ExponentOutcome::CertifiedInfinite, 0, std::move(min), std::nullopt};
  }
  SparseForm g = quadratic_to_form(q);
  for (unsigned m = 0;; ++m) {
    if (strictly_positive_coefficients(g)) {
      ExponentResult r{ExponentOutcome::Found, m, std::move(min), std::nullopt};
      if (retain_witness) r.witness = std::move(g);
      return r;
    }
    if (m == cap) break;
    g = multiply_by_simplex_sum(g);
  }
  return ExponentResult{ExponentOutcome::CapExceeded, cap, std::move(min), std::nullopt};
}

namespace {

ExponentVector lattice_exponent(const SimplexPoint& t, unsigned m) {
  std::vector<unsigned> alpha;
  alpha.reserve(t.size());
  for (const Rational& ti : t.coords()) {
    Rational scaled = ti * (m + 2);
    if (scaled.get_den() != 1) {
      throw std::invalid_argument("identity_rhs: t * (m + 2) is not an integer vector at t = " +
                                  to_string(t) + ", m = " + std::to_string(m));
    }
    alpha.push_back(static_cast<unsigned>(scaled.get_num().get_ui()));
  }
  return ExponentVector(std::move(alpha));
}

Rational rhs_value(const Rational& f_t, const Rational& fhat_t, const ExponentVector& alpha,
                   unsigned m) {
  Rational c(multinomial(m + 2, alpha));
  c /= m + 1;
  return c * ((m + 2) * f_t - fhat_t);
}

}  // namespace

Rational identity_rhs(const QuadraticForm& q, const SimplexPoint& t, unsigned m) {
  if (q.size() != t.size()) throw std::invalid_argument("identity_rhs: dimension mismatch");
  const ExponentVector alpha = lattice_exponent(t, m);
  return rhs_value(eval(q, t), eval(associated_form(q), t), alpha, m);
}

bool check_identity(const QuadraticForm& q, unsigned m) {
  const QuadraticForm fhat = associated_form(q);
  const SparseForm expanded = expand(quadratic_to_form(q), m);
  for (const ExponentVector& alpha : exponents_of_degree(q.size(), m + 2)) {
    const SimplexPoint t = SimplexPoint::from_lattice(alpha);
    const Rational f_t = eval(q, t);
    const Rational fhat_t = eval(fhat, t);
    const Rational lhs = expanded.coefficient(alpha);
    if (lhs != rhs_value(f_t, fhat_t, alpha, m)) return false;
    // Sufficient condition for a positive coefficient: m + 2 > fhat(t) / f(t).
    if (f_t > 0 && (m + 2) * f_t > fhat_t && lhs <= 0) return false;
  }
  return true;
}

QuadraticForm fkappa_form(const Rational& kappa, const Rational& lambda) {
  Rational off = -kappa * lambda;
  Rational lead = lambda * lambda;
  return QuadraticForm({{lead, off}, {off, Rational(1)}});
}

std::vector<FKappaRow> fkappa_report(const Rational& kappa, const std::vector<Rational>& lambdas) {
  if (kappa < 0 || kappa >= 1) {
    throw std::invalid_argument("kappa must satisfy 0 <= kappa < 1, got " + to_string(kappa));
  }
  for (const Rational& lambda : lambdas) {
    if (lambda <= 1) throw std::invalid_argument("lambda must exceed 1, got " + to_string(lambda));
  }

  std::vector<FKappaRow> rows;
  rows.reserve(lambdas.size());
  for (const Rational& lambda : lambdas) {
    const QuadraticForm f = fkappa_form(kappa, lambda);
    const BoundReport rep = bound_report(f);
    const RatioSupremum sup = sup_ratio(associated_form(f), f);

    const Rational l2 = lambda * lambda;
    const Rational spread = l2 + 2 * kappa * lambda + 1;

    FKappaRow row;
    row.lambda = lambda;
    row.bound_new = *rep.bound_new;
    row.bound_corollary = *rep.bound_corollary;
    row.bound_klp = *rep.bound_klp;
    if (sup.value) row.sup_ratio_minus_one = *sup.value - 1;
    row.closed_form_sup_minus_one = spread / (2 * lambda - 2 * kappa * lambda);
    row.min_f = rep.min_f;
    row.closed_form_min_f = l2 * (1 - kappa * kappa) / spread;
    if (row.bound_klp == 0) throw std::logic_error("fkappa_report: bound_klp is zero");
    row.ratio = make_rational(row.bound_new, row.bound_klp);
    row.predicted_ratio = (1 + kappa) / (2 * lambda);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace polya
