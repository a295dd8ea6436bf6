#include "polya/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polya {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("exponent vector needs at least one entry");
}

unsigned ExponentVector::total_degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

ExponentVector ExponentVector::incremented(std::size_t i) const {
  ExponentVector out = *this;
  ++out.entries_.at(i);
  return out;
}

std::string to_string(const ExponentVector& beta) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
  os << ')';
  return os.str();
}

namespace {

void compositions(std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
                  std::vector<ExponentVector>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned k = 0; k <= remaining; ++k) {
    cur[pos] = k;
    compositions(pos + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<ExponentVector> exponents_of_degree(std::size_t n, unsigned degree) {
  if (n == 0) throw std::invalid_argument("exponents_of_degree: n must be positive");
  std::vector<ExponentVector> out;
  std::vector<unsigned> cur(n, 0);
  compositions(0, degree, cur, out);
  return out;
}

Integer monomial_count(std::size_t n, unsigned degree) {
  if (n == 0) throw std::invalid_argument("monomial_count: n must be positive");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), degree + n - 1, n - 1);
  return c;
}

Integer multinomial(unsigned d, const ExponentVector& alpha) {
  if (alpha.total_degree() != d) {
    throw std::invalid_argument("multinomial: |alpha| = " + std::to_string(alpha.total_degree()) +
                                " differs from d = " + std::to_string(d));
  }
  // Product of binomials C(alpha_1 + ... + alpha_k, alpha_k).
  Integer result = 1;
  unsigned partial = 0;
  Integer b;
  for (unsigned a : alpha.entries()) {
    partial += a;
    mpz_bin_uiui(b.get_mpz_t(), partial, a);
    result *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// SimplexPoint

SimplexPoint::SimplexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("simplex point needs at least one coordinate");
  Rational sum = 0;
  for (const Rational& c : coords_) {
    if (c < 0) throw std::invalid_argument("simplex point has a negative coordinate");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("simplex point coordinates sum to " + to_string(sum));
}

SimplexPoint SimplexPoint::vertex(std::size_t n, std::size_t i) {
  std::vector<Rational> c(n, Rational(0));
  c.at(i) = 1;
  return SimplexPoint(std::move(c));
}

SimplexPoint SimplexPoint::barycenter(std::size_t n) {
  if (n == 0) throw std::invalid_argument("barycenter: n must be positive");
  return SimplexPoint(std::vector<Rational>(n, make_rational(1, static_cast<unsigned long>(n))));
}

SimplexPoint SimplexPoint::from_lattice(const ExponentVector& alpha) {
  const unsigned d = alpha.total_degree();
  if (d == 0) throw std::invalid_argument("from_lattice: alpha must be nonzero");
  std::vector<Rational> c;
  c.reserve(alpha.size());
  for (unsigned a : alpha.entries()) c.push_back(make_rational(a, d));
  return SimplexPoint(std::move(c));
}

std::string to_string(const SimplexPoint& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += to_string(t[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// QuadraticForm

AsymmetricMatrixError::AsymmetricMatrixError(std::size_t row, std::size_t col)
    : std::invalid_argument("matrix is not symmetric at (" + std::to_string(row + 1) + "," +
                            std::to_string(col + 1) + ")/(" + std::to_string(col + 1) + "," +
                            std::to_string(row + 1) + ")"),
      row_(row),
      col_(col) {}

QuadraticForm::QuadraticForm(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {}

QuadraticForm::QuadraticForm(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
  if (n_ == 0) throw std::invalid_argument("quadratic form needs at least one variable");
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("coefficient matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw AsymmetricMatrixError(i, j);
    }
  }
}

QuadraticForm QuadraticForm::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quadratic form needs at least one variable");
  std::vector<Rational> e(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return QuadraticForm(n, std::move(e));
}

std::vector<std::vector<Rational>> QuadraticForm::rows() const {
  std::vector<std::vector<Rational>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

Rational QuadraticForm::diag_max() const {
  Rational m = (*this)(0, 0);
  for (std::size_t i = 1; i < n_; ++i) m = std::max(m, (*this)(i, i));
  return m;
}

Rational QuadraticForm::entry_max() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("quadratic forms of different sizes");
  std::vector<Rational> e(a.entries_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries_[k] + b.entries_[k];
  return QuadraticForm(a.n_, std::move(e));
}

QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("quadratic forms of different sizes");
  std::vector<Rational> e(a.entries_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.entries_[k] - b.entries_[k];
  return QuadraticForm(a.n_, std::move(e));
}

QuadraticForm operator*(const Rational& c, const QuadraticForm& q) {
  std::vector<Rational> e(q.entries_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = c * q.entries_[k];
  return QuadraticForm(q.n_, std::move(e));
}

// ---------------------------------------------------------------------------
// SparseForm

SparseForm::SparseForm(std::size_t n, unsigned degree) : n_(n), degree_(degree) {
  if (n == 0) throw std::invalid_argument("form needs at least one variable");
}

SparseForm SparseForm::constant(std::size_t n, const Rational& c) {
  SparseForm g(n, 0);
  g.add_term(ExponentVector(std::vector<unsigned>(n, 0)), c);
  return g;
}

void SparseForm::check_key(const ExponentVector& beta) const {
  if (beta.size() != n_) {
    throw std::invalid_argument("exponent vector " + polya::to_string(beta) + " has length " +
                                std::to_string(beta.size()) + ", form has " + std::to_string(n_) +
                                " variables");
  }
  if (beta.total_degree() != degree_) {
    throw std::invalid_argument("exponent vector " + polya::to_string(beta) + " has degree " +
                                std::to_string(beta.total_degree()) + ", form has degree " +
                                std::to_string(degree_));
  }
}

void SparseForm::add_term(const ExponentVector& beta, const Rational& c) {
  check_key(beta);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparseForm::coefficient(const ExponentVector& alpha) const {
  check_key(alpha);
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

SparseForm operator+(const SparseForm& a, const SparseForm& b) {
  if (a.n_ != b.n_ || a.degree_ != b.degree_) {
    throw std::invalid_argument("cannot add forms of different shape");
  }
  SparseForm out = a;
  for (const auto& [beta, c] : b.terms_) out.add_term(beta, c);
  return out;
}

std::string to_string(const SparseForm& g) {
  if (g.is_zero()) return "0";
  std::string s;
  // Descending lexicographic order prints x1^l first.
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_string(it->second);
    for (std::size_t i = 0; i < g.variables(); ++i) {
      const unsigned e = it->first[i];
      if (e == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Operations

SparseForm quadratic_to_form(const QuadraticForm& q) {
  const std::size_t n = q.size();
  SparseForm g(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i] = 2;
    g.add_term(ExponentVector(e), q(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<unsigned> f(n, 0);
      f[i] = 1;
      f[j] = 1;
      Rational twice = 2 * q(i, j);
      g.add_term(ExponentVector(std::move(f)), twice);
    }
  }
  return g;
}

namespace {

Rational power(const Rational& base, unsigned e) {
  Rational r = 1;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

}  // namespace

Rational eval(const SparseForm& g, const SimplexPoint& t) {
  if (g.variables() != t.size()) {
    throw std::invalid_argument("eval: form has " + std::to_string(g.variables()) +
                                " variables, point has " + std::to_string(t.size()));
  }
  Rational sum = 0;
  for (const auto& [beta, c] : g.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < beta.size() && term != 0; ++i) {
      if (beta[i] > 0) term *= power(t[i], beta[i]);
    }
    sum += term;
  }
  return sum;
}

Rational eval(const QuadraticForm& q, const SimplexPoint& t) {
  const std::size_t n = q.size();
  if (n != t.size()) {
    throw std::invalid_argument("eval: form has " + std::to_string(n) + " variables, point has " +
                                std::to_string(t.size()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += q(i, j) * t[j];
    sum += t[i] * row;
  }
  return sum;
}

QuadraticForm associated_form(const QuadraticForm& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (q(i, i) + q(j, j)) / 2;
  }
  return QuadraticForm(rows);
}

SparseForm multiply_by_simplex_sum(const SparseForm& g) {
  SparseForm out(g.variables(), g.degree() + 1);
  for (const auto& [beta, c] : g.terms()) {
    for (std::size_t i = 0; i < g.variables(); ++i) out.add_term(beta.incremented(i), c);
  }
  return out;
}

SparseForm expand(const SparseForm& g, unsigned m) {
  SparseForm out = g;
  for (unsigned k = 0; k < m; ++k) out = multiply_by_simplex_sum(out);
  return out;
}

bool strictly_positive_coefficients(const SparseForm& g) {
  if (Integer(static_cast<unsigned long>(g.terms().size())) !=
      monomial_count(g.variables(), g.degree())) {
    return false;
  }
  return std::all_of(g.terms().begin(), g.terms().end(),
                     [](const auto& term) { return term.second > 0; });
}

}  // namespace polya
