#include "polya/simplex_opt.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "polya/linalg.hpp"

namespace polya {

FaceSupport::FaceSupport(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("face support must be nonempty");
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k - 1] >= indices_[k]) {
      throw std::invalid_argument("face support indices must be strictly increasing");
    }
  }
}

FaceSupport FaceSupport::from_mask(std::uint32_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1u) idx.push_back(i);
  }
  return FaceSupport(std::move(idx));
}

NotPositiveOnSimplex::NotPositiveOnSimplex(const std::string& what, SimplexPoint witness,
                                           Rational value)
    : std::domain_error(what), witness_(std::move(witness)), value_(std::move(value)) {}

namespace {

// KKT point of q restricted to the face `support`, if the bordered system is
// nonsingular and its solution is nonnegative.
std::optional<StationaryPoint> solve_face(const QuadraticForm& q, const FaceSupport& support) {
  const auto& s = support.indices();
  const std::size_t k = s.size();
  RationalMatrix system(k + 1, k + 1);
  std::vector<Rational> rhs(k + 1, Rational(0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) system(r, c) = q(s[r], s[c]);
    system(r, k) = -1;
    system(k, r) = 1;
  }
  rhs[k] = 1;

  auto sol = solve_exact(system, rhs);
  if (!sol) return std::nullopt;

  std::vector<Rational> coords(q.size(), Rational(0));
  for (std::size_t r = 0; r < k; ++r) {
    if ((*sol)[r] < 0) return std::nullopt;
    coords[s[r]] = (*sol)[r];
  }
  // t^T A t = sum_{i in S} t_i (A t)_i = mu * sum t_i = mu.
  return StationaryPoint{SimplexPoint(std::move(coords)), (*sol)[k], support};
}

void check_size(const QuadraticForm& q) {
  if (q.size() > kMaxVariables) {
    throw std::invalid_argument("face enumeration supports at most " +
                                std::to_string(kMaxVariables) + " variables, got " +
                                std::to_string(q.size()));
  }
}

template <typename Better>
OptimumResult optimize(const QuadraticForm& q, Better better) {
  const auto candidates = face_stationary_points(q);
  const StationaryPoint* best = &candidates.front();
  for (const auto& c : candidates) {
    if (better(c.value, best->value) || (c.value == best->value && c.point < best->point)) {
      best = &c;
    }
  }
  return OptimumResult{best->value, best->point, candidates.size()};
}

}  // namespace

std::vector<StationaryPoint> face_stationary_points(const QuadraticForm& q) {
  check_size(q);
  const std::size_t n = q.size();
  std::vector<StationaryPoint> out;
  std::set<SimplexPoint> seen;
  const std::uint32_t faces = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= faces; ++mask) {
    const FaceSupport support = FaceSupport::from_mask(mask);
    auto sp = solve_face(q, support);
    if (!sp) continue;
    if (!seen.insert(sp->point).second) continue;
    out.push_back(std::move(*sp));
  }
  return out;
}

OptimumResult min_over_simplex(const QuadraticForm& q) {
  return optimize(q, [](const Rational& a, const Rational& b) { return a < b; });
}

OptimumResult max_over_simplex(const QuadraticForm& q) {
  return optimize(q, [](const Rational& a, const Rational& b) { return a > b; });
}

bool is_positive_on_simplex(const QuadraticForm& q) { return min_over_simplex(q).value > 0; }

OptimumResult require_positive_on_simplex(const QuadraticForm& q, const char* what) {
  OptimumResult m = min_over_simplex(q);
  if (m.value <= 0) {
    throw NotPositiveOnSimplex(std::string(what) + " is not positive on the standard simplex: f(t) = " +
                                   to_string(m.value) + " at t = " + to_string(m.argpoint),
                               m.argpoint, m.value);
  }
  return m;
}

Integer sup_ratio_floor(const QuadraticForm& num, const QuadraticForm& den) {
  if (num.size() != den.size()) throw std::invalid_argument("sup_ratio_floor: size mismatch");
  const OptimumResult den_min = require_positive_on_simplex(den, "denominator");

  auto reaches = [&](const Integer& k) {
    return max_over_simplex(num - Rational(k) * den).value >= 0;
  };

  const SimplexPoint b = SimplexPoint::barycenter(num.size());
  Integer lo = floor(eval(num, b) / eval(den, b));
  Rational num_max = max_over_simplex(num).value;
  if (num_max < 0) num_max = 0;
  Integer hi = floor(num_max / den_min.value) + 1;

  // The bracket must satisfy reaches(lo) && !reaches(hi); each probe below
  // preserves that, so a contradiction here means the predicate is not monotone.
  if (!reaches(lo) || reaches(hi)) {
    throw std::logic_error("sup_ratio_floor: search bracket is inconsistent");
  }
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    if (reaches(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

RatioSupremum sup_ratio(const QuadraticForm& num, const QuadraticForm& den,
                        std::size_t max_iterations, std::size_t max_bits) {
  if (num.size() != den.size()) throw std::invalid_argument("sup_ratio: size mismatch");
  const Rational den_min = require_positive_on_simplex(den, "denominator").value;

  // Start from the best vertex.
  const std::size_t n = num.size();
  SimplexPoint t = SimplexPoint::vertex(n, 0);
  Rational r = num(0, 0) / den(0, 0);
  for (std::size_t i = 1; i < n; ++i) {
    Rational ri = num(i, i) / den(i, i);
    if (ri > r) {
      r = ri;
      t = SimplexPoint::vertex(n, i);
    }
  }

  // F(c) = max_t (num - c den)(t) is strictly decreasing with F(sup) = 0, so
  // F(c) > 0 certifies c < sup and F(c) < 0 certifies c > sup.
  auto gap = [&](const Rational& c) { return max_over_simplex(num - c * den); };

  RatioSupremum res{std::nullopt, r, r, t, 0};
  std::optional<Rational> upper;
  auto certify = [&](const Rational& c, const SimplexPoint& at) {
    res.value = c;
    res.lower = c;
    res.upper = c;
    res.argpoint = at;
    return res;
  };

  for (std::size_t it = 0; it < max_iterations; ++it) {
    res.iterations = it + 1;
    const OptimumResult f = gap(r);
    if (f.value == 0) return certify(r, f.argpoint);

    // F(c) <= F(r) - (c - r) min den for c > r.
    Rational bound = r + f.value / den_min;
    if (!upper || bound < *upper) upper = bound;
    res.lower = r;
    res.upper = *upper;
    res.argpoint = t;

    // The unique rational with small enough denominator in the bracket.
    Rational candidate = simplest_between(r, *upper);
    if (candidate != r) {
      const OptimumResult g = gap(candidate);
      // The maximizer of num - c den at c = sup attains the ratio c.
      if (g.value == 0) return certify(candidate, g.argpoint);
      if (g.value < 0) upper = candidate;
    }

    // Dinkelbach step, then round down to a short rational that keeps all but
    // 1/64 of the progress; every value below the step target is a valid lower bound.
    t = f.argpoint;
    const Rational step = eval(num, t) / eval(den, t);
    Rational slack = (step - r) / 64;
    r = simplest_between(step - slack, step);
    if (mpz_sizeinbase(r.get_den_mpz_t(), 2) > max_bits) break;
  }
  return res;
}

}  // namespace polya
