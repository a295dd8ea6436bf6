#include "polya/rational.hpp"

#include <regex>
#include <stdexcept>
#include <vector>

namespace polya {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  static const std::regex grammar(R"(-?[0-9]+(/[1-9][0-9]*)?)");
  const std::string s(text);
  if (!std::regex_match(s, grammar)) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) {
    Rational neg_lo = -hi;
    Rational neg_hi = -lo;
    Rational r = simplest_between(neg_lo, neg_hi);
    return -r;
  }
  // 0 < lo <= hi: build the continued fraction shared by both endpoints.
  std::vector<Integer> terms;
  Rational a = lo;
  Rational b = hi;
  for (;;) {
    const Integer whole = floor(a);
    if (Rational(whole) == a) {
      terms.push_back(whole);
      break;
    }
    if (Rational(whole + 1) <= b) {
      terms.push_back(whole + 1);
      break;
    }
    terms.push_back(whole);
    Rational next_a = 1 / (b - whole);
    Rational next_b = 1 / (a - whole);
    a = std::move(next_a);
    b = std::move(next_b);
  }
  Rational r(terms.back());
  for (std::size_t k = terms.size() - 1; k-- > 0;) {
    r = 1 / r;
    r += terms[k];
  }
  return r;
}

}  // namespace polya
