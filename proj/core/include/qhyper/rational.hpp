#pragma once

#include <gmpxx.h>

#include <string>

#include "qhyper/error.hpp"

namespace qhyper {

// Exact scalar arithmetic is delegated to GMP. mpq_class keeps values
// canonical (gcd(|num|, den) = 1, den >= 1) provided inputs are canonical,
// which the helpers below guarantee.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// "p/q" with explicit sign on p; integers keep the "/1".
inline std::string to_fraction_string(const Rational& r) {
  std::string num = r.get_num().get_str();
  if (num[0] != '-') num.insert(num.begin(), '+');
  return num + "/" + r.get_den().get_str();
}

inline Rational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw InvalidParameterError("malformed fraction: " + s);
  std::string head = s.substr(0, slash);
  if (!head.empty() && head[0] == '+') head.erase(head.begin());
  try {
    Integer num(head);
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidParameterError("malformed fraction: " + s);
  }
}

}  // namespace qhyper
