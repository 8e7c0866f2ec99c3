#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "qhyper/cyclo.hpp"

using namespace qhyper;

namespace {

std::vector<Integer> coeffs(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("cyclotomic polynomials, small orders") {
  CHECK_THROWS_AS(cyclotomic_poly(1), InvalidParameterError);
  CHECK(cyclotomic_poly(2) == coeffs({1, 1}));
  CHECK(cyclotomic_poly(3) == coeffs({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == coeffs({1, 0, 1}));
  CHECK(cyclotomic_poly(5) == coeffs({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(6) == coeffs({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == coeffs({1, 0, -1, 0, 1}));
}

TEST_CASE("context degree equals Euler phi") {
  CHECK(CycloContext::get(2)->degree() == 1);
  CHECK(CycloContext::get(12)->degree() == 4);
  CHECK(CycloContext::get(7)->degree() == 6);
  CHECK(CycloContext::get(105)->degree() == 48);
}

TEST_CASE("zeta powers satisfy the defining relations") {
  for (int n : {2, 3, 4, 5, 6, 8, 12}) {
    auto ctx = CycloContext::get(n);
    CycloNum z = zeta_pow(ctx, 1);
    CycloNum acc = CycloNum::one(ctx);
    for (int k = 0; k < n; ++k) {
      CHECK(acc == zeta_pow(ctx, k));
      acc *= z;
    }
    CHECK(acc == CycloNum::one(ctx));
    CHECK(zeta_pow(ctx, -1) == zeta_pow(ctx, n - 1));
    CHECK(zeta_pow(ctx, 3 * n + 2) == zeta_pow(ctx, 2));
  }
}

TEST_CASE("field arithmetic: inverse and division") {
  auto ctx = CycloContext::get(4);
  CycloNum i = zeta_pow(ctx, 1);  // zeta_4
  CycloNum one = CycloNum::one(ctx);
  // 1/(1 - i) = (1 + i)/2
  CycloNum inv = (one - i).inverse();
  CycloNum expect = (one + i).scale(Rational(1, 2));
  CHECK(inv == expect);
  CHECK((one - i) * inv == one);
}

TEST_CASE("field axioms on a sample of elements") {
  auto ctx = CycloContext::get(9);
  std::vector<CycloNum> xs;
  // Rational(k+1, 3) is deliberately left uncanonicalized (e.g. 3/3) to
  // exercise the normalization at the CycloNum boundary.
  for (int k = 0; k < 4; ++k)
    xs.push_back(zeta_pow(ctx, k) + zeta_pow(ctx, 2 * k + 1).scale(Rational(k + 1, 3)));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : xs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
      if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("to_complex is a ring homomorphism") {
  auto ctx = CycloContext::get(7);
  CycloNum a = zeta_pow(ctx, 2) + zeta_pow(ctx, 5).scale(Rational(3, 2));
  CycloNum b = CycloNum::one(ctx) - zeta_pow(ctx, 3);
  auto ca = a.to_complex(), cb = b.to_complex();
  CHECK(std::abs((a + b).to_complex() - (ca + cb)) < 1e-12);
  CHECK(std::abs((a * b).to_complex() - (ca * cb)) < 1e-12);
  CHECK(std::abs(zeta_pow(ctx, 1).to_complex() -
                 std::polar(1.0, 2.0 * 3.14159265358979323846 / 7.0)) < 1e-12);
}

TEST_CASE("rational detection") {
  auto ctx = CycloContext::get(5);
  CycloNum r = CycloNum(ctx, Rational(7, 3));
  CHECK(r.is_rational());
  CHECK(r.rational_value() == Rational(7, 3));
  // 1 + zeta + zeta^2 + zeta^3 + zeta^4 = 0: rational through cancellation.
  CycloNum s = CycloNum::zero(ctx);
  for (int k = 0; k < 5; ++k) s += zeta_pow(ctx, k);
  CHECK(s.is_zero());
  CHECK(s.is_rational());
  CHECK_FALSE(zeta_pow(ctx, 1).is_rational());
}

TEST_CASE("q-Pochhammer identity: (q)_{N-1} = N at a primitive root") {
  for (int n = 2; n <= 50; ++n) {
    auto ctx = CycloContext::get(n);
    CycloNum p = q_pochhammer(q_of(ctx), n - 1);
    CHECK(p.is_rational());
    CHECK(p.rational_value() == Rational(n));
  }
}

TEST_CASE("division by zero throws") {
  auto ctx = CycloContext::get(6);
  CHECK_THROWS_AS(CycloNum::one(ctx) / CycloNum::zero(ctx),
                  DivisionByZeroError);
  CHECK_THROWS_AS(CycloNum::zero(ctx).inverse(), DivisionByZeroError);
}

TEST_CASE("mixed-order arithmetic is rejected") {
  CycloNum a = CycloNum::one(CycloContext::get(4));
  CycloNum b = CycloNum::one(CycloContext::get(5));
  CHECK_THROWS_AS(a + b, IncompatibleOrdersError);
}

TEST_CASE("fraction strings round-trip") {
  CHECK(to_fraction_string(Rational(-3, 7)) == "-3/7");
  CHECK(to_fraction_string(Rational(5)) == "+5/1");
  CHECK(parse_fraction("-3/7") == Rational(-3, 7));
  CHECK(parse_fraction("+5/1") == Rational(5));
  CHECK_THROWS_AS(parse_fraction("4"), InvalidParameterError);
}
