#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qhyper/cyclo.hpp"

namespace qhyper {

// A polynomial in the formal variable v (standing for q^x) with CycloNum
// coefficients, ascending by degree. The zero polynomial stores no
// coefficients; otherwise the leading coefficient is nonzero.
class PolyV {
 public:
  explicit PolyV(CycloContextPtr ctx) : ctx_(std::move(ctx)) {}
  PolyV(CycloContextPtr ctx, std::vector<CycloNum> coeffs);

  static PolyV constant(const CycloNum& c);
  static PolyV monomial(const CycloContextPtr& ctx, int k, const CycloNum& c);
  static PolyV monomial(const CycloContextPtr& ctx, int k);  // v^k

  const CycloContextPtr& context() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycloNum>& coeffs() const { return c_; }
  // Coefficient of v^k, zero beyond the degree.
  CycloNum coeff(int k) const;

  PolyV operator-() const;
  PolyV& operator+=(const PolyV& o);
  PolyV& operator-=(const PolyV& o);
  PolyV& operator*=(const PolyV& o);
  friend PolyV operator+(PolyV a, const PolyV& b) { return a += b; }
  friend PolyV operator-(PolyV a, const PolyV& b) { return a -= b; }
  friend PolyV operator*(PolyV a, const PolyV& b) { return a *= b; }
  PolyV& scale(const CycloNum& c);

  bool operator==(const PolyV& o) const;
  bool operator!=(const PolyV& o) const { return !(*this == o); }

  // Euclidean division; den must be nonzero.
  static std::pair<PolyV, PolyV> divmod(const PolyV& num, const PolyV& den);
  // Monic greatest common divisor; gcd(0, p) is monic p.
  static PolyV gcd(PolyV a, PolyV b);

  PolyV monic() const;  // divide by the leading coefficient
  // Substitute v -> q^s * v (coefficient of v^k picks up q^(s*k)).
  PolyV substitute_qshift(long s) const;
  std::complex<double> eval(const std::complex<double>& v0) const;

 private:
  CycloContextPtr ctx_;
  std::vector<CycloNum> c_;

  void trim();
};

// An exact rational function in v over Q(zeta_N), kept canonical: the
// denominator is monic, gcd(numerator, denominator) = 1, and zero is
// (0, 1). Canonical form makes equality a coefficient comparison.
class RatFuncV {
 public:
  explicit RatFuncV(CycloContextPtr ctx);  // zero
  RatFuncV(PolyV num, PolyV den);
  static RatFuncV from_poly(PolyV p);
  static RatFuncV constant(const CycloNum& c);
  static RatFuncV monomial(const CycloContextPtr& ctx, int k);  // v^k

  const CycloContextPtr& context() const { return num_.context(); }
  const PolyV& num() const { return num_; }
  const PolyV& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // The numerator of a polynomial value; valid only if is_polynomial().
  const PolyV& poly() const { return num_; }

  RatFuncV operator-() const;
  RatFuncV& operator+=(const RatFuncV& o);
  RatFuncV& operator-=(const RatFuncV& o);
  RatFuncV& operator*=(const RatFuncV& o);
  RatFuncV& operator/=(const RatFuncV& o);
  friend RatFuncV operator+(RatFuncV a, const RatFuncV& b) { return a += b; }
  friend RatFuncV operator-(RatFuncV a, const RatFuncV& b) { return a -= b; }
  friend RatFuncV operator*(RatFuncV a, const RatFuncV& b) { return a *= b; }
  friend RatFuncV operator/(RatFuncV a, const RatFuncV& b) { return a /= b; }
  RatFuncV& scale(const CycloNum& c);

  bool operator==(const RatFuncV& o) const;
  bool operator!=(const RatFuncV& o) const { return !(*this == o); }

  RatFuncV substitute_qshift(long s) const;
  // Throws EvaluationAtPoleError when v0 is (numerically) a denominator root.
  std::complex<double> eval(const std::complex<double>& v0) const;

 private:
  PolyV num_;
  PolyV den_;

  void normalize();
};

}  // namespace qhyper
