#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "qhyper/rational.hpp"

namespace qhyper {

// Computes the N-th cyclotomic polynomial by recursive exact division of
// x^N - 1 by Phi_d over the proper divisors d of N. Ascending coefficients,
// monic, integer.
std::vector<Integer> cyclotomic_poly(int N);

// Immutable per-order data shared by every CycloNum of order N: Phi_N, the
// reduction rows x^k mod Phi_N for k up to 2*(deg-1), the reduced powers
// zeta^k for k in 0..N-1, and the complex embeddings of the basis monomials.
// Contexts are cached; get() is thread safe.
class CycloContext {
 public:
  static std::shared_ptr<const CycloContext> get(int N);

  int order() const { return N_; }
  int degree() const { return degree_; }  // Euler totient of N
  const std::vector<Integer>& minimal_poly() const { return phi_; }

  // x^(degree+i) mod Phi_N, i in [0, degree-2]; each row has length degree.
  const std::vector<Integer>& reduction_row(int i) const { return rows_[i]; }
  // zeta^k reduced mod Phi_N, k in [0, N-1].
  const std::vector<Rational>& zeta_row(int k) const { return zpows_[k]; }
  // e^(2*pi*i*j/N) for j in [0, degree-1].
  const std::vector<std::complex<double>>& basis_embedding() const {
    return embed_;
  }

 private:
  explicit CycloContext(int N);

  int N_;
  int degree_;
  std::vector<Integer> phi_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::vector<Rational>> zpows_;
  std::vector<std::complex<double>> embed_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

// An exact element of the cyclotomic field Q(zeta_N), stored as a coefficient
// vector of length deg(Phi_N) reduced mod Phi_N. The representation is
// canonical: equal field elements have identical coefficient vectors. The
// embedding zeta -> e^(2*pi*i/N) realizes q.
class CycloNum {
 public:
  CycloNum(CycloContextPtr ctx, Rational scalar);
  static CycloNum zero(CycloContextPtr ctx);
  static CycloNum one(CycloContextPtr ctx);
  static CycloNum from_coeffs(CycloContextPtr ctx, std::vector<Rational> c);

  const CycloContextPtr& context() const { return ctx_; }
  int order() const { return ctx_->order(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // lies in Q
  // The rational part; valid only if is_rational().
  const Rational& rational_value() const { return c_[0]; }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  CycloNum& scale(const Rational& r);
  friend CycloNum operator*(const Rational& r, CycloNum a) {
    return a.scale(r);
  }

  // Multiplicative inverse via extended Euclid against Phi_N over Q[x].
  CycloNum inverse() const;

  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;

 private:
  CycloContextPtr ctx_;
  std::vector<Rational> c_;  // length ctx_->degree()

  void check_same_order(const CycloNum& o) const;
};

// q^k as an exact CycloNum; k is reduced mod N, so q^0 = q^N = 1.
CycloNum zeta_pow(const CycloContextPtr& ctx, long k);

// q itself, zeta_pow(ctx, 1).
CycloNum q_of(const CycloContextPtr& ctx);

// (x)_n = prod_{j=0}^{n-1} (1 - q^j x). Throws on n < 0. (q)_{N-1} = N.
CycloNum q_pochhammer(const CycloNum& x, long n);

}  // namespace qhyper
