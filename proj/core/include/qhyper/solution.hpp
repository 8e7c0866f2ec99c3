#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qhyper/params.hpp"
#include "qhyper/ratfunc.hpp"

namespace qhyper {

// An element of the solution space: a polynomial in the formal variable x
// whose coefficients are rational functions of v = q^x, i.e. sum_j x^j R_j(v).
// Only nonzero coefficients are stored, so the representation is unique;
// x-degree-0 elements form the subspace P spanned by 1, v, ..., v^(N-1)
// over quasi-constants.
class SolutionElement {
 public:
  explicit SolutionElement(CycloContextPtr ctx);  // zero
  static SolutionElement from_ratfunc(RatFuncV r);
  static SolutionElement term(int j, RatFuncV r);  // x^j * r

  const CycloContextPtr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  int x_degree() const;  // -1 for zero
  const std::map<int, RatFuncV>& terms() const { return terms_; }
  RatFuncV coeff(int j) const;

  SolutionElement operator-() const;
  SolutionElement& operator+=(const SolutionElement& o);
  SolutionElement& operator-=(const SolutionElement& o);
  SolutionElement& operator*=(const SolutionElement& o);
  friend SolutionElement operator+(SolutionElement a, const SolutionElement& b) {
    return a += b;
  }
  friend SolutionElement operator-(SolutionElement a, const SolutionElement& b) {
    return a -= b;
  }
  friend SolutionElement operator*(SolutionElement a, const SolutionElement& b) {
    return a *= b;
  }
  SolutionElement& scale(const CycloNum& c);
  SolutionElement& scale_ratfunc(const RatFuncV& r);

  bool operator==(const SolutionElement& o) const;
  bool operator!=(const SolutionElement& o) const { return !(*this == o); }

 private:
  CycloContextPtr ctx_;
  std::map<int, RatFuncV> terms_;

  void set_coeff(int j, RatFuncV r);
  friend SolutionElement shift_D(const SolutionElement& e);
};

// D: x -> x+1 and v -> q*v. A ring homomorphism with D^N = identity on
// x-degree-0 elements.
SolutionElement shift_D(const SolutionElement& e);

// L e = (1 - D)(1 - q^(gamma-1) D) e - v (1 - q^alpha D)(1 - q^beta D) e.
// Never raises the x-degree; maps x-degree-0 elements to x-degree-0 elements.
SolutionElement apply_L(const Params& p, const SolutionElement& e);

// L_k e = 2^k (1 - v) D^2 e - ((1 + q^(gamma-1)) - v (q^alpha + q^beta)) D e.
SolutionElement apply_Lk(const Params& p, long k, const SolutionElement& e);

// The coefficients g_{jk} of e = sum_{j,k} x^j g_{jk}(v^N) v^k, with g_{jk}
// rational in w = v^N. comp[j] has exactly N entries, k = 0..N-1, each a
// rational function in w (carried by the RatFuncV machinery with v read
// as w).
struct QuasiDecomposition {
  int N;
  std::map<int, std::vector<RatFuncV>> comp;
};

QuasiDecomposition decompose_quasi(const SolutionElement& e);

// Inverse of decompose_quasi; substitutes w = v^N and reassembles.
SolutionElement recompose_quasi(const CycloContextPtr& ctx,
                                const QuasiDecomposition& d);

// Numeric value at x = x0 under the principal embedding v = e^(2*pi*i*x0/N).
std::complex<double> evaluate(const SolutionElement& e,
                              const std::complex<double>& x0);

// e1 * D(e2) - D(e1) * e2; vanishes exactly when e2 is a quasi-constant
// multiple of e1.
SolutionElement casoratian(const SolutionElement& e1, const SolutionElement& e2);

}  // namespace qhyper
