#pragma once

#include <complex>
#include <vector>

#include "qhyper/params.hpp"

namespace qhyper {

// The Barnes integrand reduced to elementary factors:
// Phi(z) = q^(xz) * prod_{j=0}^{N} (1 - q^(z+j))^(-e_j), obtained by
// telescoping the double-sine ratios across integer gaps. All double-sine
// factors cancel; only the exponent table remains.
struct FactorList {
  Params params;
  std::vector<int> exponents;  // index j in 0..N

  int exponent_sum() const;
};

// Telescopes <z+1+N>/<z+alpha> across [alpha, N] and <z+gamma>/<z+beta>
// across [beta, gamma) (or its inverse when gamma < beta).
FactorList reduce_integrand(const Params& p);

// Pole order of Phi at z = k for k in 0..N-1; a non-positive entry means
// Phi is regular (0) or vanishes (< 0) there.
std::vector<int> pole_orders(const FactorList& f);

// Phi(z) with q^(xz) = e^(2 pi i x z / N). Throws EvaluationAtPoleError when
// z sits (numerically) on a pole.
std::complex<double> integrand_eval(const FactorList& f,
                                    const std::complex<double>& x,
                                    const std::complex<double>& z);

}  // namespace qhyper
