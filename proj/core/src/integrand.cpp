#include "qhyper/integrand.hpp"

#include <cmath>
#include <numbers>

#include "qhyper/error.hpp"

namespace qhyper {

int FactorList::exponent_sum() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

FactorList reduce_integrand(const Params& p) {
  const int N = p.N();
  FactorList f{p, std::vector<int>(N + 1, 0)};
  // <z+1+N>/<z+alpha> = prod_{j=alpha}^{N} 1/(1 - q^(z+j))
  for (int j = p.alpha(); j <= N; ++j) f.exponents[j] += 1;
  // <z+gamma>/<z+beta>: telescopes up when gamma > beta, down when gamma < beta.
  if (p.gamma() > p.beta()) {
    for (int j = p.beta(); j <= p.gamma() - 1; ++j) f.exponents[j] += 1;
  } else if (p.gamma() < p.beta()) {
    for (int j = p.gamma(); j <= p.beta() - 1; ++j) f.exponents[j] -= 1;
  }
  return f;
}

std::vector<int> pole_orders(const FactorList& f) {
  const int N = f.params.N();
  std::vector<int> orders(N, 0);
  for (int k = 0; k < N; ++k) {
    for (int j = 0; j <= N; ++j) {
      if ((j + k) % N == 0) orders[k] += f.exponents[j];
    }
  }
  return orders;
}

std::complex<double> integrand_eval(const FactorList& f,
                                    const std::complex<double>& x,
                                    const std::complex<double>& z) {
  const int N = f.params.N();
  const std::complex<double> i2piN(0.0, 2.0 * std::numbers::pi / N);
  std::complex<double> acc = std::exp(i2piN * x * z);
  for (int j = 0; j <= N; ++j) {
    const int e = f.exponents[j];
    if (e == 0) continue;
    const std::complex<double> factor =
        1.0 - std::exp(i2piN * (z + static_cast<double>(j)));
    if (e > 0 && std::abs(factor) < 1e-12)
      throw EvaluationAtPoleError("integrand evaluated on a pole");
    acc *= std::pow(factor, -e);
  }
  return acc;
}

}  // namespace qhyper
