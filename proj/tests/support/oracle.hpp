#pragma once

// Brute-force linear-algebra oracle for the membership criterion: the
// operator restricted to x-degree-0 elements is an N x N matrix over the
// field of quasi-constants (rational functions of w = v^N), and membership
// in its image is decidable by Gaussian elimination.

#include <random>
#include <vector>

#include "qhyper/basis.hpp"
#include "qhyper/solution.hpp"

namespace qhyper_test {

using namespace qhyper;

// (L u)_j = a_j u_j - b_{j-1} u_{j-1}, indices mod N; the wrap from
// k = N-1 to 0 picks up a factor w. Entries read the polynomial variable
// as w.
inline std::vector<std::vector<RatFuncV>> operator_matrix(const Params& p) {
  const auto& ctx = p.context();
  const int n = p.N();
  std::vector<std::vector<RatFuncV>> m(
      static_cast<std::size_t>(n),
      std::vector<RatFuncV>(static_cast<std::size_t>(n), RatFuncV(ctx)));
  for (int k = 0; k < n; ++k) {
    m[k][k] = RatFuncV::constant(coeff_a(p, k));
    RatFuncV down = RatFuncV::constant(-coeff_b(p, k));
    if (k == n - 1) down *= RatFuncV::monomial(ctx, 1);
    m[(k + 1) % n][k] = down;
  }
  return m;
}

// Whether M u = z is solvable over the rational-function field.
inline bool oracle_solvable(std::vector<std::vector<RatFuncV>> m,
                            std::vector<RatFuncV> z) {
  const int n = static_cast<int>(m.size());
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r) {
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]
               .is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(row)]);
    std::swap(z[static_cast<std::size_t>(piv)], z[static_cast<std::size_t>(row)]);
    const RatFuncV& lead =
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int r = row + 1; r < n; ++r) {
      auto& mr = m[static_cast<std::size_t>(r)];
      if (mr[static_cast<std::size_t>(col)].is_zero()) continue;
      RatFuncV f = mr[static_cast<std::size_t>(col)] / lead;
      for (int c = col; c < n; ++c)
        mr[static_cast<std::size_t>(c)] -=
            f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      z[static_cast<std::size_t>(r)] -= f * z[static_cast<std::size_t>(row)];
    }
    ++row;
  }
  // Rows eliminated to zero must have zero right-hand side.
  for (int r = row; r < n; ++r)
    if (!z[static_cast<std::size_t>(r)].is_zero()) return false;
  return true;
}

// z_k of sum_k z_k(v^N) v^k for an x-degree-0 element; N zeros for the zero
// element.
inline std::vector<RatFuncV> quasi_coefficients(const Params& p,
                                                const SolutionElement& e) {
  const int n = p.N();
  std::vector<RatFuncV> z(static_cast<std::size_t>(n), RatFuncV(p.context()));
  if (e.is_zero()) return z;
  QuasiDecomposition d = decompose_quasi(e);
  auto it = d.comp.find(0);
  if (it != d.comp.end()) z = it->second;
  return z;
}

// Random x-degree-0 element with small polynomial quasi-coefficients.
inline SolutionElement random_p_element(const Params& p, std::mt19937& rng) {
  const auto& ctx = p.context();
  const int n = p.N();
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> wdeg(0, 2);
  QuasiDecomposition d;
  d.N = n;
  std::vector<RatFuncV> row;
  for (int k = 0; k < n; ++k) {
    std::vector<CycloNum> c;
    const int dmax = wdeg(rng);
    for (int m = 0; m <= dmax; ++m)
      c.push_back(CycloNum(ctx, Rational(coeff(rng))));
    row.push_back(RatFuncV::from_poly(PolyV(ctx, std::move(c))));
  }
  d.comp[0] = std::move(row);
  return recompose_quasi(ctx, d);
}

}  // namespace qhyper_test
