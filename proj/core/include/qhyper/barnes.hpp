#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qhyper/basis.hpp"
#include "qhyper/integrand.hpp"

namespace qhyper {

// Controls for the contour quadrature. T = 0 selects the truncation
// automatically from the integrand's decay envelope so the discarded tails
// stay below tol/10.
struct QuadConfig {
  double T = 0.0;
  double tol = 1e-8;
  long max_evals = 4'000'000;
};

struct IntegralResult {
  std::complex<double> value;
  double error_estimate;  // quadrature + truncation, heuristic bound
};

// prefactor(p) * integral of Phi over the contour Re z = -1/2, truncated to
// |Im z| <= T and refined adaptively. Requires condition2 and 0 < Re x < 1.
IntegralResult contour_integral(const Params& p, const std::complex<double>& x,
                                const QuadConfig& cfg = {});

// (-2 pi i / (1 - q^(Nx))) * prefactor(p) * sum of residues at z = 0..N-1,
// from the exact residue_data. Throws SingularXError when 1 - q^(Nx)
// vanishes.
std::complex<double> residue_sum(const Params& p,
                                 const std::complex<double>& x);

struct Theorem3Entry {
  std::complex<double> x;
  std::complex<double> integral;
  std::complex<double> residue;
  std::complex<double> closed_form;
  double integral_error;  // quadrature error estimate
  double dev_integral_closed;
  double dev_residue_closed;
  double dev_integral_residue;
  double max_deviation;
  bool pass;
};

struct Theorem3Report {
  Params params;
  CaseTag tag;
  double tol;
  std::vector<Theorem3Entry> entries;
  std::string error;  // nonempty when a precondition failed
  bool pass;
};

// Compares contour integral, residue sum, and the exact closed form at each
// x; passes iff every pairwise deviation is <= tol. Precondition failures
// are recorded in the report rather than thrown.
Theorem3Report verify_theorem3(const Params& p,
                               const std::vector<std::complex<double>>& xs,
                               double tol, const QuadConfig& cfg = {});

}  // namespace qhyper
