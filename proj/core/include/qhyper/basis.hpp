#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhyper/params.hpp"
#include "qhyper/solution.hpp"

namespace qhyper {

// The three-way partition of the normalized (beta <= alpha) parameter cube.
enum class CaseTag { Case1, Case2, Case3 };

// "CASE1" | "CASE2" | "CASE3".
const char* case_name(CaseTag tag);

// CASE1: gamma <= beta <= alpha; CASE2: beta < gamma <= alpha;
// CASE3: beta <= alpha < gamma.
CaseTag case_of(const Params& p);

// a_k = (1 - q^k)(1 - q^(gamma-1+k)); b_k = (1 - q^(alpha+k))(1 - q^(beta+k)).
// Exponents reduce mod N, so any integer k is accepted.
CycloNum coeff_a(const Params& p, long k);
CycloNum coeff_b(const Params& p, long k);

// First basis element; x-degree 0; annihilated by L exactly.
SolutionElement psi1(const Params& p);

// The second basis element's final sum in CASE3 carries an ambiguous product
// start index; the two candidates are built and the one annihilated by L wins.
enum class Case3Start {
  Lower,  // start index N - gamma - 1
  Upper   // start index N - gamma + 1
};

struct Case3StartResolution {
  bool applicable = false;  // CASE3 with beta < alpha only
  bool lower_annihilates = false;
  bool upper_annihilates = false;
  // "N-gamma+1", "N-gamma-1", "not-applicable", "ambiguous", or "unresolved".
  std::string label() const;
};

// Second basis element with the stated CASE3 variant (identical to psi2 for
// CASE1/CASE2 and for alpha = beta).
SolutionElement psi2_variant(const Params& p, Case3Start start);

// Second basis element with the variant resolved by exact annihilation,
// together with the resolution record.
std::pair<SolutionElement, Case3StartResolution> psi2_resolved(const Params& p);
SolutionElement psi2(const Params& p);

// Membership criterion for L P within CASE1: decides whether
// sum_k z_k q^(kx) lies in the image of L on x-degree-0 elements. z must
// hold exactly N quasi-constant coefficients (index = power of v).
bool image_membership_case1(const Params& p, const std::vector<RatFuncV>& z);

// C^gamma_{alpha,beta} = 1 - (sum_{j=1}^{N-gamma+1} + sum_{j=N-gamma+alpha+1}^{N-1}
// + sum_{j=N-gamma+beta+1}^{N-1}) q^j/(1-q^j); CASE3 only.
CycloNum c_coefficient(const Params& p);

// (q)_{gamma-1} / ((q)_{alpha-1} (q)_{beta-1}).
CycloNum prefactor(const Params& p);

// Residue bookkeeping for the integrand poles z = 0..N-1. For order 1 the
// residue is (N/2 pi i) * coefficient * q^(kx); for order 2 it is
// (N/2 pi i) * coefficient * (x - E) * q^(kx). Double poles occur only in
// CASE3, at k in {N-gamma+1 .. N-alpha}. Points where the integrand is
// regular (or vanishes) carry no entry.
struct ResidueData {
  int k;
  int order;
  CycloNum coefficient;       // order 1: value; order 2: D_k
  std::optional<CycloNum> E;  // order 2 only
};

std::vector<ResidueData> residue_data(const Params& p);

// The exact element of the solution space equal to the Barnes-type function:
// CASE1: psi1/(1-v^N); CASE2 and CASE3 mix in psi2 with Pochhammer
// coefficients. Requires condition2 (alpha + beta <= N - gamma).
SolutionElement barnes_closed_form(const Params& p);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing or self-evident
};

struct Theorem2Report {
  Params params;
  CaseTag tag;
  std::vector<CheckResult> checks;
  std::string typo_resolution;
  bool all_pass() const;
};

// Exact validation of the basis for a single tuple: annihilation of both
// elements, nonzero casoratian, and the case-dependent x-degrees.
Theorem2Report verify_theorem2(const Params& p);

}  // namespace qhyper
