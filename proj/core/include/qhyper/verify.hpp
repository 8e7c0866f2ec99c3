#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qhyper/barnes.hpp"
#include "qhyper/basis.hpp"
#include "qhyper/params.hpp"

namespace qhyper {

// Parameter-cube selection for the verification sweeps.  Tuples are always
// enumerated with beta <= alpha; the operator is symmetric in alpha, beta so
// nothing is lost.
struct SweepSpec {
  int n_min = 2;
  int n_max = 8;
  std::optional<int> alpha;
  std::optional<int> beta;
  std::optional<int> gamma;
  std::optional<CaseTag> case_filter;
  bool condition2_only = false;
  int jobs = 0;  // 0 means hardware concurrency
};

// Matching tuples in sorted (N, alpha, beta, gamma) order.
std::vector<Params> sweep_tuples(const SweepSpec& spec);

int resolve_jobs(int requested);

// Runs f(i, tuples[i]) over a worker pool; result placement by index keeps the
// output deterministic regardless of schedule.  The first exception thrown by
// any worker is rethrown after all workers drain.
void parallel_for_tuples(
    const std::vector<Params>& tuples, int jobs,
    const std::function<void(std::size_t, const Params&)>& f);

struct Theorem2Sweep {
  std::vector<Theorem2Report> reports;  // tuple-sorted
  bool all_pass = true;
};

Theorem2Sweep run_theorem2_sweep(const SweepSpec& spec);

struct Theorem3Sweep {
  std::vector<Theorem3Report> reports;  // tuple-sorted
  bool all_pass = true;
};

// Only tuples satisfying condition2 are run; the integral does not converge
// elsewhere, so they are outside the theorem's scope.
Theorem3Sweep run_theorem3_sweep(const SweepSpec& spec,
                                 const std::vector<double>& xs, double tol,
                                 QuadConfig cfg = {});

}  // namespace qhyper
