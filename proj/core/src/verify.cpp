#include "qhyper/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace qhyper {

std::vector<Params> sweep_tuples(const SweepSpec& spec) {
  std::vector<Params> out;
  const int lo = std::max(2, spec.n_min);
  for (int n = lo; n <= spec.n_max; ++n) {
    for (int al = 1; al <= n; ++al) {
      for (int be = 1; be <= al; ++be) {
        if (spec.alpha && *spec.alpha != al) continue;
        if (spec.beta && *spec.beta != be) continue;
        for (int ga = 1; ga <= n; ++ga) {
          if (spec.gamma && *spec.gamma != ga) continue;
          Params p(n, al, be, ga);
          if (spec.case_filter && case_of(p) != *spec.case_filter) continue;
          if (spec.condition2_only && !p.condition2()) continue;
          out.push_back(p);
        }
      }
    }
  }
  return out;
}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_tuples(
    const std::vector<Params>& tuples, int jobs,
    const std::function<void(std::size_t, const Params&)>& f) {
  const std::size_t n = tuples.size();
  if (n == 0) return;
  std::size_t workers = static_cast<std::size_t>(resolve_jobs(jobs));
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i, tuples[i]);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i, tuples[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

Theorem2Sweep run_theorem2_sweep(const SweepSpec& spec) {
  const std::vector<Params> tuples = sweep_tuples(spec);
  std::vector<std::optional<Theorem2Report>> slots(tuples.size());
  parallel_for_tuples(tuples, spec.jobs,
                      [&](std::size_t i, const Params& p) {
                        slots[i] = verify_theorem2(p);
                      });
  Theorem2Sweep sweep;
  sweep.reports.reserve(slots.size());
  for (auto& s : slots) {
    sweep.all_pass = sweep.all_pass && s->all_pass();
    sweep.reports.push_back(std::move(*s));
  }
  return sweep;
}

Theorem3Sweep run_theorem3_sweep(const SweepSpec& spec,
                                 const std::vector<double>& xs, double tol,
                                 QuadConfig cfg) {
  SweepSpec narrowed = spec;
  narrowed.condition2_only = true;
  const std::vector<Params> tuples = sweep_tuples(narrowed);
  const std::vector<std::complex<double>> cxs(xs.begin(), xs.end());
  std::vector<std::optional<Theorem3Report>> slots(tuples.size());
  parallel_for_tuples(tuples, spec.jobs,
                      [&](std::size_t i, const Params& p) {
                        slots[i] = verify_theorem3(p, cxs, tol, cfg);
                      });
  Theorem3Sweep sweep;
  sweep.reports.reserve(slots.size());
  for (auto& s : slots) {
    sweep.all_pass = sweep.all_pass && s->pass;
    sweep.reports.push_back(std::move(*s));
  }
  return sweep;
}

}  // namespace qhyper
