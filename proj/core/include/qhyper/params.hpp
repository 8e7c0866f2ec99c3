#pragma once

#include <string>

#include "qhyper/cyclo.hpp"
#include "qhyper/error.hpp"

namespace qhyper {

// The parameter tuple (N, alpha, beta, gamma) with 1 <= alpha, beta, gamma <= N
// and q = e^(2*pi*i/N). The equation is symmetric in alpha and beta, so
// construction normalizes to beta <= alpha and records whether it swapped.
class Params {
 public:
  Params(int N, int alpha, int beta, int gamma)
      : N_(N), alpha_(alpha), beta_(beta), gamma_(gamma), swapped_(false) {
    if (N < 2) throw InvalidParameterError("N must be >= 2");
    auto in_range = [N](int v) { return 1 <= v && v <= N; };
    if (!in_range(alpha) || !in_range(beta) || !in_range(gamma))
      throw InvalidParameterError("alpha, beta, gamma must lie in {1..N}");
    if (beta_ > alpha_) {
      std::swap(alpha_, beta_);
      swapped_ = true;
    }
    ctx_ = CycloContext::get(N);
  }

  int N() const { return N_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int gamma() const { return gamma_; }
  bool swapped() const { return swapped_; }

  const CycloContextPtr& context() const { return ctx_; }
  CycloNum q() const { return q_of(ctx_); }

  // Convergence constraint of the integral representation.
  bool condition2() const { return alpha_ + beta_ <= N_ - gamma_; }

  bool operator==(const Params& o) const {
    return N_ == o.N_ && alpha_ == o.alpha_ && beta_ == o.beta_ &&
           gamma_ == o.gamma_;
  }

  std::string to_string() const {
    return "(N=" + std::to_string(N_) + ", alpha=" + std::to_string(alpha_) +
           ", beta=" + std::to_string(beta_) +
           ", gamma=" + std::to_string(gamma_) + ")";
  }

 private:
  int N_, alpha_, beta_, gamma_;
  bool swapped_;
  CycloContextPtr ctx_;
};

}  // namespace qhyper
