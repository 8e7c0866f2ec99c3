#include "qhyper/ratfunc.hpp"

#include <algorithm>
#include <cmath>

#include "qhyper/error.hpp"

namespace qhyper {

PolyV::PolyV(CycloContextPtr ctx, std::vector<CycloNum> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.order() != ctx_->order())
      throw IncompatibleOrdersError("polynomial coefficient order mismatch");
  trim();
}

void PolyV::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyV PolyV::constant(const CycloNum& c) {
  PolyV p(c.context());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

PolyV PolyV::monomial(const CycloContextPtr& ctx, int k, const CycloNum& c) {
  PolyV p(ctx);
  if (c.is_zero()) return p;
  p.c_.assign(k, CycloNum::zero(ctx));
  p.c_.push_back(c);
  return p;
}

PolyV PolyV::monomial(const CycloContextPtr& ctx, int k) {
  return monomial(ctx, k, CycloNum::one(ctx));
}

CycloNum PolyV::coeff(int k) const {
  if (k < 0 || k > degree()) return CycloNum::zero(ctx_);
  return c_[k];
}

PolyV PolyV::operator-() const {
  PolyV r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyV& PolyV::operator+=(const PolyV& o) {
  if (ctx_->order() != o.ctx_->order())
    throw IncompatibleOrdersError("polynomial order mismatch");
  while (c_.size() < o.c_.size()) c_.push_back(CycloNum::zero(ctx_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyV& PolyV::operator-=(const PolyV& o) {
  return *this += -o;
}

PolyV& PolyV::operator*=(const PolyV& o) {
  if (ctx_->order() != o.ctx_->order())
    throw IncompatibleOrdersError("polynomial order mismatch");
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<CycloNum> r(c_.size() + o.c_.size() - 1, CycloNum::zero(ctx_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

PolyV& PolyV::scale(const CycloNum& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

bool PolyV::operator==(const PolyV& o) const {
  if (ctx_->order() != o.ctx_->order()) return false;
  return c_ == o.c_;
}

std::pair<PolyV, PolyV> PolyV::divmod(const PolyV& num, const PolyV& den) {
  if (den.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  const auto& ctx = num.ctx_;
  PolyV quot(ctx), rem = num;
  const int dd = den.degree();
  if (rem.degree() >= dd)
    quot.c_.assign(rem.degree() - dd + 1, CycloNum::zero(ctx));
  const CycloNum lead_inv = den.c_.back().inverse();
  while (rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    CycloNum c = rem.c_.back() * lead_inv;
    quot.c_[shift] = c;
    for (int j = 0; j <= dd; ++j) rem.c_[shift + j] -= c * den.c_[j];
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

PolyV PolyV::gcd(PolyV a, PolyV b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

PolyV PolyV::monic() const {
  if (is_zero()) return *this;
  PolyV r = *this;
  const CycloNum inv = c_.back().inverse();
  for (auto& c : r.c_) c *= inv;
  return r;
}

PolyV PolyV::substitute_qshift(long s) const {
  PolyV r = *this;
  for (size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] *= zeta_pow(ctx_, s * static_cast<long>(k));
  r.trim();
  return r;
}

std::complex<double> PolyV::eval(const std::complex<double>& v0) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * v0 + it->to_complex();
  return acc;
}

RatFuncV::RatFuncV(CycloContextPtr ctx)
    : num_(ctx), den_(PolyV::constant(CycloNum::one(ctx))) {}

RatFuncV::RatFuncV(PolyV num, PolyV den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  normalize();
}

RatFuncV RatFuncV::from_poly(PolyV p) {
  auto ctx = p.context();
  return RatFuncV(std::move(p), PolyV::constant(CycloNum::one(ctx)));
}

RatFuncV RatFuncV::constant(const CycloNum& c) {
  return from_poly(PolyV::constant(c));
}

RatFuncV RatFuncV::monomial(const CycloContextPtr& ctx, int k) {
  return from_poly(PolyV::monomial(ctx, k));
}

void RatFuncV::normalize() {
  if (num_.is_zero()) {
    den_ = PolyV::constant(CycloNum::one(num_.context()));
    return;
  }
  PolyV g = PolyV::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = PolyV::divmod(num_, g).first;
    den_ = PolyV::divmod(den_, g).first;
  }
  // Make the denominator monic by moving its leading coefficient into num.
  const CycloNum lead = den_.coeffs().back();
  if (!(lead == CycloNum::one(num_.context()))) {
    const CycloNum inv = lead.inverse();
    num_.scale(inv);
    den_ = den_.monic();
  }
}

RatFuncV RatFuncV::operator-() const {
  RatFuncV r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncV& RatFuncV::operator+=(const RatFuncV& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFuncV& RatFuncV::operator-=(const RatFuncV& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFuncV& RatFuncV::operator*=(const RatFuncV& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFuncV& RatFuncV::operator/=(const RatFuncV& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFuncV& RatFuncV::scale(const CycloNum& c) {
  num_.scale(c);
  normalize();
  return *this;
}

bool RatFuncV::operator==(const RatFuncV& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFuncV RatFuncV::substitute_qshift(long s) const {
  return RatFuncV(num_.substitute_qshift(s), den_.substitute_qshift(s));
}

std::complex<double> RatFuncV::eval(const std::complex<double>& v0) const {
  const std::complex<double> dv = den_.eval(v0);
  double scale = 0.0;
  for (const auto& c : den_.coeffs()) scale += std::abs(c.to_complex());
  if (std::abs(dv) < 1e-12 * std::max(1.0, scale))
    throw EvaluationAtPoleError("denominator vanishes at evaluation point");
  return num_.eval(v0) / dv;
}

}  // namespace qhyper
