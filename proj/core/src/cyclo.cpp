#include "qhyper/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "qhyper/error.hpp"

namespace qhyper {

namespace {

// Exact division of integer polynomials, ascending coefficients; the
// divisor must be monic and divide exactly.
std::vector<Integer> divide_exact(const std::vector<Integer>& num,
                                  const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<Integer> quot(dn - dd + 1, Integer(0));
  for (int k = dn - dd; k >= 0; --k) {
    Integer c = rem[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
  }
  return quot;
}

std::vector<Integer> cyclotomic_poly_memo(int N,
                                          std::map<int, std::vector<Integer>>& memo) {
  auto it = memo.find(N);
  if (it != memo.end()) return it->second;
  // x^N - 1 divided by Phi_d for every proper divisor d of N.
  std::vector<Integer> result(N + 1, Integer(0));
  result[0] = -1;
  result[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    result = divide_exact(result, cyclotomic_poly_memo(d, memo));
  }
  memo[N] = result;
  return result;
}

// Rational polynomial helpers for the extended Euclid inverse.
using QPoly = std::vector<Rational>;

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void qtrim(QPoly& p) { p.resize(std::max(qdeg(p) + 1, 0)); }

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qtrim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

// Euclidean division over Q[x]; returns {quotient, remainder}.
std::pair<QPoly, QPoly> qdivmod(QPoly num, const QPoly& den) {
  const int dd = qdeg(den);
  int dn = qdeg(num);
  QPoly quot(std::max(dn - dd + 1, 0), Rational(0));
  const Rational lead = den[dd];
  while (dn >= dd) {
    Rational c = num[dn] / lead;
    quot[dn - dd] = c;
    for (int j = 0; j <= dd; ++j) num[dn - dd + j] -= c * den[j];
    num[dn] = 0;
    dn = qdeg(num);
  }
  qtrim(num);
  return {std::move(quot), std::move(num)};
}

}  // namespace

std::vector<Integer> cyclotomic_poly(int N) {
  if (N < 2) throw InvalidParameterError("cyclotomic_poly requires N >= 2");
  std::map<int, std::vector<Integer>> memo;
  return cyclotomic_poly_memo(N, memo);
}

CycloContext::CycloContext(int N) : N_(N) {
  phi_ = cyclotomic_poly(N);
  degree_ = static_cast<int>(phi_.size()) - 1;

  // x^(degree+i) mod Phi_N, built incrementally: x * previous, fold the
  // overflow term with x^degree = -(low part of Phi_N).
  rows_.reserve(std::max(degree_ - 1, 0));
  std::vector<Integer> cur(degree_, Integer(0));  // x^degree mod Phi_N
  for (int j = 0; j < degree_; ++j) cur[j] = -phi_[j];
  rows_.push_back(cur);
  for (int i = 1; i <= degree_ - 2; ++i) {
    std::vector<Integer> nxt(degree_, Integer(0));
    Integer top = cur[degree_ - 1];
    for (int j = degree_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
    if (top != 0)
      for (int j = 0; j < degree_; ++j) nxt[j] -= top * phi_[j];
    rows_.push_back(nxt);
    cur = std::move(nxt);
  }

  // zeta^k for k in 0..N-1, by repeated multiplication by x.
  zpows_.reserve(N);
  std::vector<Rational> z(degree_, Rational(0));
  z[0] = 1;
  zpows_.push_back(z);
  for (int k = 1; k < N; ++k) {
    std::vector<Rational> nxt(degree_, Rational(0));
    Rational top = z[degree_ - 1];
    for (int j = degree_ - 1; j >= 1; --j) nxt[j] = z[j - 1];
    if (top != 0)
      for (int j = 0; j < degree_; ++j) nxt[j] -= top * Rational(phi_[j]);
    zpows_.push_back(nxt);
    z = std::move(nxt);
  }

  embed_.reserve(degree_);
  for (int j = 0; j < degree_; ++j) {
    double t = 2.0 * std::numbers::pi * j / N;
    embed_.emplace_back(std::cos(t), std::sin(t));
  }
}

std::shared_ptr<const CycloContext> CycloContext::get(int N) {
  if (N < 2) throw InvalidParameterError("CycloContext requires N >= 2");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(N));
  cache[N] = ctx;
  return ctx;
}

CycloNum::CycloNum(CycloContextPtr ctx, Rational scalar) : ctx_(std::move(ctx)) {
  // mpq_class two-argument construction skips canonicalization and GMP
  // comparisons assume it; normalize every externally supplied value.
  scalar.canonicalize();
  c_.assign(ctx_->degree(), Rational(0));
  c_[0] = std::move(scalar);
}

CycloNum CycloNum::zero(CycloContextPtr ctx) {
  return CycloNum(std::move(ctx), Rational(0));
}

CycloNum CycloNum::one(CycloContextPtr ctx) {
  return CycloNum(std::move(ctx), Rational(1));
}

CycloNum CycloNum::from_coeffs(CycloContextPtr ctx, std::vector<Rational> c) {
  if (static_cast<int>(c.size()) != ctx->degree())
    throw InvalidParameterError("coefficient vector length must equal deg(Phi_N)");
  for (auto& x : c) x.canonicalize();
  CycloNum r(ctx, Rational(0));
  r.c_ = std::move(c);
  return r;
}

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& x) { return x == 0; });
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CycloNum::check_same_order(const CycloNum& o) const {
  if (ctx_->order() != o.ctx_->order())
    throw IncompatibleOrdersError("mixed CycloNum orders " +
                                  std::to_string(ctx_->order()) + " and " +
                                  std::to_string(o.ctx_->order()));
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  check_same_order(o);
  const int d = ctx_->degree();
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> res(conv.begin(), conv.begin() + d);
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (conv[k] == 0) continue;
    const auto& row = ctx_->reduction_row(k - d);
    for (int j = 0; j < d; ++j) {
      if (row[j] != 0) res[j] += conv[k] * Rational(row[j]);
    }
  }
  c_ = std::move(res);
  return *this;
}

CycloNum& CycloNum::scale(const Rational& r) {
  Rational s = r;
  s.canonicalize();
  for (auto& x : c_) x *= s;
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero CycloNum");
  // Extended Euclid: s*this + t*Phi_N = gcd (a nonzero constant, since Phi_N
  // is irreducible and this != 0).
  QPoly r0(ctx_->minimal_poly().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx_->minimal_poly()[i]);
  QPoly r1 = c_;
  qtrim(r1);
  QPoly s0{}, s1{Rational(1)};  // coefficients of `this` in r0, r1
  while (qdeg(r1) > 0) {
    auto [q, r2] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant g with s1*this = g (mod Phi_N).
  const Rational g = r1.at(0);
  std::vector<Rational> inv(ctx_->degree(), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / g;
  return from_coeffs(ctx_, std::move(inv));
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
  check_same_order(o);
  return *this *= o.inverse();
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (ctx_->order() != o.ctx_->order()) return false;
  return c_ == o.c_;
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const auto& basis = ctx_->basis_embedding();
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    acc += c_[j].get_d() * basis[j];
  }
  return acc;
}

CycloNum zeta_pow(const CycloContextPtr& ctx, long k) {
  const int N = ctx->order();
  long r = k % N;
  if (r < 0) r += N;
  std::vector<Rational> c = ctx->zeta_row(static_cast<int>(r));
  return CycloNum::from_coeffs(ctx, std::move(c));
}

CycloNum q_of(const CycloContextPtr& ctx) { return zeta_pow(ctx, 1); }

CycloNum q_pochhammer(const CycloNum& x, long n) {
  if (n < 0) throw InvalidParameterError("q_pochhammer requires n >= 0");
  const auto& ctx = x.context();
  CycloNum acc = CycloNum::one(ctx);
  for (long j = 0; j < n; ++j) {
    acc *= CycloNum::one(ctx) - zeta_pow(ctx, j) * x;
  }
  return acc;
}

}  // namespace qhyper
