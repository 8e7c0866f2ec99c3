#include "qhyper/solution.hpp"

#include <numbers>
#include <stdexcept>

#include "qhyper/error.hpp"

namespace qhyper {

SolutionElement::SolutionElement(CycloContextPtr ctx) : ctx_(std::move(ctx)) {}

SolutionElement SolutionElement::from_ratfunc(RatFuncV r) {
  return term(0, std::move(r));
}

SolutionElement SolutionElement::term(int j, RatFuncV r) {
  if (j < 0) throw InvalidParameterError("x-degree must be >= 0");
  SolutionElement e(r.context());
  e.set_coeff(j, std::move(r));
  return e;
}

void SolutionElement::set_coeff(int j, RatFuncV r) {
  if (r.is_zero())
    terms_.erase(j);
  else
    terms_.insert_or_assign(j, std::move(r));
}

int SolutionElement::x_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

RatFuncV SolutionElement::coeff(int j) const {
  auto it = terms_.find(j);
  return it != terms_.end() ? it->second : RatFuncV(ctx_);
}

SolutionElement SolutionElement::operator-() const {
  SolutionElement r = *this;
  for (auto& [j, c] : r.terms_) c = -c;
  return r;
}

SolutionElement& SolutionElement::operator+=(const SolutionElement& o) {
  for (const auto& [j, c] : o.terms_) {
    auto it = terms_.find(j);
    if (it == terms_.end()) {
      terms_.emplace(j, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SolutionElement& SolutionElement::operator-=(const SolutionElement& o) {
  return *this += -o;
}

SolutionElement& SolutionElement::operator*=(const SolutionElement& o) {
  SolutionElement prod(ctx_);
  for (const auto& [j1, c1] : terms_) {
    for (const auto& [j2, c2] : o.terms_) {
      SolutionElement t = term(j1 + j2, c1 * c2);
      prod += t;
    }
  }
  *this = std::move(prod);
  return *this;
}

SolutionElement& SolutionElement::scale(const CycloNum& c) {
  return scale_ratfunc(RatFuncV::constant(c));
}

SolutionElement& SolutionElement::scale_ratfunc(const RatFuncV& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, c] : terms_) c *= r;
  return *this;
}

bool SolutionElement::operator==(const SolutionElement& o) const {
  return terms_ == o.terms_;
}

SolutionElement shift_D(const SolutionElement& e) {
  SolutionElement r(e.ctx_);
  for (const auto& [j, c] : e.terms_) {
    const RatFuncV shifted = c.substitute_qshift(1);
    // (x+1)^j expanded binomially.
    Integer binom;
    for (int i = 0; i <= j; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), j, i);
      RatFuncV ci = shifted;
      ci.scale(CycloNum(e.ctx_, Rational(binom)));
      r += SolutionElement::term(i, std::move(ci));
    }
  }
  return r;
}

SolutionElement apply_L(const Params& p, const SolutionElement& e) {
  const auto& ctx = p.context();
  const SolutionElement de = shift_D(e);
  const SolutionElement d2e = shift_D(de);

  const CycloNum one = CycloNum::one(ctx);
  const CycloNum qg = zeta_pow(ctx, p.gamma() - 1);
  const CycloNum qa = zeta_pow(ctx, p.alpha());
  const CycloNum qb = zeta_pow(ctx, p.beta());

  // (1 - D)(1 - q^(gamma-1) D) e = e - (1 + q^(gamma-1)) De + q^(gamma-1) D2e
  SolutionElement lhs = e;
  lhs -= SolutionElement(de).scale(one + qg);
  lhs += SolutionElement(d2e).scale(qg);

  // (1 - q^alpha D)(1 - q^beta D) e = e - (q^alpha + q^beta) De + q^(alpha+beta) D2e
  SolutionElement rhs = e;
  rhs -= SolutionElement(de).scale(qa + qb);
  rhs += SolutionElement(d2e).scale(qa * qb);
  rhs.scale_ratfunc(RatFuncV::monomial(ctx, 1));

  lhs -= rhs;
  return lhs;
}

SolutionElement apply_Lk(const Params& p, long k, const SolutionElement& e) {
  if (k < 1) throw InvalidParameterError("apply_Lk requires k >= 1");
  const auto& ctx = p.context();
  const SolutionElement de = shift_D(e);
  const SolutionElement d2e = shift_D(de);

  Integer twok;
  mpz_ui_pow_ui(twok.get_mpz_t(), 2, static_cast<unsigned long>(k));
  const CycloNum one = CycloNum::one(ctx);
  const CycloNum qg = zeta_pow(ctx, p.gamma() - 1);
  const CycloNum qa = zeta_pow(ctx, p.alpha());
  const CycloNum qb = zeta_pow(ctx, p.beta());

  // 2^k (1 - v)
  PolyV one_minus_v(ctx, {one, -one});
  RatFuncV c2 = RatFuncV::from_poly(one_minus_v);
  c2.scale(CycloNum(ctx, Rational(twok)));

  // (1 + q^(gamma-1)) - v (q^alpha + q^beta)
  PolyV c1p(ctx, {one + qg, -(qa + qb)});
  RatFuncV c1 = RatFuncV::from_poly(c1p);

  SolutionElement r = SolutionElement(d2e).scale_ratfunc(c2);
  r -= SolutionElement(de).scale_ratfunc(c1);
  return r;
}

namespace {

// Raise a polynomial in w to the variable v by substituting w = v^N.
PolyV expand_w_to_v(const PolyV& pw, int N) {
  const auto& ctx = pw.context();
  PolyV out(ctx);
  for (int i = 0; i <= pw.degree(); ++i) {
    const CycloNum c = pw.coeff(i);
    if (c.is_zero()) continue;
    out += PolyV::monomial(ctx, N * i, c);
  }
  return out;
}

}  // namespace

QuasiDecomposition decompose_quasi(const SolutionElement& e) {
  const auto& ctx = e.context();
  const int N = ctx->order();
  QuasiDecomposition d;
  d.N = N;
  for (const auto& [j, r] : e.terms()) {
    // Rationalize the denominator over the subfield of functions of v^N:
    // Qstar(v) = prod_m Q(q^m v) depends on v only through v^N.
    const PolyV& P = r.num();
    const PolyV& Q = r.den();
    PolyV qstar = Q;
    PolyV u = P;
    for (int m = 1; m < N; ++m) {
      const PolyV qs = Q.substitute_qshift(m);
      qstar *= qs;
      u *= qs;
    }
    PolyV qtilde(ctx);  // Qstar compressed to the w variable
    for (int i = 0; i <= qstar.degree(); ++i) {
      const CycloNum c = qstar.coeff(i);
      if (c.is_zero()) continue;
      if (i % N != 0)
        throw std::logic_error("symmetrized denominator not a polynomial in v^N");
      qtilde += PolyV::monomial(ctx, i / N, c);
    }
    // Split U by v-power residue mod N; each class is a polynomial in w.
    std::vector<RatFuncV> row;
    row.reserve(N);
    for (int k = 0; k < N; ++k) {
      PolyV uk(ctx);
      for (int i = k; i <= u.degree(); i += N) {
        const CycloNum c = u.coeff(i);
        if (c.is_zero()) continue;
        uk += PolyV::monomial(ctx, (i - k) / N, c);
      }
      row.emplace_back(std::move(uk), qtilde);
    }
    d.comp.emplace(j, std::move(row));
  }
  return d;
}

SolutionElement recompose_quasi(const CycloContextPtr& ctx,
                                const QuasiDecomposition& d) {
  const int N = d.N;
  SolutionElement e(ctx);
  for (const auto& [j, row] : d.comp) {
    for (int k = 0; k < N; ++k) {
      const RatFuncV& g = row[k];
      if (g.is_zero()) continue;
      PolyV numv = expand_w_to_v(g.num(), N) * PolyV::monomial(ctx, k);
      PolyV denv = expand_w_to_v(g.den(), N);
      e += SolutionElement::term(j, RatFuncV(std::move(numv), std::move(denv)));
    }
  }
  return e;
}

std::complex<double> evaluate(const SolutionElement& e,
                              const std::complex<double>& x0) {
  const int N = e.context()->order();
  const std::complex<double> i2pi(0.0, 2.0 * std::numbers::pi);
  const std::complex<double> v0 = std::exp(i2pi * x0 / static_cast<double>(N));
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [j, c] : e.terms())
    acc += std::pow(x0, static_cast<double>(j)) * c.eval(v0);
  return acc;
}

SolutionElement casoratian(const SolutionElement& e1, const SolutionElement& e2) {
  return e1 * shift_D(e2) - shift_D(e1) * e2;
}

}  // namespace qhyper
