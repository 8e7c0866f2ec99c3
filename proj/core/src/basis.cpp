#include "qhyper/basis.hpp"

#include <stdexcept>

#include "qhyper/error.hpp"
#include "qhyper/integrand.hpp"

namespace qhyper {

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1:
      return "CASE1";
    case CaseTag::Case2:
      return "CASE2";
    case CaseTag::Case3:
      return "CASE3";
  }
  return "?";
}

CaseTag case_of(const Params& p) {
  if (p.gamma() <= p.beta()) return CaseTag::Case1;
  if (p.gamma() <= p.alpha()) return CaseTag::Case2;
  return CaseTag::Case3;
}

CycloNum coeff_a(const Params& p, long k) {
  const auto& ctx = p.context();
  const CycloNum one = CycloNum::one(ctx);
  return (one - zeta_pow(ctx, k)) * (one - zeta_pow(ctx, p.gamma() - 1 + k));
}

CycloNum coeff_b(const Params& p, long k) {
  const auto& ctx = p.context();
  const CycloNum one = CycloNum::one(ctx);
  return (one - zeta_pow(ctx, p.alpha() + k)) *
         (one - zeta_pow(ctx, p.beta() + k));
}

namespace {

CycloNum prod_a(const Params& p, long lo, long hi) {
  CycloNum acc = CycloNum::one(p.context());
  for (long j = lo; j <= hi; ++j) acc *= coeff_a(p, j);
  return acc;
}

CycloNum prod_b(const Params& p, long lo, long hi) {
  CycloNum acc = CycloNum::one(p.context());
  for (long j = lo; j <= hi; ++j) acc *= coeff_b(p, j);
  return acc;
}

// sum_{j=jlo}^{k} [ (1-q^(gamma+2j-1))/a_j - (1-q^(alpha+beta+2(j-1)))/b_{j-1} ]
CycloNum inner_sum(const Params& p, long jlo, long k) {
  const auto& ctx = p.context();
  const CycloNum one = CycloNum::one(ctx);
  CycloNum acc = CycloNum::zero(ctx);
  for (long j = jlo; j <= k; ++j) {
    acc += (one - zeta_pow(ctx, p.gamma() + 2 * j - 1)) / coeff_a(p, j);
    acc -= (one - zeta_pow(ctx, p.alpha() + p.beta() + 2 * (j - 1))) /
           coeff_b(p, j - 1);
  }
  return acc;
}

}  // namespace

SolutionElement psi1(const Params& p) {
  const auto& ctx = p.context();
  PolyV poly(ctx);
  if (case_of(p) != CaseTag::Case3) {
    // sum_{k=0}^{N-alpha} b_0...b_{k-1} / (a_1...a_k) v^k
    CycloNum r = CycloNum::one(ctx);
    poly += PolyV::monomial(ctx, 0, r);
    for (int k = 1; k <= p.N() - p.alpha(); ++k) {
      r *= coeff_b(p, k - 1) / coeff_a(p, k);
      poly += PolyV::monomial(ctx, k, r);
    }
  } else {
    // sum_{k=N-gamma+1}^{N-alpha} b_{N-gamma+1}...b_{k-1} / (a_{N-gamma+2}...a_k) v^k
    const int k0 = p.N() - p.gamma() + 1;
    CycloNum r = CycloNum::one(ctx);
    poly += PolyV::monomial(ctx, k0, r);
    for (int k = k0 + 1; k <= p.N() - p.alpha(); ++k) {
      r *= coeff_b(p, k - 1) / coeff_a(p, k);
      poly += PolyV::monomial(ctx, k, r);
    }
  }
  return SolutionElement::from_ratfunc(RatFuncV::from_poly(std::move(poly)));
}

SolutionElement psi2_variant(const Params& p, Case3Start start) {
  const auto& ctx = p.context();
  const int N = p.N();
  const int al = p.alpha(), be = p.beta(), ga = p.gamma();
  const CycloNum one = CycloNum::one(ctx);
  const CaseTag tag = case_of(p);

  if (tag == CaseTag::Case2) {
    // sum_{k=N-gamma+1}^{N-beta} b_{N-gamma+1}...b_{k-1}/(a_{N-gamma+2}...a_k) v^k
    PolyV poly(ctx);
    const int k0 = N - ga + 1;
    CycloNum r = one;
    poly += PolyV::monomial(ctx, k0, r);
    for (int k = k0 + 1; k <= N - be; ++k) {
      r *= coeff_b(p, k - 1) / coeff_a(p, k);
      poly += PolyV::monomial(ctx, k, r);
    }
    return SolutionElement::from_ratfunc(RatFuncV::from_poly(std::move(poly)));
  }

  if (tag == CaseTag::Case1) {
    SolutionElement e = SolutionElement::term(1, psi1(p).coeff(0));
    RatFuncV rest(ctx);
    // sum_{k=1}^{N-alpha} b_0...b_{k-1}/(a_1...a_k) * inner(1,k) v^k
    CycloNum r = one;
    for (int k = 1; k <= N - al; ++k) {
      r *= coeff_b(p, k - 1) / coeff_a(p, k);
      rest += RatFuncV::from_poly(
          PolyV::monomial(ctx, k, r * inner_sum(p, 1, k)));
    }
    // alpha != beta: continuation sum over k = N-alpha+1 .. N-beta
    if (al != be) {
      const CycloNum lead = (one - zeta_pow(ctx, be - al)) *
                            prod_b(p, 0, N - al - 1) /
                            prod_a(p, 1, N - al + 1);
      CycloNum s = one;
      for (int k = N - al + 1; k <= N - be; ++k) {
        if (k > N - al + 1) s *= coeff_b(p, k - 1) / coeff_a(p, k);
        rest -= RatFuncV::from_poly(PolyV::monomial(ctx, k, lead * s));
      }
    }
    // gamma != 1: q^(-Nx)-weighted tail over k = N-gamma+1 .. N-1
    if (ga != 1) {
      const CycloNum w1 = one - zeta_pow(ctx, ga - 1);
      PolyV tail(ctx);
      for (int k = N - ga + 1; k <= N - 1; ++k) {
        const CycloNum c =
            w1 * prod_a(p, k + 1, N - 1) / prod_b(p, k, N - 1);
        tail += PolyV::monomial(ctx, k, c);
      }
      rest -= RatFuncV(std::move(tail), PolyV::monomial(ctx, N));
    }
    e += SolutionElement::term(0, std::move(rest));
    return e;
  }

  // CASE3
  SolutionElement e = SolutionElement::term(1, psi1(p).coeff(0));
  PolyV rest(ctx);
  // -(1-q^(N-gamma+1)) sum_{k=0}^{N-gamma} a_{k+1}...a_{N-gamma}/(b_k...b_{N-gamma}) v^k
  const CycloNum w1 = one - zeta_pow(ctx, N - ga + 1);
  for (int k = 0; k <= N - ga; ++k) {
    const CycloNum c =
        w1 * prod_a(p, k + 1, N - ga) / prod_b(p, k, N - ga);
    rest -= PolyV::monomial(ctx, k, c);
  }
  // sum_{k=N-gamma+2}^{N-alpha} b_{N-gamma+1}...b_{k-1}/(a_{N-gamma+2}...a_k)
  //   * inner(N-gamma+2, k) v^k
  {
    CycloNum r = one;
    for (int k = N - ga + 2; k <= N - al; ++k) {
      r *= coeff_b(p, k - 1) / coeff_a(p, k);
      rest += PolyV::monomial(ctx, k, r * inner_sum(p, N - ga + 2, k));
    }
  }
  // alpha != beta: continuation sum with the contested product start index
  if (al != be) {
    const long s0 = (start == Case3Start::Lower) ? (N - ga - 1) : (N - ga + 1);
    const CycloNum lead = (one - zeta_pow(ctx, be - al)) *
                          prod_b(p, s0, N - al - 1) /
                          prod_a(p, N - ga + 2, N - al + 1);
    CycloNum s = one;
    for (int k = N - al + 1; k <= N - be; ++k) {
      if (k > N - al + 1) s *= coeff_b(p, k - 1) / coeff_a(p, k);
      rest -= PolyV::monomial(ctx, k, lead * s);
    }
  }
  e += SolutionElement::term(0, RatFuncV::from_poly(std::move(rest)));
  return e;
}

std::string Case3StartResolution::label() const {
  if (!applicable) return "not-applicable";
  if (upper_annihilates && !lower_annihilates) return "N-gamma+1";
  if (lower_annihilates && !upper_annihilates) return "N-gamma-1";
  if (lower_annihilates && upper_annihilates) return "ambiguous";
  return "unresolved";
}

std::pair<SolutionElement, Case3StartResolution> psi2_resolved(const Params& p) {
  Case3StartResolution res;
  res.applicable = case_of(p) == CaseTag::Case3 && p.alpha() != p.beta();
  if (!res.applicable) {
    return {psi2_variant(p, Case3Start::Upper), res};
  }
  SolutionElement lower = psi2_variant(p, Case3Start::Lower);
  SolutionElement upper = psi2_variant(p, Case3Start::Upper);
  res.lower_annihilates = apply_L(p, lower).is_zero();
  res.upper_annihilates = apply_L(p, upper).is_zero();
  if (res.lower_annihilates && !res.upper_annihilates)
    return {std::move(lower), res};
  return {std::move(upper), res};
}

SolutionElement psi2(const Params& p) { return psi2_resolved(p).first; }

bool image_membership_case1(const Params& p, const std::vector<RatFuncV>& z) {
  if (case_of(p) != CaseTag::Case1)
    throw CaseMismatchError("membership criterion applies to CASE1 only");
  const int N = p.N();
  if (static_cast<int>(z.size()) != N)
    throw InvalidParameterError("membership test needs exactly N coefficients");
  const auto& ctx = p.context();
  const int be = p.beta(), ga = p.gamma();

  RatFuncV acc(ctx);
  if (ga != 1) {
    for (int j = N - be + 1; j <= N - ga; ++j) {
      const CycloNum c = prod_b(p, j, N - ga) / prod_a(p, j, N - ga);
      acc += RatFuncV(z[j]).scale(c);
    }
    acc += z[N - ga + 1];
  } else {
    for (int j = N - be + 1; j <= N - 1; ++j) {
      const CycloNum c = prod_b(p, j, N - 1) / prod_a(p, j, N - 1);
      acc += RatFuncV(z[j]).scale(c);
    }
    // z_0 enters with the q^(-Nx) weight; the entries read the polynomial
    // variable as w = v^N, so that weight is one power of the variable.
    RatFuncV z0 = z[0];
    z0 /= RatFuncV::monomial(ctx, 1);
    acc += z0;
  }
  return acc.is_zero();
}

CycloNum c_coefficient(const Params& p) {
  if (case_of(p) != CaseTag::Case3)
    throw CaseMismatchError("C coefficient applies to CASE3 only");
  const auto& ctx = p.context();
  const int N = p.N(), al = p.alpha(), be = p.beta(), ga = p.gamma();
  const CycloNum one = CycloNum::one(ctx);
  auto term = [&](long j) {
    const CycloNum qj = zeta_pow(ctx, j);
    return qj / (one - qj);
  };
  CycloNum acc = one;
  for (int j = 1; j <= N - ga + 1; ++j) acc -= term(j);
  for (int j = N - ga + al + 1; j <= N - 1; ++j) acc -= term(j);
  for (int j = N - ga + be + 1; j <= N - 1; ++j) acc -= term(j);
  return acc;
}

CycloNum prefactor(const Params& p) {
  const auto& ctx = p.context();
  const CycloNum q = q_of(ctx);
  return q_pochhammer(q, p.gamma() - 1) /
         (q_pochhammer(q, p.alpha() - 1) * q_pochhammer(q, p.beta() - 1));
}

std::vector<ResidueData> residue_data(const Params& p) {
  // Local Laurent data at each pole; no convergence hypothesis needed.
  const auto& ctx = p.context();
  const int N = p.N();
  const CycloNum one = CycloNum::one(ctx);
  const FactorList f = reduce_integrand(p);
  const std::vector<int> orders = pole_orders(f);

  std::vector<ResidueData> out;
  for (int k = 0; k < N; ++k) {
    const int m = orders[k];
    if (m <= 0) continue;
    if (m > 2) throw std::logic_error("unexpected pole order > 2");
    // Product over the regular factors at z = k.
    CycloNum g = one;
    CycloNum esum = CycloNum::zero(ctx);
    for (int j = 0; j <= N; ++j) {
      const int e = f.exponents[j];
      if (e == 0 || (j + k) % N == 0) continue;
      const CycloNum factor = one - zeta_pow(ctx, k + j);
      for (int t = 0; t < e; ++t) g /= factor;
      for (int t = 0; t < -e; ++t) g *= factor;
      if (m == 2) {
        esum += Rational(e) * (zeta_pow(ctx, k + j) / factor);
      }
    }
    if (m == 1)
      out.push_back(ResidueData{k, 1, -g, std::nullopt});
    else
      out.push_back(ResidueData{k, 2, g, one - esum});
  }
  return out;
}

SolutionElement barnes_closed_form(const Params& p) {
  if (!p.condition2())
    throw NotConvergentError("closed form requires alpha + beta <= N - gamma");
  const auto& ctx = p.context();
  const int N = p.N(), al = p.alpha(), be = p.beta(), ga = p.gamma();
  const CycloNum q = q_of(ctx);
  const CycloNum one = CycloNum::one(ctx);

  // 1/(1 - v^N)
  PolyV den = PolyV::constant(one) - PolyV::monomial(ctx, N);
  const RatFuncV quasi(PolyV::constant(one), std::move(den));

  const CaseTag tag = case_of(p);
  if (tag == CaseTag::Case1) {
    SolutionElement e = psi1(p);
    e.scale_ratfunc(quasi);
    return e;
  }
  if (tag == CaseTag::Case2) {
    const CycloNum c = prefactor(p) * q_pochhammer(q, al - ga) *
                       q_pochhammer(q, N - ga + be) /
                       q_pochhammer(q, N - ga + 1);
    SolutionElement e = psi1(p);
    e += psi2(p).scale(c);
    e.scale_ratfunc(quasi);
    return e;
  }
  const CycloNum c = prefactor(p) *
                     CycloNum(ctx, Rational(Integer(1), Integer(N))) *
                     q_pochhammer(q, N - ga + al) *
                     q_pochhammer(q, N - ga + be) /
                     q_pochhammer(q, N - ga + 1);
  SolutionElement e = psi1(p).scale(c_coefficient(p));
  e -= psi2(p);
  e.scale(c);
  e.scale_ratfunc(quasi);
  return e;
}

bool Theorem2Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Theorem2Report verify_theorem2(const Params& p) {
  const CaseTag tag = case_of(p);
  Theorem2Report rep{p, tag, {}, "", };

  const SolutionElement e1 = psi1(p);
  auto [e2, res] = psi2_resolved(p);
  rep.typo_resolution = res.label();

  const SolutionElement l1 = apply_L(p, e1);
  rep.checks.push_back({"annihilates-psi1", l1.is_zero(),
                        l1.is_zero() ? "" : "L psi1 != 0"});

  const SolutionElement l2 = apply_L(p, e2);
  rep.checks.push_back({"annihilates-psi2", l2.is_zero(),
                        l2.is_zero() ? "" : "L psi2 != 0"});

  const SolutionElement cas = casoratian(e1, e2);
  rep.checks.push_back({"casoratian-nonzero", !cas.is_zero(),
                        cas.is_zero() ? "casoratian = 0" : ""});

  const int want2 = (tag == CaseTag::Case2) ? 0 : 1;
  const bool deg_ok = e1.x_degree() == 0 && e2.x_degree() == want2;
  rep.checks.push_back(
      {"x-degree-matches-case", deg_ok,
       deg_ok ? ""
              : "deg psi1 = " + std::to_string(e1.x_degree()) +
                    ", deg psi2 = " + std::to_string(e2.x_degree())});

  if (res.applicable) {
    const bool unique = res.lower_annihilates != res.upper_annihilates;
    rep.checks.push_back({"case3-start-unique", unique,
                          unique ? "" : "resolution " + res.label()});
  }
  return rep;
}

}  // namespace qhyper
