#include "qhyper/serialize.hpp"

#include "qhyper/error.hpp"

namespace qhyper {

Json cyclo_coeffs_to_json(const CycloNum& a) {
  Json arr = Json::array();
  for (const auto& c : a.coeffs()) arr.push_back(to_fraction_string(c));
  return arr;
}

CycloNum cyclo_coeffs_from_json(const CycloContextPtr& ctx, const Json& j) {
  if (!j.is_array())
    throw InvalidParameterError("CycloNum coefficients must be an array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& s : j) c.push_back(parse_fraction(s.get<std::string>()));
  return CycloNum::from_coeffs(ctx, std::move(c));
}

Json to_json(const CycloNum& a) {
  Json j;
  j["N"] = a.order();
  j["coeffs"] = cyclo_coeffs_to_json(a);
  return j;
}

CycloNum cyclonum_from_json(const Json& j) {
  const auto ctx = CycloContext::get(j.at("N").get<int>());
  return cyclo_coeffs_from_json(ctx, j.at("coeffs"));
}

namespace {

Json poly_to_json(const PolyV& p) {
  Json arr = Json::array();
  if (p.is_zero()) {
    // The zero polynomial still needs one coefficient entry to parse back.
    arr.push_back(cyclo_coeffs_to_json(CycloNum::zero(p.context())));
    return arr;
  }
  for (const auto& c : p.coeffs()) arr.push_back(cyclo_coeffs_to_json(c));
  return arr;
}

PolyV poly_from_json(const CycloContextPtr& ctx, const Json& j) {
  std::vector<CycloNum> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(cyclo_coeffs_from_json(ctx, c));
  return PolyV(ctx, std::move(coeffs));
}

}  // namespace

Json to_json(const SolutionElement& e) {
  Json j;
  j["N"] = e.context()->order();
  Json terms = Json::array();
  for (const auto& [deg, r] : e.terms()) {
    Json t;
    t["j"] = deg;
    t["num"] = poly_to_json(r.num());
    t["den"] = poly_to_json(r.den());
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SolutionElement solution_from_json(const Json& j) {
  const auto ctx = CycloContext::get(j.at("N").get<int>());
  SolutionElement e(ctx);
  for (const auto& t : j.at("terms")) {
    RatFuncV r(poly_from_json(ctx, t.at("num")),
               poly_from_json(ctx, t.at("den")));
    e += SolutionElement::term(t.at("j").get<int>(), std::move(r));
  }
  return e;
}

Json to_json(const Params& p) {
  Json j;
  j["N"] = p.N();
  j["alpha"] = p.alpha();
  j["beta"] = p.beta();
  j["gamma"] = p.gamma();
  j["swapped"] = p.swapped();
  return j;
}

Params params_from_json(const Json& j) {
  return Params(j.at("N").get<int>(), j.at("alpha").get<int>(),
                j.at("beta").get<int>(), j.at("gamma").get<int>());
}

Json to_json(const Theorem2Report& rep) {
  Json j;
  j["params"] = to_json(rep.params);
  j["case"] = case_name(rep.tag);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["typo_resolution"] = rep.typo_resolution;
  return j;
}

Json theorem3_records(const Theorem3Report& rep) {
  Json arr = Json::array();
  if (!rep.error.empty() && rep.entries.empty()) {
    Json j;
    j["params"] = to_json(rep.params);
    j["error"] = rep.error;
    j["pass"] = false;
    arr.push_back(std::move(j));
    return arr;
  }
  for (const auto& e : rep.entries) {
    Json j;
    j["params"] = to_json(rep.params);
    j["x"] = Json::array({e.x.real(), e.x.imag()});
    j["integral"] = Json::array({e.integral.real(), e.integral.imag()});
    j["residue_sum"] = Json::array({e.residue.real(), e.residue.imag()});
    j["closed_form"] =
        Json::array({e.closed_form.real(), e.closed_form.imag()});
    j["max_deviation"] = e.max_deviation;
    j["pass"] = e.pass;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json basis_document(const Params& p) {
  auto [e2, res] = psi2_resolved(p);
  Json j;
  j["params"] = to_json(p);
  j["case"] = case_name(case_of(p));
  j["typo_resolution"] = res.label();
  j["psi1"] = to_json(psi1(p));
  j["psi2"] = to_json(e2);
  return j;
}

}  // namespace qhyper
