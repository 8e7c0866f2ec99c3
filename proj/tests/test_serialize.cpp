#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <string>

#include "qhyper/latex.hpp"
#include "qhyper/serialize.hpp"

using namespace qhyper;

namespace {

bool braces_balanced(const std::string& s) {
  long depth = 0;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace

TEST_CASE("cyclotomic numbers round-trip through JSON") {
  const auto ctx = CycloContext::get(7);
  const CycloNum a = (CycloNum::one(ctx) - zeta_pow(ctx, 3)).inverse() +
                     CycloNum(ctx, Rational(2, 5)) * zeta_pow(ctx, 5);
  const Json j = to_json(a);
  CHECK(j.at("N") == 7);
  CHECK(cyclonum_from_json(j) == a);

  const std::string s = j.dump();
  CHECK(Json::parse(s).dump() == s);

  CHECK_THROWS_AS(cyclo_coeffs_from_json(ctx, Json::object()),
                  InvalidParameterError);
}

TEST_CASE("solution elements round-trip exactly") {
  for (const Params& p : {Params(3, 1, 1, 1), Params(4, 1, 1, 1),
                          Params(5, 1, 1, 2), Params(5, 2, 1, 2),
                          Params(6, 3, 2, 1)}) {
    for (const SolutionElement& e : {psi1(p), psi2(p)}) {
      const Json j = to_json(e);
      CHECK(solution_from_json(j) == e);
      const std::string s = j.dump();
      CHECK(Json::parse(s).dump() == s);
    }
  }
  // The zero element keeps an empty term list.
  const auto ctx = CycloContext::get(5);
  const Json j = to_json(SolutionElement(ctx));
  CHECK(j.at("terms").empty());
  CHECK(solution_from_json(j).is_zero());
}

TEST_CASE("params round-trip and record normalization") {
  const Params p(5, 1, 3, 2);  // construction swaps to beta <= alpha
  const Json j = to_json(p);
  CHECK(j.at("alpha") == 3);
  CHECK(j.at("beta") == 1);
  CHECK(j.at("swapped") == true);
  CHECK(params_from_json(j) == p);
}

TEST_CASE("basis documents re-emit byte-identically") {
  for (const Params& p : {Params(3, 1, 1, 1), Params(4, 1, 1, 1),
                          Params(5, 1, 1, 2), Params(5, 2, 1, 2),
                          Params(8, 2, 1, 4)}) {
    const Json doc = basis_document(p);
    CHECK(doc.at("params").at("N") == p.N());
    CHECK(solution_from_json(doc.at("psi1")) == psi1(p));
    CHECK(solution_from_json(doc.at("psi2")) == psi2(p));
    const std::string s = doc.dump(2);
    CHECK(Json::parse(s).dump(2) == s);
  }
  // Known content: psi1(3,1,1,1) = 1 + v + v^2, start resolution unused.
  const Json doc = basis_document(Params(3, 1, 1, 1));
  CHECK(doc.at("case") == "CASE1");
  CHECK(doc.at("typo_resolution") == "not-applicable");
  CHECK(doc.at("psi1").at("terms").size() == 1);
}

TEST_CASE("verification reports serialize with stable fields") {
  {
    // beta < alpha makes the CASE3 start-index resolution applicable.
    const Json j = to_json(verify_theorem2(Params(8, 2, 1, 4)));
    CHECK(j.at("case") == "CASE3");
    CHECK(j.at("typo_resolution") == "N-gamma+1");
    for (const auto& c : j.at("checks")) CHECK(c.at("pass") == true);
    const std::string s = j.dump();
    CHECK(Json::parse(s).dump() == s);
  }
  {
    const Theorem3Report rep = verify_theorem3(
        Params(5, 1, 1, 2), {std::complex<double>(0.5, 0.0)}, 1e-6);
    const Json recs = theorem3_records(rep);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].at("pass") == true);
    CHECK(recs[0].at("x")[0] == 0.5);
    CHECK(recs[0].contains("integral"));
    CHECK(recs[0].contains("residue_sum"));
    CHECK(recs[0].contains("closed_form"));
    const std::string s = recs.dump(2);
    CHECK(Json::parse(s).dump(2) == s);
  }
  {
    const Theorem3Report rep = verify_theorem3(
        Params(4, 3, 1, 2), {std::complex<double>(0.5, 0.0)}, 1e-6);
    const Json recs = theorem3_records(rep);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].at("error") == "not-convergent");
    CHECK(recs[0].at("pass") == false);
  }
}

TEST_CASE("latex for rationals and cyclotomic numbers") {
  CHECK(to_latex(Rational(1, 2)) == "\\frac{1}{2}");
  CHECK(to_latex(Rational(-5)) == "-5");
  CHECK(to_latex(Rational(0)) == "0");

  const auto ctx = CycloContext::get(4);
  CHECK(to_latex(CycloNum::zero(ctx)) == "0");
  CHECK(to_latex(zeta_pow(ctx, 1)) == "q");
  CHECK(to_latex(CycloNum::one(ctx) - zeta_pow(ctx, 1)) == "1 - q");
  // a_1 at (N=4, gamma=2): (1-q)(1-q^2) = 2 - 2q over q = i.
  CHECK(to_latex(coeff_a(Params(4, 2, 1, 2), 1)) == "2 - 2q");
}

TEST_CASE("latex for quasi-constant rational functions in w") {
  const auto ctx = CycloContext::get(5);
  CHECK(to_latex_quasi(RatFuncV::constant(CycloNum(ctx, Rational(3)))) == "3");
  CHECK(to_latex_quasi(RatFuncV::monomial(ctx, 2)) == "w^{2}");

  PolyV den = PolyV::constant(CycloNum::one(ctx)) - PolyV::monomial(ctx, 1);
  CHECK(to_latex_quasi(RatFuncV(PolyV::constant(CycloNum::one(ctx)),
                                std::move(den))) == "\\frac{1}{1 - w}");
}

TEST_CASE("latex for solution elements") {
  CHECK(to_latex(SolutionElement(CycloContext::get(5))) == "0");
  CHECK(to_latex(psi1(Params(3, 1, 1, 1))) == "1 + q^{x} + q^{2x}");
  CHECK(to_latex(psi1(Params(5, 1, 1, 2))) == "q^{4x}");

  // The CASE3 second element carries an explicit x q^{4x} term.
  const std::string s = to_latex(psi2(Params(5, 1, 1, 2)));
  CHECK(s.find("x q^{4x}") != std::string::npos);
  CHECK(braces_balanced(s));

  for (const Params& p : {Params(4, 1, 1, 1), Params(5, 2, 1, 2),
                          Params(6, 2, 1, 3), Params(6, 3, 2, 1)}) {
    CHECK(braces_balanced(to_latex(psi1(p))));
    CHECK(braces_balanced(to_latex(psi2(p))));
    CHECK_FALSE(to_latex(psi2(p)).empty());
  }
}
