#include "qhyper/latex.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qhyper {

namespace {

using MonoFn = std::function<std::string(long)>;

std::string abs_rational_latex(const Rational& r) {
  Integer num = abs(r.get_num());
  const Integer& den = r.get_den();
  if (den == 1) return num.get_str();
  return "\\frac{" + num.get_str() + "}{" + den.get_str() + "}";
}

// One signed term; bodies are concatenated with " + " / " - " by join_terms.
struct Term {
  int sign;  // +1 or -1
  std::string body;
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].sign < 0) out += "-";
    } else {
      out += terms[i].sign < 0 ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

// mono may be empty (power zero); coefficient 1 then still prints as "1".
Term rational_term(const Rational& c, const std::string& mono) {
  int sign = sgn(c) < 0 ? -1 : 1;
  Rational a = abs(c);
  if (mono.empty()) return {sign, abs_rational_latex(a)};
  if (a == 1) return {sign, mono};
  return {sign, abs_rational_latex(a) + mono};
}

std::string cyclo_latex(const CycloNum& a) {
  if (a.is_zero()) return "0";
  std::vector<Term> terms;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string mono;
    if (i == 1) mono = "q";
    else if (i > 1) mono = "q^{" + std::to_string(i) + "}";
    terms.push_back(rational_term(c[i], mono));
  }
  return join_terms(terms);
}

// Coefficient in front of a monomial: rationals keep their sign outside,
// genuine cyclotomic combinations are parenthesized.
Term cyclo_term(const CycloNum& c, const std::string& mono) {
  if (c.is_rational()) return rational_term(c.rational_value(), mono);
  std::string body = "\\left(" + cyclo_latex(c) + "\\right)";
  return {1, mono.empty() ? body : body + mono};
}

std::string poly_latex(const PolyV& p, const MonoFn& mono) {
  if (p.degree() < 0) return "0";
  std::vector<Term> terms;
  for (long i = 0; i <= p.degree(); ++i) {
    CycloNum c = p.coeff(i);
    if (c.is_zero()) continue;
    terms.push_back(cyclo_term(c, mono(i)));
  }
  return join_terms(terms);
}

bool is_single_term(const PolyV& p) {
  int n = 0;
  for (long i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) ++n;
  return n <= 1;
}

// Renders a rational function with the given variable notation; scalars fall
// back to plain coefficient formatting so signs merge into the sum.
Term ratfunc_term(const RatFuncV& r, const MonoFn& mono,
                  const std::string& tail) {
  if (r.is_polynomial()) {
    const PolyV& p = r.poly();
    if (p.degree() <= 0) {
      CycloNum c = p.degree() < 0 ? CycloNum::zero(r.context()) : p.coeff(0);
      return cyclo_term(c, tail);
    }
    if (is_single_term(p)) {
      // c * var^d: merge the variable power into the monomial string.
      long d = p.degree();
      std::string m = mono(d);
      std::string full = m.empty() ? tail : (tail.empty() ? m : m + " " + tail);
      return cyclo_term(p.coeff(d), full);
    }
    std::string body = "\\left(" + poly_latex(p, mono) + "\\right)";
    return {1, tail.empty() ? body : body + tail};
  }
  // The canonical monic denominator reads "-1 + w"; flipping both signs
  // restores the natural "1 - w" form.
  PolyV num = r.num(), den = r.den();
  CycloNum low = CycloNum::zero(r.context());
  for (long i = 0; i <= den.degree(); ++i) {
    if (!den.coeff(i).is_zero()) {
      low = den.coeff(i);
      break;
    }
  }
  if (low.is_rational() && sgn(low.rational_value()) < 0) {
    num = -num;
    den = -den;
  }
  std::string body = "\\frac{" + poly_latex(num, mono) + "}{" +
                     poly_latex(den, mono) + "}";
  return {1, tail.empty() ? body : body + tail};
}

std::string w_mono(long m) {
  if (m == 0) return "";
  if (m == 1) return "w";
  return "w^{" + std::to_string(m) + "}";
}

}  // namespace

std::string to_latex(const Rational& r) {
  if (sgn(r) < 0) return "-" + abs_rational_latex(r);
  return abs_rational_latex(r);
}

std::string to_latex(const CycloNum& a) { return cyclo_latex(a); }

std::string to_latex_quasi(const RatFuncV& r) {
  Term t = ratfunc_term(r, w_mono, "");
  return (t.sign < 0 ? "-" : "") + t.body;
}

std::string to_latex(const SolutionElement& e) {
  QuasiDecomposition d = decompose_quasi(e);
  const long N = d.N;
  auto x_mono = [&](long m) -> std::string {
    if (m == 0) return "";
    if (m == 1) return "q^{" + std::to_string(N) + "x}";
    return "q^{" + std::to_string(m * N) + "x}";
  };
  std::vector<Term> out_terms;
  for (const auto& [j, row] : d.comp) {
    std::vector<Term> inner;
    for (long k = 0; k < static_cast<long>(row.size()); ++k) {
      const RatFuncV& g = row[static_cast<std::size_t>(k)];
      if (g.is_zero()) continue;
      std::string tail;
      if (k == 1) tail = "q^{x}";
      else if (k > 1) tail = "q^{" + std::to_string(k) + "x}";
      inner.push_back(ratfunc_term(g, x_mono, tail));
    }
    if (inner.empty()) continue;
    std::string body = join_terms(inner);
    if (j == 0) {
      // Splice the x^0 group's terms directly into the top-level sum.
      for (auto& t : inner) out_terms.push_back(t);
      continue;
    }
    std::string xp = j == 1 ? "x" : "x^{" + std::to_string(j) + "}";
    if (inner.size() == 1 && inner[0].sign > 0) {
      out_terms.push_back({1, xp + " " + body});
    } else {
      out_terms.push_back({1, xp + "\\left(" + body + "\\right)"});
    }
  }
  return join_terms(out_terms);
}

}  // namespace qhyper
