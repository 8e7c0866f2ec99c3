#pragma once

#include <string>

#include "qhyper/cyclo.hpp"
#include "qhyper/ratfunc.hpp"
#include "qhyper/solution.hpp"

namespace qhyper {

std::string to_latex(const Rational& r);
std::string to_latex(const CycloNum& a);  // polynomial in q

// A rational function read in the variable w = q^{Nx}.
std::string to_latex_quasi(const RatFuncV& r);

// Renders sum_{j,k} x^j g_{jk}(q^{Nx}) q^{kx} via the quasi-constant
// decomposition.
std::string to_latex(const SolutionElement& e);

}  // namespace qhyper
