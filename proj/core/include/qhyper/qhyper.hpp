#pragma once

#include "qhyper/barnes.hpp"
#include "qhyper/basis.hpp"
#include "qhyper/cyclo.hpp"
#include "qhyper/error.hpp"
#include "qhyper/integrand.hpp"
#include "qhyper/latex.hpp"
#include "qhyper/params.hpp"
#include "qhyper/ratfunc.hpp"
#include "qhyper/rational.hpp"
#include "qhyper/serialize.hpp"
#include "qhyper/solution.hpp"
#include "qhyper/verify.hpp"
