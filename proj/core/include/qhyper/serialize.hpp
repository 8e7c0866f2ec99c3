#pragma once

#include <json.hpp>

#include "qhyper/barnes.hpp"
#include "qhyper/basis.hpp"
#include "qhyper/solution.hpp"

namespace qhyper {

// ordered_json keeps insertion order, so emission is deterministic and
// parse -> re-emit is byte-identical.
using Json = nlohmann::ordered_json;

// Coefficients as "p/q" strings (lowest terms, explicit sign), ascending
// power of zeta.
Json cyclo_coeffs_to_json(const CycloNum& a);
CycloNum cyclo_coeffs_from_json(const CycloContextPtr& ctx, const Json& j);

// {"N": n, "coeffs": [...]}.
Json to_json(const CycloNum& a);
CycloNum cyclonum_from_json(const Json& j);

// {"N": n, "terms": [{"j": j, "num": [[...], ...], "den": [[...], ...]}]}.
Json to_json(const SolutionElement& e);
SolutionElement solution_from_json(const Json& j);

// {"N":, "alpha":, "beta":, "gamma":, "swapped":} (normalized values).
Json to_json(const Params& p);
Params params_from_json(const Json& j);

Json to_json(const Theorem2Report& rep);

// One record per x: {params, x, integral: [re,im], residue_sum: [re,im],
// closed_form: [re,im], max_deviation, pass}. A precondition failure yields
// a single record carrying an "error" field.
Json theorem3_records(const Theorem3Report& rep);

// The basis document emitted by the CLI; parseable and re-emittable
// byte-identically.
Json basis_document(const Params& p);

}  // namespace qhyper
