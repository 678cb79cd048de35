#pragma once

// JSON serialization for the file formats and CLI reports.

#include <nlohmann/json.hpp>
#include <string>

#include "cdl/algebra.hpp"
#include "cdl/pattern.hpp"
#include "cdl/scatter.hpp"

namespace cdl::report {

using json = nlohmann::ordered_json;

json matrix_json(const seed::IntMat& m);
seed::IntMat matrix_from_json(const json& j);

// {"b": [[...]], "delta": [...] optional}
seed::IntMat exchange_matrix_from_json(const json& j);

// list of [exponent-array, numerator-string, denominator-string], canonical order
json poly_json(const alg::MultiPoly& p);
// {"monomial": [...], "factors": [[poly, exp], ...]}
json factored_json(const alg::FactoredSF& f);

// {"arrows": [[i, j, mult], ...]}, 1-based vertices
json quiver_json(const seed::Quiver& q);

json run_json(const pattern::PatternRun& run);
pattern::MutationWord word_from_run_json(const json& j);

// {"ray":[a,b],"normal":[n1,n2],"factors":[[h*n, s]]} per wall
json csd_json(const scatter::Rank2Diagram& d);

// 1-based one-line permutation
json perm_json(const seed::Perm& p);

}  // namespace cdl::report
