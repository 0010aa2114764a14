// JSON encodings. Matrices are arrays of rows; a complex entry is [re, im]
// and a bare number is read as a real entry.

#pragma once

#include <json.hpp>

#include "sjtheta/automorphy.hpp"
#include "sjtheta/groups.hpp"
#include "sjtheta/theta.hpp"

namespace sjtheta::io {

using nlohmann::json;

json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const ComplexMatrix& m);
json to_json(const IntMatrix& m);
ComplexMatrix complex_matrix_from_json(const json& j);
IntMatrix int_matrix_from_json(const json& j);

/// {"omega": [[...]], "z": [[...]]}
json to_json(const SiegelJacobiPoint& p);
SiegelJacobiPoint point_from_json(const json& j);

/// {"g": n, "matrix": [[...]]}
json to_json(const SymplecticElement& s);
SymplecticElement symplectic_from_json(const json& j);

/// {"lambda": [[...]], "mu": [[...]], "kappa": [[...]]}
json to_json(const HeisenbergElement& h);
HeisenbergElement heisenberg_from_json(const json& j);

/// {"gamma": {...}, "heisenberg": {...}}
json to_json(const JacobiGroupElement& x);
JacobiGroupElement jacobi_from_json(const json& j);

/// [{"kind": "s"|"t"|"g"|"sigma", ...params}, ...]
json to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const json& j);

/// {"value": [re, im], "tail_bound": x, "terms": n}
json to_json(const ThetaValue& v);
json to_json(const ReductionTrace& t);
json to_json(const TransformationReport& r);

}  // namespace sjtheta::io
