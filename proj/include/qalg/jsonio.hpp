#pragma once

#include <string>

#include <json.hpp>

#include "qalg/presentation.hpp"
#include "qalg/qmatrix.hpp"

namespace qalg {

using Json = nlohmann::ordered_json;

/// [{coeff: scalar-string, word: [[family, i, j], ...]}, ...], leading term
/// first.
Json poly_to_json(const AlgebraPresentation& a, const NcPoly& p);
NcPoly poly_from_json(const AlgebraPresentation& a, const Json& j);

/// {n, r, eigenvalues: [scalar-string, ...]}
Json xi_to_json(const XiSpec& xi);
XiSpec xi_from_json(const Json& j);

/// Oriented relation list: [{lhs, rhs, relation}, ...].
Json relations_to_json(const AlgebraPresentation& a);

/// Nonzero entries of a tensor-space operator: [{i, s, j, t, value}, ...].
Json tensor_operator_to_json(const TensorOperator& op);

} // namespace qalg
