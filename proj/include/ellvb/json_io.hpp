#pragma once

#include <json.hpp>

#include "ellvb/classify.hpp"
#include "ellvb/cocycle.hpp"
#include "ellvb/laurent_matrix.hpp"

namespace ellvb {

using Json = nlohmann::json;

// Terms are written {"k": int, "re": float, "im": float}, ascending k.
// A LaurentMatrix is {"n": int, "entries": [...]} with its n*n entries in
// row-major order. All readers throw ParseError on malformed input.

Json to_json(const LaurentPoly& p);
Json to_json(const LaurentMatrix& m);
Json to_json(const Torus& t);
Json to_json(const FactorOfAutomorphy& f);
Json to_json(const BundleDescriptor& d);

LaurentPoly laurent_poly_from_json(const Json& j);
LaurentMatrix laurent_matrix_from_json(const Json& j);
Torus torus_from_json(const Json& j);
FactorOfAutomorphy factor_from_json(const Json& j);
BundleDescriptor descriptor_from_json(const Json& j);

/// A bundle description: a torus plus exactly one of "A"/"matrix" (generator) or
/// "descriptor" (built with normal_form).
FactorOfAutomorphy bundle_from_json(const Json& j);

}  // namespace ellvb
