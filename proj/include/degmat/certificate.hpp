#pragma once

#include <json.hpp>

#include "degmat/generators.hpp"
#include "degmat/groebner.hpp"
#include "degmat/tensor.hpp"

namespace degmat {

using Json = nlohmann::json;

Json ring_to_json(const PolyRing& ring);

Json qmat_to_json(const QMat& M);
QMat qmat_from_json(const Json& j);

// Slices as nested arrays of rational strings.
Json tensor_to_json(const Tensor& T);
Tensor tensor_from_json(const Json& j);

Json generator_set_to_json(const GeneratorSet& set, bool include_elements = true);

// Row-major list of canonically serialized entries.
Json poly_matrix_to_json(const PolyMatrix& M);

Json basis_check_to_json(const BasisCheckResult& r);

std::string dump_certificate(const Json& cert);

// Empty path writes to stdout.
void write_certificate(const Json& cert, const std::string& path);

}  // namespace degmat
