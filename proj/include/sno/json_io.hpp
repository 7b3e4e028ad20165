#pragma once

// JSON encodings of the library's values and reports. Every parse error is an
// Error(schema_violation) naming the offending path, except float numbers in
// the exact backend, which are a backend_mismatch.

#include <string>

#include <json.hpp>

#include "sno/majorization.hpp"
#include "sno/matrix_function.hpp"
#include "sno/ordering.hpp"
#include "sno/schur.hpp"
#include "sno/sn_repr.hpp"

namespace sno::json_io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Exact: {"re":"p/q","im":"r/s"}; integers are accepted as numbers too.
// Float: numbers, or rational strings rounded to double. "im" defaults to 0.
Scalar scalar_from_json(const json& j, const Backend& backend, const std::string& path = "$");
json to_json(const Scalar& s);

ComplexVector vector_from_json(const json& j, const Backend& backend, const std::string& path = "$");
json to_json(const ComplexVector& v);

Partition partition_from_json(const json& j, const std::string& path = "$");
json to_json(const Partition& p);

Matrix matrix_from_json(const json& j, const Backend& backend, const std::string& path = "$");
json to_json(const Matrix& m);

JordanSpec spec_from_json(const json& j, const Backend& backend, const std::string& path = "$");

// A Jordan spec, or a matrix {"rows":...} with optional "eigenvalues"; a
// matrix without eigenvalues must be triangular or 2x2.
SNRepresentation repr_input_from_json(const json& j, const Backend& backend,
                                      const std::string& path = "$");
json to_json(const SNRepresentation& r);

// {"polynomial":{"coefficients":[...]},"radius":R} or {"oracle":"exp"}.
AnalyticFunction function_from_json(const json& j, const Backend& backend,
                                    const std::string& path = "$");

// {"builtin":"sumsq","arity":3} or
// {"polynomial":{"terms":[{"coefficient":{..},"powers":[2,0,0]},...]},"arity":3}.
SymmetricFunction symmetric_from_json(const json& j, const std::string& path = "$");

DomainBox box_from_json(const json& j, const std::string& path = "$");

// Indices are 1-based in JSON.
TTransform transform_from_json(const json& j, const Backend& backend, const std::string& path = "$");
json to_json(const TTransform& t);

json to_json(const Decomposition& d);
json to_json(const FxRepresentation& fx);
json to_json(const MonotonicityCertificate& c);
json to_json(const HpIdentityReport& r);
json to_json(const ConvexityReport& r);
json to_json(const HpItemReport& r);
json to_json(const OstrowskiReport& r);
json to_json(const FalsifyResult& r);
json to_json(const PreservingReport& r);

json error_json(const Error& e);

}  // namespace sno::json_io
