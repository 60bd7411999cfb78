#pragma once

#include <json.hpp>

#include <complex>
#include <optional>
#include <vector>

#include "nahodge/dvr_linear.hpp"
#include "nahodge/hodge_newton.hpp"
#include "nahodge/polygons.hpp"

namespace nahodge {

using Json = nlohmann::ordered_json;

// Descriptor: {"backend": "padic", "p": 2, "N": 40} or
// {"backend": "laurent", "N": 40}.
Json descriptor_to_json(const FieldDescriptor& desc);
FieldDescriptor descriptor_from_json(const Json& j);

// Matrix: {"field": {...}, "rows": n, "cols": m, "entries": [["..."], ...]}.
Json matrix_to_json(const MatrixF& m);
/// `override_field` replaces the embedded descriptor when given.
MatrixF matrix_from_json(const Json& j, const std::optional<FieldDescriptor>& override_field = {});

Json polynomial_to_json(const PolynomialF& p);
Json valuation_to_json(const Valuation& v);
std::vector<Json> valuations_to_json(const std::vector<Valuation>& vs);

// Polygon: {"n": n, "partial_sums": ["0", ...], "vertices": [[0, "0"], ...]}.
Json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

Json smith_to_json(const SmithDecomposition& s);
Json split_to_json(const SlopeSplit& s);
Json report_to_json(const DecompositionReport& r);
Json decomposition_to_json(const Decomposition& d);

using Complex = std::complex<double>;
// Complex matrix: {"n": n, "entries": [[[re, im], ...], ...]}.
Json complex_matrix_to_json(const std::vector<std::vector<Complex>>& rows);
std::vector<std::vector<Complex>> complex_rows_from_json(const Json& j);
std::vector<Complex> complex_vector_from_json(const Json& j);
Json complex_vector_to_json(const std::vector<Complex>& v);

}  // namespace nahodge
