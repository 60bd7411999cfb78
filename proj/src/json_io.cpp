#include "nahodge/json_io.hpp"

namespace nahodge {

Json descriptor_to_json(const FieldDescriptor& desc) {
  Json j;
  j["backend"] = desc.is_padic() ? "padic" : "laurent";
  if (desc.is_padic()) j["p"] = desc.prime;
  j["N"] = desc.precision;
  return j;
}

FieldDescriptor descriptor_from_json(const Json& j) {
  try {
    const std::string backend = j.at("backend").get<std::string>();
    const int N = j.contains("N") ? j.at("N").get<int>() : kDefaultPrecision;
    if (backend == "padic") return FieldDescriptor::padic(j.at("p").get<long>(), N);
    if (backend == "laurent") return FieldDescriptor::laurent(N);
    fail(ErrorKind::ParseError, "unknown backend '" + backend + "'");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("field descriptor: ") + e.what());
  }
}

Json matrix_to_json(const MatrixF& m) {
  Json j;
  j["field"] = descriptor_to_json(m.descriptor());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

MatrixF matrix_from_json(const Json& j, const std::optional<FieldDescriptor>& override_field) {
  try {
    FieldDescriptor desc;
    if (override_field)
      desc = *override_field;
    else if (j.contains("field"))
      desc = descriptor_from_json(j.at("field"));
    else
      fail(ErrorKind::ParseError, "matrix has no field descriptor");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : j.at("entries")) {
      std::vector<std::string> row;
      for (const auto& e : r) row.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      rows.push_back(std::move(row));
    }
    MatrixF m = MatrixF::parse(desc, rows);
    if (j.contains("rows") && j.at("rows").get<size_t>() != m.rows())
      fail(ErrorKind::ParseError, "'rows' does not match entries");
    if (j.contains("cols") && j.at("cols").get<size_t>() != m.cols())
      fail(ErrorKind::ParseError, "'cols' does not match entries");
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("matrix: ") + e.what());
  }
}

Json polynomial_to_json(const PolynomialF& p) {
  Json j;
  j["field"] = descriptor_to_json(p.descriptor());
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(x.to_string());
  j["coefficients"] = std::move(c);
  return j;
}

Json valuation_to_json(const Valuation& v) { return v.to_string(); }

std::vector<Json> valuations_to_json(const std::vector<Valuation>& vs) {
  std::vector<Json> out;
  for (const auto& v : vs) out.push_back(valuation_to_json(v));
  return out;
}

Json polygon_to_json(const Polygon& p) {
  Json j;
  j["n"] = p.length();
  Json sums = Json::array();
  for (const auto& y : p.partial_sums()) sums.push_back(to_string(y));
  j["partial_sums"] = std::move(sums);
  Json verts = Json::array();
  for (const auto& [x, y] : p.vertices()) verts.push_back(Json::array({x, to_string(y)}));
  j["vertices"] = std::move(verts);
  return j;
}

Polygon polygon_from_json(const Json& j) {
  try {
    std::vector<Rational> y;
    for (const auto& s : j.at("partial_sums")) y.push_back(parse_rational(s.get<std::string>()));
    if (j.contains("n") && j.at("n").get<size_t>() + 1 != y.size())
      fail(ErrorKind::ParseError, "'n' does not match partial_sums");
    return Polygon(std::move(y));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("polygon: ") + e.what());
  }
}

Json smith_to_json(const SmithDecomposition& s) {
  Json j;
  j["U"] = matrix_to_json(s.U);
  j["D"] = matrix_to_json(s.D);
  j["V"] = matrix_to_json(s.V);
  j["certificates"] = valuations_to_json(s.certificates);
  j["rank"] = s.rank;
  j["precision_loss"] = s.precision_loss;
  return j;
}

Json split_to_json(const SlopeSplit& s) {
  Json j;
  j["index"] = s.index;
  j["P"] = polynomial_to_json(s.P);
  j["Q"] = polynomial_to_json(s.Q);
  j["B"] = polynomial_to_json(s.B);
  j["C"] = polynomial_to_json(s.C);
  j["residual_valuation"] = valuation_to_json(s.residual_valuation);
  j["precision_loss"] = s.precision_loss;
  j["bezout_loss"] = s.bezout_loss;
  j["hensel_steps"] = s.iterations;
  return j;
}

Json report_to_json(const DecompositionReport& r) {
  Json j;
  j["all_passed"] = r.all_passed();
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json cj;
    cj["clause"] = c.name;
    cj["passed"] = c.passed;
    cj["residual"] = valuation_to_json(c.residual);
    cj["detail"] = c.detail;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["index"] = d.index;
  j["diagonal"] = d.diagonal;
  j["U"] = matrix_to_json(d.U);
  j["conjugated"] = matrix_to_json(d.conjugated);
  j["top_block"] = matrix_to_json(d.top_block);
  j["bottom_block"] = matrix_to_json(d.bottom_block);
  Json res;
  res["off_diagonal"] = valuation_to_json(d.off_diagonal_valuation);
  res["lower_left"] = valuation_to_json(d.lower_left_valuation);
  res["b_inv_c"] = valuation_to_json(d.b_inv_c_valuation);
  j["residual_valuations"] = std::move(res);
  j["iterations"] = d.iterations;
  j["iteration_bound"] = d.iteration_bound;
  j["iteration_trace"] = valuations_to_json(d.trace);
  j["step_valuations"] = valuations_to_json(d.step_valuations);
  j["hodge_slopes_at_split"] = Json::array({to_string(d.hodge_slope_top), to_string(d.hodge_slope_bottom)});
  j["working_precision"] = d.working_precision;
  j["split"] = split_to_json(d.split);
  j["report"] = report_to_json(d.report);
  return j;
}

Json complex_matrix_to_json(const std::vector<std::vector<Complex>>& rows) {
  Json j;
  j["n"] = rows.size();
  Json entries = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& z : r) row.push_back(Json::array({z.real(), z.imag()}));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

namespace {
Complex complex_from_json(const Json& z) {
  if (z.is_number()) return {z.get<double>(), 0.0};
  if (!z.is_array() || z.size() != 2) fail(ErrorKind::ParseError, "complex entry must be [re, im]");
  return {z[0].get<double>(), z[1].get<double>()};
}
}  // namespace

std::vector<std::vector<Complex>> complex_rows_from_json(const Json& j) {
  try {
    std::vector<std::vector<Complex>> rows;
    for (const auto& r : j.at("entries")) {
      std::vector<Complex> row;
      for (const auto& z : r) row.push_back(complex_from_json(z));
      rows.push_back(std::move(row));
    }
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail(ErrorKind::ParseError, "complex matrix must be square");
    if (j.contains("n") && j.at("n").get<size_t>() != rows.size())
      fail(ErrorKind::ParseError, "'n' does not match entries");
    return rows;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("complex matrix: ") + e.what());
  }
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
  try {
    std::vector<Complex> v;
    for (const auto& z : j) v.push_back(complex_from_json(z));
    return v;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("complex vector: ") + e.what());
  }
}

Json complex_vector_to_json(const std::vector<Complex>& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(Json::array({z.real(), z.imag()}));
  return j;
}

}  // namespace nahodge
