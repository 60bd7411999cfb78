#include "nahodge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "nahodge/archimedean.hpp"
#include "nahodge/hodge_newton.hpp"
#include "nahodge/invariance_harness.hpp"
#include "nahodge/json_io.hpp"
#include "nahodge/svg.hpp"

namespace nahodge {

namespace {

struct Options {
  std::string input;
  std::string field;
  std::string out_path;
  std::string format = "json";
  std::string kind = "newton";
  bool overlay = false;
  std::string overlay_path;
  size_t index = 0;
  size_t k = 0;
  std::string route = "auto";
  bool diagonal = false;
  std::string which;
  size_t trials = 100;
  std::optional<uint64_t> seed;
  std::optional<size_t> n;
  std::string profile;
  std::optional<double> tol;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) fail(ErrorKind::ParseError, "cannot write '" + o.out_path + "'");
  f << text;
}

void emit_json(const Options& o, const Json& j, std::ostream& out) { emit(o, j.dump(2) + "\n", out); }

MatrixF load_matrix(const Options& o, std::ostream& err) {
  const Json j = read_json(o.input);
  std::optional<FieldDescriptor> over;
  if (!o.field.empty()) {
    over = parse_descriptor(o.field);
    if (j.contains("field") && descriptor_from_json(j.at("field")) != *over)
      err << "warning: --field " << over->to_string() << " overrides the descriptor in " << o.input << "\n";
  }
  return matrix_from_json(j, over);
}

std::vector<Rational> parse_profile(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

Json weyl_to_json(const WeylReport& r) {
  Json j;
  j["singular_values"] = r.sigma;
  j["eigenvalues"] = complex_vector_to_json(r.eigenvalues);
  Json rows = Json::array();
  for (const auto& w : r.rows) {
    Json row;
    row["i"] = w.i;
    row["sum_log_sigma"] = w.log_sigma;
    row["sum_log_abs_lambda"] = w.log_lambda;
    row["holds"] = w.holds;
    rows.push_back(std::move(row));
  }
  j["chain"] = std::move(rows);
  j["chain_holds"] = r.chain_holds;
  j["endpoint_relative_error"] = r.endpoint_error;
  j["endpoint_equal"] = r.endpoint_equal;
  j["passed"] = r.passed();
  return j;
}

Json hn_to_json(const ArchHnReport& r) {
  Json j;
  j["index"] = r.index;
  j["U"] = complex_matrix_to_json(r.U.rows());
  j["norm_max"] = r.norm;
  j["lower_left_residual"] = r.lower_left;
  j["upper_right_residual"] = r.upper_right;
  j["top_sigma_error"] = r.top_sigma_error;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  return j;
}

Json prop45_to_json(const Prop45Report& r) {
  Json j;
  j["max_principal_minor_deviation"] = r.max_minor_deviation;
  j["char_poly_deviation"] = r.coefficient_deviation;
  j["moduli_relative_error"] = r.moduli_error;
  j["newton_D"] = polygon_to_json(r.newton_d);
  j["newton_UDV"] = polygon_to_json(r.newton_udv);
  j["polygons_match"] = r.polygons_match;
  j["note"] = "archimedean Newton polygon: associated polygon of -log|lambda|, logs rounded to 1e-9";
  j["passed"] = r.passed;
  return j;
}

int cmd_polygon(const Options& o, std::ostream& out, std::ostream& err) {
  const MatrixF a = load_matrix(o, err);
  if (o.kind != "newton" && o.kind != "hodge") fail(ErrorKind::ParseError, "--kind must be newton or hodge");
  if (o.format == "svg") {
    if (o.overlay) {
      emit(o, render_polygon_svg(hodge_polygon(a), "Hodge", newton_polygon_of_matrix(a), "Newton"), out);
    } else {
      const bool newton = o.kind == "newton";
      emit(o, render_polygon_svg(newton ? newton_polygon_of_matrix(a) : hodge_polygon(a), newton ? "Newton" : "Hodge"),
           out);
    }
    return kExitOk;
  }
  Json j = polygon_to_json(o.kind == "newton" ? newton_polygon_of_matrix(a) : hodge_polygon(a));
  j["kind"] = o.kind;
  emit_json(o, j, out);
  return kExitOk;
}

int cmd_charpoly(const Options& o, std::ostream& out, std::ostream& err) {
  const MatrixF a = load_matrix(o, err);
  PolynomialF p;
  if (o.route == "auto") p = char_poly(a);
  else if (o.route == "minors") p = char_poly_principal_minors(a);
  else if (o.route == "det") p = char_poly_det_expansion(a);
  else if (o.route == "berkowitz") p = char_poly_berkowitz(a);
  else fail(ErrorKind::ParseError, "--route must be auto, minors, det or berkowitz");
  emit_json(o, polynomial_to_json(p), out);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const MatrixF a = load_matrix(o, err);
  const Decomposition d = hodge_newton_decompose(a, o.index, o.diagonal);
  emit_json(o, decomposition_to_json(d), out);
  if (const ClauseResult* bad = d.report.first_failure()) {
    err << "error: verification failed: " << bad->name << ": " << bad->detail << "\n";
    return kExitMath;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  TrialConfig cfg;
  if (!o.field.empty()) cfg.descriptor = parse_descriptor(o.field);
  cfg.trials = o.trials;
  cfg.seed = *o.seed;
  cfg.slope_profile = parse_profile(o.profile);
  if (o.n) cfg.n = *o.n;
  else if (!cfg.slope_profile.empty()) cfg.n = cfg.slope_profile.size();
  const TrialReport r = run_trials(cfg, parse_trial_kind(o.which));
  emit_json(o, trial_report_to_json(r), out);
  return r.failures > 0 ? kExitTrialFailure : kExitOk;
}

int cmd_arch(const Options& o, std::ostream& out) {
  const Json j = read_json(o.input);
  if (o.which == "weyl") {
    const WeylReport r = weyl_report(ComplexMatrix::from_rows(complex_rows_from_json(j)));
    emit_json(o, weyl_to_json(r), out);
    return r.passed() ? kExitOk : kExitTrialFailure;
  }
  if (o.which == "hn") {
    const ArchHnReport r = arch_hn_check(ComplexMatrix::from_rows(complex_rows_from_json(j)), o.index, o.tol.value_or(1e-6));
    emit_json(o, hn_to_json(r), out);
    return r.passed ? kExitOk : kExitTrialFailure;
  }
  if (o.which == "prop45") {
    if (!j.contains("U") || !j.contains("D") || !j.contains("V"))
      fail(ErrorKind::ParseError, "prop45 input needs \"U\", \"D\" and \"V\"");
    const Prop45Report r = prop45_check(ComplexMatrix::from_rows(complex_rows_from_json(j.at("U"))),
                                        complex_vector_from_json(j.at("D")),
                                        ComplexMatrix::from_rows(complex_rows_from_json(j.at("V"))), o.tol.value_or(1e-9));
    emit_json(o, prop45_to_json(r), out);
    return r.passed ? kExitOk : kExitTrialFailure;
  }
  fail(ErrorKind::ParseError, "arch check must be weyl, hn or prop45");
}

int cmd_render(const Options& o, std::ostream& out) {
  const Json base = read_json(o.input);
  std::optional<Polygon> over;
  std::string over_label;
  if (!o.overlay_path.empty()) {
    const Json oj = read_json(o.overlay_path);
    over = polygon_from_json(oj);
    over_label = oj.value("kind", std::string("overlay"));
  }
  emit(o, render_polygon_svg(polygon_from_json(base), base.value("kind", std::string("polygon")), over, over_label), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge and Newton polygons over discretely valued fields"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", o.input, "matrix JSON file")->required();
    sub->add_option("--field", o.field, "field override, e.g. padic:p=2,N=40 or laurent:N=40");
    sub->add_option("--out", o.out_path, "output path (default: stdout)");
  };

  auto* polygon = app.add_subcommand("polygon", "Newton or Hodge polygon of a matrix");
  add_io(polygon, true);
  polygon->add_option("--kind", o.kind, "newton | hodge")->check(CLI::IsMember({"newton", "hodge"}));
  polygon->add_option("--format", o.format, "json | svg")->check(CLI::IsMember({"json", "svg"}));
  polygon->add_flag("--overlay", o.overlay, "svg: draw the Newton polygon over the Hodge polygon");

  auto* snf = app.add_subcommand("snf", "Smith normal form");
  add_io(snf, true);

  auto* wedge = app.add_subcommand("wedge", "k-th exterior power");
  add_io(wedge, true);
  wedge->add_option("-k,--power", o.k, "exterior power")->required();

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  add_io(charpoly, true);
  charpoly->add_option("--route", o.route, "auto | minors | det | berkowitz");

  auto* decompose = app.add_subcommand("decompose", "Hodge-Newton decomposition at an index");
  add_io(decompose, true);
  decompose->add_option("--index,-i", o.index, "break index i")->required();
  decompose->add_flag("--diagonal", o.diagonal, "block-diagonal form (needs a Hodge slope gap)");

  auto* verify = app.add_subcommand("verify", "seeded invariance trial campaign");
  verify->add_option("which", o.which, "newton | hodge | top_product | weyl")
      ->required()
      ->check(CLI::IsMember({"newton", "hodge", "top_product", "weyl"}));
  verify->add_option("--trials", o.trials, "number of trials");
  verify->add_option("--seed", o.seed, "64-bit seed")->required();
  verify->add_option("--n", o.n, "matrix size");
  verify->add_option("--profile", o.profile, "eigenvalue valuations, e.g. 0,0,1");
  verify->add_option("--field", o.field, "field, e.g. padic:p=2,N=40");
  verify->add_option("--out", o.out_path, "output path (default: stdout)");

  auto* arch = app.add_subcommand("arch", "complex-matrix checks");
  arch->add_option("which", o.which, "weyl | hn | prop45")->required()->check(CLI::IsMember({"weyl", "hn", "prop45"}));
  arch->add_option("input", o.input, "complex matrix JSON (prop45: {\"U\", \"D\", \"V\"})")->required();
  arch->add_option("--index,-i", o.index, "break index for hn");
  arch->add_option("--tol", o.tol, "tolerance (hn: 1e-6, prop45: 1e-9)");
  arch->add_option("--out", o.out_path, "output path (default: stdout)");

  auto* render = app.add_subcommand("render", "SVG of a polygon JSON file");
  render->add_option("input", o.input, "polygon JSON")->required();
  render->add_option("--overlay", o.overlay_path, "second polygon JSON drawn on top");
  render->add_option("--out", o.out_path, "output path (default: stdout)");

  std::vector<const char*> argv{"nahodge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (polygon->parsed()) return cmd_polygon(o, out, err);
    if (snf->parsed()) {
      emit_json(o, smith_to_json(smith_normal_form(load_matrix(o, err))), out);
      return kExitOk;
    }
    if (wedge->parsed()) {
      emit_json(o, matrix_to_json(wedge_power(load_matrix(o, err), o.k)), out);
      return kExitOk;
    }
    if (charpoly->parsed()) return cmd_charpoly(o, out, err);
    if (decompose->parsed()) return cmd_decompose(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (arch->parsed()) return cmd_arch(o, out);
    if (render->parsed()) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitParse : kExitMath;
  }
  return kExitParse;
}

}  // namespace nahodge
