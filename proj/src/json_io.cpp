#include "sno/json_io.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

namespace sno::json_io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::schema_violation, path + ": " + what);
}

const json& object_at(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  return j;
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) bad(path, "unexpected key \"" + k + "\"");
  }
}

const json& field(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

int positive_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 1 || v > std::numeric_limits<int>::max()) bad(path, "expected a positive integer");
  return static_cast<int>(v);
}

mpq_class rational_from(const json& j, const std::string& path) {
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

mpq_class exact_coordinate(const json& j, const std::string& path) {
  if (j.is_string()) return rational_from(j, path);
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_number())
    fail(ErrorCode::backend_mismatch,
         path + ": float numbers are not accepted by the exact backend; write \"p/q\"");
  bad(path, "expected a rational string");
}

double float_coordinate(const json& j, const std::string& path) {
  if (j.is_string()) return rational_from(j, path).get_d();
  return number_at(j, path);
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json verdict_json(const std::optional<SNOVerdict>& v) {
  return v ? json(std::string(to_string(*v))) : json(nullptr);
}

json residuals_json(const std::vector<Residual>& rs) {
  json out = json::object();
  for (const auto& r : rs) out[r.name] = number_or_null(r.value);
  return out;
}

json comparison_json(const SnoComparison& c) {
  json out;
  out["left"] = c.left ? to_json(*c.left) : json(nullptr);
  out["right"] = c.right ? to_json(*c.right) : json(nullptr);
  out["verdict"] = verdict_json(c.verdict);
  out["relation"] = c.relation.empty() ? json(nullptr) : json(c.relation);
  out["error"] = c.error.empty() ? json(nullptr) : json(c.error);
  return out;
}

json variant_json(const ConvexityVariant& v) {
  json pts = json::array();
  for (const auto& p : v.points) {
    json e = comparison_json(p.comparison);
    e["t"] = to_json(p.t);
    e["within_radius"] = p.within_radius;
    pts.push_back(std::move(e));
  }
  return {{"points", pts}, {"consistent", v.consistent}};
}

}  // namespace

Scalar scalar_from_json(const json& j, const Backend& backend, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"re", "im"});
  const json& re = field(j, path, "re");
  const json zero = 0;
  const json& im = j.contains("im") ? j.at("im") : zero;
  if (backend.is_exact()) {
    mpq_class x = exact_coordinate(re, path + ".re");
    return Scalar::exact(std::move(x), exact_coordinate(im, path + ".im"));
  }
  const double x = float_coordinate(re, path + ".re");
  return Scalar::floating(x, float_coordinate(im, path + ".im"), backend.epsilon);
}

json to_json(const Scalar& s) {
  if (s.is_exact())
    return {{"re", rational_to_string(s.exact_re())}, {"im", rational_to_string(s.exact_im())}};
  const auto z = s.to_complex();
  return {{"re", number_or_null(z.real())}, {"im", number_or_null(z.imag())}};
}

ComplexVector vector_from_json(const json& j, const Backend& backend, const std::string& path) {
  array_at(j, path);
  ComplexVector out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(scalar_from_json(j[k], backend, path + "[" + std::to_string(k) + "]"));
  return out;
}

json to_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Partition partition_from_json(const json& j, const std::string& path) {
  array_at(j, path);
  std::vector<int> parts;
  for (std::size_t k = 0; k < j.size(); ++k)
    parts.push_back(positive_int(j[k], path + "[" + std::to_string(k) + "]"));
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

json to_json(const Partition& p) { return json(p.parts()); }

Matrix matrix_from_json(const json& j, const Backend& backend, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"rows", "eigenvalues"});
  const std::string rp = path + ".rows";
  const json& rows = array_at(field(j, path, "rows"), rp);
  if (rows.empty()) bad(rp, "a matrix needs at least one row");
  std::vector<std::vector<Scalar>> data;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string p = rp + "[" + std::to_string(r) + "]";
    auto row = vector_from_json(rows[r], backend, p);
    if (row.size() != rows[0].size()) bad(p, "ragged rows");
    if (row.empty()) bad(p, "empty row");
    data.push_back(std::move(row));
  }
  return Matrix::from_rows(data, backend);
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}};
}

JordanSpec spec_from_json(const json& j, const Backend& backend, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"blocks"});
  const std::string bp = path + ".blocks";
  const json& blocks = array_at(field(j, path, "blocks"), bp);
  JordanSpec spec;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string p = bp + "[" + std::to_string(k) + "]";
    object_at(blocks[k], p);
    only_keys(blocks[k], p, {"eigenvalue", "sizes"});
    Scalar lambda = scalar_from_json(field(blocks[k], p, "eigenvalue"), backend, p + ".eigenvalue");
    std::vector<int> sizes;
    const json& sj = array_at(field(blocks[k], p, "sizes"), p + ".sizes");
    for (std::size_t i = 0; i < sj.size(); ++i)
      sizes.push_back(positive_int(sj[i], p + ".sizes[" + std::to_string(i) + "]"));
    if (sizes.empty()) bad(p + ".sizes", "at least one block size is needed");
    spec.blocks.push_back({lambda, Partition::from_unsorted(std::move(sizes))});
  }
  return spec;
}

SNRepresentation repr_input_from_json(const json& j, const Backend& backend, const std::string& path) {
  object_at(j, path);
  if (j.contains("blocks")) return canonical_repr(spec_from_json(j, backend, path));
  if (j.contains("rows")) {
    Matrix m = matrix_from_json(j, backend, path);
    if (j.contains("eigenvalues"))
      return repr_from_matrix(m, vector_from_json(j.at("eigenvalues"), backend, path + ".eigenvalues"));
    return repr_from_accessible_matrix(m);
  }
  bad(path, "expected a Jordan spec {\"blocks\":...} or a matrix {\"rows\":...}");
}

json to_json(const SNRepresentation& r) {
  json nil = json::array();
  for (const auto& p : r.nilpotent()) nil.push_back(to_json(p));
  return {{"dimension", r.dimension()},
          {"distinct", to_json(r.distinct())},
          {"spectral", to_json(r.spectral())},
          {"nilpotent", nil}};
}

AnalyticFunction function_from_json(const json& j, const Backend& backend, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"polynomial", "oracle", "radius"});
  double radius = std::numeric_limits<double>::infinity();
  if (j.contains("radius")) {
    radius = number_at(j.at("radius"), path + ".radius");
    if (!(radius > 0.0)) bad(path + ".radius", "must be positive");
  }
  if (j.contains("polynomial") == j.contains("oracle"))
    bad(path, "exactly one of \"polynomial\" and \"oracle\" is needed");
  if (j.contains("oracle")) {
    const json& name = j.at("oracle");
    if (!name.is_string()) bad(path + ".oracle", "expected a name");
    if (backend.is_exact())
      fail(ErrorCode::backend_mismatch, path + ".oracle: named oracles run in the float backend only");
    return AnalyticFunction::named(name.get<std::string>(), radius);
  }
  const std::string pp = path + ".polynomial";
  const json& poly = object_at(j.at("polynomial"), pp);
  only_keys(poly, pp, {"coefficients"});
  ComplexVector coeffs = vector_from_json(field(poly, pp, "coefficients"), backend, pp + ".coefficients");
  if (coeffs.empty()) bad(pp + ".coefficients", "at least one coefficient is needed");
  return AnalyticFunction::polynomial(std::move(coeffs), radius);
}

SymmetricFunction symmetric_from_json(const json& j, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"builtin", "polynomial", "arity", "declared"});
  const auto arity = static_cast<std::size_t>(positive_int(field(j, path, "arity"), path + ".arity"));
  if (j.contains("builtin") == j.contains("polynomial"))
    bad(path, "exactly one of \"builtin\" and \"polynomial\" is needed");
  SymmetricFunction f = [&] {
    if (j.contains("builtin")) {
      const json& name = j.at("builtin");
      if (!name.is_string()) bad(path + ".builtin", "expected a name");
      return SymmetricFunction::builtin(name.get<std::string>(), arity);
    }
    const std::string pp = path + ".polynomial";
    const json& poly = object_at(j.at("polynomial"), pp);
    only_keys(poly, pp, {"terms"});
    const json& terms = array_at(field(poly, pp, "terms"), pp + ".terms");
    std::vector<SymmetricFunction::Term> ts;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string tp = pp + ".terms[" + std::to_string(k) + "]";
      object_at(terms[k], tp);
      only_keys(terms[k], tp, {"coefficient", "powers"});
      SymmetricFunction::Term t;
      t.coefficient =
          scalar_from_json(field(terms[k], tp, "coefficient"), Backend::floating(), tp + ".coefficient")
              .to_complex();
      const json& pw = array_at(field(terms[k], tp, "powers"), tp + ".powers");
      for (std::size_t i = 0; i < pw.size(); ++i) {
        if (!pw[i].is_number_integer() || pw[i].get<long long>() < 0)
          bad(tp + ".powers[" + std::to_string(i) + "]", "expected a non-negative integer");
        t.powers.push_back(pw[i].get<unsigned>());
      }
      if (t.powers.size() != arity) bad(tp + ".powers", "one power per variable is needed");
      ts.push_back(std::move(t));
    }
    return SymmetricFunction::polynomial(std::move(ts), arity);
  }();
  if (j.contains("declared")) {
    const json& d = array_at(j.at("declared"), path + ".declared");
    for (const auto& name : d) {
      if (!name.is_string()) bad(path + ".declared", "expected property names");
      f.declared |= static_cast<unsigned>(property_from_name(name.get<std::string>()));
    }
  }
  return f;
}

DomainBox box_from_json(const json& j, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"c1", "c2", "c3", "tolerance"});
  DomainBox box;
  box.c1 = number_at(field(j, path, "c1"), path + ".c1");
  box.c2 = number_at(field(j, path, "c2"), path + ".c2");
  box.c3 = number_at(field(j, path, "c3"), path + ".c3");
  if (j.contains("tolerance")) box.tolerance = number_at(j.at("tolerance"), path + ".tolerance");
  box.validate();
  return box;
}

TTransform transform_from_json(const json& j, const Backend& backend, const std::string& path) {
  object_at(j, path);
  only_keys(j, path, {"i", "j", "beta"});
  TTransform t;
  t.i = static_cast<std::size_t>(positive_int(field(j, path, "i"), path + ".i") - 1);
  t.j = static_cast<std::size_t>(positive_int(field(j, path, "j"), path + ".j") - 1);
  t.beta = scalar_from_json(field(j, path, "beta"), backend, path + ".beta");
  return t;
}

json to_json(const TTransform& t) {
  return {{"i", t.i + 1}, {"j", t.j + 1}, {"beta", to_json(t.beta)}};
}

json to_json(const Decomposition& d) {
  json ts = json::array();
  for (const auto& t : d.transforms) ts.push_back(to_json(t));
  json flagged = json::array();
  for (auto k : d.flagged) flagged.push_back(k + 1);
  return {{"transforms", ts}, {"flagged", flagged}};
}

json to_json(const FxRepresentation& fx) {
  json per = json::array();
  for (const auto& e : fx.per_eigenvalue)
    per.push_back({{"eigenvalue", to_json(e.eigenvalue)},
                   {"kappa", e.kappa ? json(*e.kappa) : json(nullptr)},
                   {"eta", to_json(e.eta)},
                   {"gdod", e.gdod}});
  return {{"repr", to_json(fx.repr)}, {"per_eigenvalue", per}};
}

json to_json(const MonotonicityCertificate& c) {
  json clauses = json::array();
  for (const auto& cl : c.clauses)
    clauses.push_back({{"clause", std::string(to_string(cl.clause))},
                       {"holds", cl.holds},
                       {"detail", cl.detail}});
  return {{"case", std::string(to_string(c.result))},
          {"hypothesis_case", c.hypothesis_case},
          {"clauses", clauses}};
}

json to_json(const HpIdentityReport& r) {
  return {{"residuals", residuals_json(r.residuals)}, {"max_residual", number_or_null(r.max_residual)}};
}

json to_json(const ConvexityReport& r) {
  return {{"raw", variant_json(r.raw)}, {"shifted", variant_json(r.shifted)}};
}

json to_json(const HpItemReport& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    json e = comparison_json(it.comparison);
    e["item"] = it.item;
    e["residuals"] = residuals_json(it.residuals);
    items.push_back(std::move(e));
  }
  return {{"items", items}};
}

json to_json(const OstrowskiReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"sample", e.sample + 1},
                       {"i", e.i + 1},
                       {"j", e.j + 1},
                       {"dr", number_or_null(e.dr)},
                       {"di", number_or_null(e.di)},
                       {"case", e.matched_case},
                       {"pass", e.pass}});
  return {{"pass", r.pass}, {"entries", entries}};
}

json to_json(const FalsifyResult& r) {
  json out = {{"trials_run", r.trials_run}, {"skipped", r.skipped}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"x", to_json(c.x)},
                             {"y", to_json(c.y)},
                             {"fx", to_json(c.fx)},
                             {"fy", to_json(c.fy)},
                             {"trial", c.trial}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json to_json(const PreservingReport& r) {
  return {{"verdict", std::string(to_string(r.verdict))},
          {"reversed", r.reversed},
          {"reason", r.reason}};
}

json error_json(const Error& e) {
  return {{"error", {{"code", std::string(error_name(e.code()))},
                     {"message", e.what()},
                     {"kind", is_input_error(e.code()) ? "input" : "backend"}}}};
}

}  // namespace sno::json_io
