#include "sno/commands.hpp"

#include <random>

#include <Eigen/Dense>

#include "sno/eigen_bridge.hpp"

namespace sno {

using json_io::json;
using json_io::to_json;

namespace {

constexpr std::size_t kDefaultTrials = 10000;
constexpr std::size_t kOstrowskiSamples = 32;

const json& need(const json& request, const char* key) {
  if (!request.is_object()) fail(ErrorCode::schema_violation, "$: expected an object");
  auto it = request.find(key);
  if (it == request.end()) fail(ErrorCode::schema_violation, std::string("$: missing key \"") + key + "\"");
  return *it;
}

void only_keys(const json& request, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : request.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(ErrorCode::schema_violation, "$: unexpected key \"" + k + "\"");
  }
}

json header(const std::string& command) {
  return {{"version", json_io::kSchemaVersion}, {"command", command}};
}

std::size_t count_at(const json& j, const char* path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(ErrorCode::schema_violation, std::string(path) + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

json compare(const json& req, const CommandOptions& o) {
  only_keys(req, {"a", "b"});
  const auto a = json_io::repr_input_from_json(need(req, "a"), o.backend, "$.a");
  const auto b = json_io::repr_input_from_json(need(req, "b"), o.backend, "$.b");
  json out = header("compare");
  out["verdict"] = std::string(to_string(compare_sno(a, b)));
  out["relation"] = std::string(sno_relation(a, b));
  out["a"] = to_json(a);
  out["b"] = to_json(b);
  return out;
}

json repr(const json& req, const CommandOptions& o) {
  only_keys(req, {"input"});
  json out = header("repr");
  out["repr"] = to_json(json_io::repr_input_from_json(need(req, "input"), o.backend, "$.input"));
  return out;
}

json fmap(const json& req, const CommandOptions& o) {
  only_keys(req, {"spec", "f", "g", "spec_y"});
  const auto rx = json_io::repr_input_from_json(need(req, "spec"), o.backend, "$.spec");
  const auto f = json_io::function_from_json(need(req, "f"), o.backend, "$.f");
  json out = header("fmap");
  out["fx"] = to_json(repr_of_fx(f, rx));
  if (req.contains("g") != req.contains("spec_y"))
    fail(ErrorCode::schema_violation, "$: \"g\" and \"spec_y\" go together");
  if (req.contains("g")) {
    const auto ry = json_io::repr_input_from_json(req.at("spec_y"), o.backend, "$.spec_y");
    const auto g = json_io::function_from_json(req.at("g"), o.backend, "$.g");
    out["gy"] = to_json(repr_of_fx(g, ry));
    json dirs = json::array();
    for (const auto& d : gdod_f_g(f, rx, g, ry))
      dirs.push_back({{"direction", d.g_below_f ? "g_below_f" : "f_below_g"}, {"gdod", d.values}});
    out["gdod_f_g"] = dirs;
  } else {
    out["gy"] = nullptr;
    out["gdod_f_g"] = nullptr;
  }
  return out;
}

json gdod_cmd(const json& req, const CommandOptions&) {
  only_keys(req, {"p", "q"});
  const Partition p = json_io::partition_from_json(need(req, "p"), "$.p");
  const Partition q = json_io::partition_from_json(need(req, "q"), "$.q");
  json out = header("gdod");
  const bool below = dominance_check(p, q), above = dominance_check(q, p);
  out["p_dominated_by_q"] = below;
  out["q_dominated_by_p"] = above;
  out["strict"] = below != above;
  out["gdod"] = below ? json(gdod_vector(p, q)) : above ? json(gdod_vector(q, p)) : json(nullptr);
  return out;
}

json majorize(const json& req, const CommandOptions& o) {
  only_keys(req, {"x", "y"});
  const auto x = json_io::vector_from_json(need(req, "x"), o.backend, "$.x");
  const auto y = json_io::vector_from_json(need(req, "y"), o.backend, "$.y");
  if (x.size() != y.size()) fail(ErrorCode::dimension_mismatch, "x and y need the same length");
  const auto verdict = majorize_check(x, y);
  json out = header("majorize");
  out["verdict"] = std::string(to_string(verdict));
  out["x_sorted"] = to_json(sort_desc(x));
  out["y_sorted"] = to_json(sort_desc(y));
  out["decomposition"] =
      verdict == MajorizationVerdict::strict ? to_json(t_transform_decompose(x, y)) : json(nullptr);
  return out;
}

SampleDomain domain_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::schema_violation, "$.domain: expected an object");
  SampleDomain d;
  auto num = [&](const char* key, double& slot) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number())
      fail(ErrorCode::schema_violation, std::string("$.domain.") + key + ": expected a number");
    slot = j.at(key).get<double>();
  };
  for (const auto& [k, v] : j.items())
    if (k != "re_lo" && k != "re_hi" && k != "im_lo" && k != "im_hi")
      fail(ErrorCode::schema_violation, "$.domain: unexpected key \"" + k + "\"");
  num("re_lo", d.re_lo);
  num("re_hi", d.re_hi);
  num("im_lo", d.im_lo);
  num("im_hi", d.im_hi);
  if (d.re_lo > d.re_hi || d.im_lo > d.im_hi)
    fail(ErrorCode::schema_violation, "$.domain: empty sampling box");
  return d;
}

json schur(const json& req, const CommandOptions& o) {
  only_keys(req, {"f", "box", "samples", "trials", "domain"});
  const SymmetricFunction f = json_io::symmetric_from_json(need(req, "f"), "$.f");
  const std::size_t trials = req.contains("trials") ? count_at(req.at("trials"), "$.trials") : kDefaultTrials;
  const SampleDomain domain = req.contains("domain") ? domain_from_json(req.at("domain")) : SampleDomain{};
  const Backend fb = Backend::floating(o.backend.is_exact() ? kDefaultEpsilon : o.backend.epsilon);

  std::vector<ComplexVector> samples;
  if (req.contains("samples")) {
    const json& s = req.at("samples");
    if (!s.is_array()) fail(ErrorCode::schema_violation, "$.samples: expected an array");
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto v = json_io::vector_from_json(s[k], fb, "$.samples[" + std::to_string(k) + "]");
      if (v.size() != f.arity())
        fail(ErrorCode::dimension_mismatch, "$.samples[" + std::to_string(k) + "]: wrong length");
      samples.push_back(std::move(v));
    }
  } else {
    std::mt19937_64 rng(trial_seed(o.seed, 0x5a4d));
    std::uniform_real_distribution<double> re(domain.re_lo, domain.re_hi), im(domain.im_lo, domain.im_hi);
    for (std::size_t k = 0; k < kOstrowskiSamples; ++k) {
      ComplexVector v;
      for (std::size_t i = 0; i < f.arity(); ++i) v.push_back(Scalar::floating(re(rng), im(rng), fb.epsilon));
      samples.push_back(std::move(v));
    }
  }

  json out = header("schur");
  out["function"] = f.name();
  out["arity"] = f.arity();
  out["declared"] = property_names(f.declared);
  out["seed"] = o.seed;
  out["looks_symmetric"] = f.looks_symmetric(o.seed);
  out["ostrowski"] = req.contains("box")
                         ? to_json(schur_ostrowski_check(f, json_io::box_from_json(req.at("box"), "$.box"), samples))
                         : json(nullptr);
  out["falsify"] = to_json(schur_convex_falsify(f, f.arity(), trials, o.seed, domain));
  return out;
}

json convexity(const json& req, const CommandOptions& o) {
  only_keys(req, {"f", "a", "b", "t", "hp"});
  const auto f = json_io::function_from_json(need(req, "f"), o.backend, "$.f");
  const Matrix a = json_io::matrix_from_json(need(req, "a"), o.backend, "$.a");
  const Matrix b = json_io::matrix_from_json(need(req, "b"), o.backend, "$.b");
  const ComplexVector ts = json_io::vector_from_json(need(req, "t"), o.backend, "$.t");
  json out = header("convexity");
  out["report"] = to_json(convexity_check(f, a, b, ts));
  out["hp"] = nullptr;
  if (!req.contains("hp")) return out;

  const json& hp = req.at("hp");
  if (!hp.is_object()) fail(ErrorCode::schema_violation, "$.hp: expected an object");
  for (const auto& [k, v] : hp.items())
    if (k != "c" && k != "p") fail(ErrorCode::schema_violation, "$.hp: unexpected key \"" + k + "\"");
  const std::size_t n = a.rows();
  const bool given = hp.contains("c");
  // A drawn contraction is float, so the item checks move to the float
  // backend with it.
  const Backend items_backend =
      given ? o.backend : Backend::floating(o.backend.is_exact() ? kDefaultEpsilon : o.backend.epsilon);
  const Matrix c = given ? json_io::matrix_from_json(hp.at("c"), o.backend, "$.hp.c")
                         : random_contraction(n, o.seed);
  Matrix p(n, n, items_backend);
  if (hp.contains("p")) {
    p = json_io::matrix_from_json(hp.at("p"), items_backend, "$.hp.p");
  } else {
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) p(i, i) = Scalar::one(items_backend);
  }

  json ids = json::array();
  for (const auto& t : ts) {
    const double tv = t.to_complex().real();
    if (!(tv > 0.0 && tv < 1.0)) continue;
    json e = to_json(hp_identities_check(c, a, b, tv));
    e["t"] = to_json(t);
    ids.push_back(std::move(e));
  }
  const auto items = hp_item_checks(f, {a.to_backend(items_backend), b.to_backend(items_backend)},
                                    {c.to_backend(items_backend)}, p);
  out["hp"] = {{"contraction", to_json(c)},
               {"contraction_source", given ? "input" : "seeded"},
               {"projection", to_json(p)},
               {"identities", ids},
               {"items", to_json(items)["items"]}};
  return out;
}

json monotone(const json& req, const CommandOptions& o) {
  only_keys(req, {"f", "x", "y"});
  const auto f = json_io::function_from_json(need(req, "f"), o.backend, "$.f");
  const auto rx = json_io::repr_input_from_json(need(req, "x"), o.backend, "$.x");
  const auto ry = json_io::repr_input_from_json(need(req, "y"), o.backend, "$.y");
  json out = header("monotone");
  out["hypothesis"] = std::string(to_string(compare_sno(rx, ry)));
  out["certificate"] = to_json(monotonicity_certificate(f, rx, ry));
  out["direct"] = std::string(to_string(monotonicity_verify_direct(f, rx, ry)));
  return out;
}

}  // namespace

Matrix random_contraction(std::size_t n, std::uint64_t seed, double norm) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = g(rng);
      m(i, j) = {re, g(rng)};
    }
  const double s = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
  if (s > 0.0) m *= norm / s;
  return from_eigen(m);
}

json run_command(const std::string& name, const json& request, const CommandOptions& options) {
  if (name == "compare") return compare(request, options);
  if (name == "repr") return repr(request, options);
  if (name == "fmap") return fmap(request, options);
  if (name == "gdod") return gdod_cmd(request, options);
  if (name == "majorize") return majorize(request, options);
  if (name == "schur") return schur(request, options);
  if (name == "convexity") return convexity(request, options);
  if (name == "monotone") return monotone(request, options);
  fail(ErrorCode::schema_violation, "unknown command \"" + name + "\"");
}

}  // namespace sno
