#include <doctest.h>

#include "sno/commands.hpp"
#include "sno/error.hpp"
#include "sno/json_io.hpp"

using namespace sno;
using json_io::json;

namespace {

Scalar q(long n, long d = 1) { return Scalar::exact(mpq_class(n, d)); }

const Backend kExact = Backend::exact();
const Backend kFloat = Backend::floating();

// Code and message of the error raised by body.
std::pair<ErrorCode, std::string> error_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("expected an error");
  return {ErrorCode::schema_violation, ""};
}

json scalar(const char* re, const char* im = "0") { return {{"re", re}, {"im", im}}; }

json spec(const char* eigen, std::vector<int> sizes) {
  return {{"blocks", json::array({{{"eigenvalue", scalar(eigen)}, {"sizes", sizes}}})}};
}

json run(const std::string& name, const json& request, Backend backend = kExact) {
  return run_command(name, request, CommandOptions{backend, kDefaultSeed});
}

}  // namespace

TEST_CASE("exact scalars accept strings and integers only") {
  CHECK(json_io::scalar_from_json(scalar("-3/4", "2"), kExact) == Scalar::exact(mpq_class(-3, 4), 2));
  CHECK(json_io::scalar_from_json(json{{"re", 5}}, kExact) == q(5));
  CHECK(json_io::scalar_from_json(json{{"re", "0.5"}}, kExact) == q(1, 2));
  CHECK(error_of([] { json_io::scalar_from_json(json{{"re", 0.5}}, kExact); }).first == ErrorCode::backend_mismatch);
}

TEST_CASE("float scalars accept numbers and rational strings") {
  const Scalar s = json_io::scalar_from_json(json{{"re", 0.25}, {"im", "1/2"}}, kFloat);
  CHECK(s.to_complex() == std::complex<double>(0.25, 0.5));
}

TEST_CASE("errors carry a JSON path") {
  const json v = json::array({scalar("1"), {{"re", "1"}, {"im", "x"}}});
  const auto [code, message] = error_of([&] { json_io::vector_from_json(v, kExact); });
  CHECK(code == ErrorCode::schema_violation);
  CHECK(message.find("$[1].im") != std::string::npos);
  const auto extra = error_of([] { json_io::scalar_from_json(json{{"re", "1"}, {"imag", "2"}}, kExact); });
  CHECK(extra.second.find("imag") != std::string::npos);
  // re is read before im, so a bad re is the one reported.
  const auto both = error_of([] { json_io::scalar_from_json(json{{"re", "a"}, {"im", "b"}}, kExact, "$.x"); });
  CHECK(both.second.find("$.x.re") != std::string::npos);
}

TEST_CASE("matrices must be rectangular and non-empty") {
  CHECK(error_of([] { json_io::matrix_from_json(json{{"rows", json::array()}}, kExact); }).first ==
        ErrorCode::schema_violation);
  const json ragged{{"rows", json::array({json::array({scalar("1"), scalar("2")}), json::array({scalar("3")})})}};
  CHECK(error_of([&] { json_io::matrix_from_json(ragged, kExact); }).first == ErrorCode::schema_violation);
}

TEST_CASE("serialized representations round-trip") {
  const json s = spec("1/3", {2, 1});
  const auto r = json_io::repr_input_from_json(s, kExact);
  const json out = json_io::to_json(r);
  CHECK(out["dimension"] == 3);
  CHECK(out["nilpotent"] == json::array({json::array({2, 1})}));
  CHECK(out["distinct"][0]["re"] == "1/3");
  const json back{{"blocks", json::array({{{"eigenvalue", out["distinct"][0]}, {"sizes", out["nilpotent"][0]}}})}};
  CHECK(json_io::to_json(json_io::repr_input_from_json(back, kExact)) == out);
}

TEST_CASE("float output writes numbers and null for non-finite values") {
  const json z = json_io::to_json(Scalar::floating(std::numeric_limits<double>::infinity(), 1.5));
  CHECK(z["re"].is_null());
  CHECK(z["im"] == 1.5);
}

TEST_CASE("exact functions cannot be oracles") {
  CHECK(error_of([] { json_io::function_from_json(json{{"oracle", "exp"}}, kExact); }).first ==
        ErrorCode::backend_mismatch);
  const auto f = json_io::function_from_json(json{{"oracle", "exp"}, {"radius", 3.0}}, kFloat);
  CHECK(f.radius() == 3.0);
}

TEST_CASE("transforms are one-based on the wire") {
  const json t{{"i", 1}, {"j", 3}, {"beta", scalar("1/2")}};
  const auto tr = json_io::transform_from_json(t, kExact);
  CHECK(tr.i == 0);
  CHECK(tr.j == 2);
  CHECK(json_io::to_json(tr) == t);
  CHECK(error_of([] { json_io::transform_from_json(json{{"i", 0}, {"j", 1}, {"beta", 1}}, kExact); }).first ==
        ErrorCode::schema_violation);
}

TEST_CASE("majorize command on the complex example") {
  const json x = json::array({scalar("4"), scalar("1", "1"), scalar("3")});
  const json y = json::array({scalar("2", "1"), scalar("5"), scalar("1")});
  const json out = run("majorize", {{"x", x}, {"y", y}});
  CHECK(out["version"] == 1);
  CHECK(out["command"] == "majorize");
  CHECK(out["verdict"] == "strict");
  CHECK(out["x_sorted"][2] == scalar("1", "1"));
  CHECK(out["decomposition"]["transforms"].is_array());
}

TEST_CASE("fmap, gdod and compare commands") {
  const json sq{{"polynomial", {{"coefficients", json::array({scalar("0"), scalar("0"), scalar("1")})}}}};
  const json fx = run("fmap", {{"spec", spec("1", {4, 3, 2})}, {"f", sq}});
  CHECK(fx["fx"]["repr"]["nilpotent"][0] == json::array({4, 3, 2}));
  const json at0 = run("fmap", {{"spec", spec("0", {4, 3, 2})}, {"f", sq}});
  CHECK(at0["fx"]["repr"]["nilpotent"][0] == json::array({2, 2, 2, 1, 1, 1}));
  CHECK(at0["gy"].is_null());

  const json g = run("gdod", {{"p", {3, 2}}, {"q", {4, 2}}});
  CHECK(g["p_dominated_by_q"] == true);
  CHECK(g["strict"] == true);
  CHECK(g["gdod"] == json::array({1, 1}));

  const json c = run("compare", {{"a", spec("1", {2, 1})}, {"b", spec("1", {3})}});
  CHECK(c["verdict"] == "strict_less");
  CHECK(c["relation"] == "less");
}

TEST_CASE("monotone and schur commands") {
  const json id{{"polynomial", {{"coefficients", json::array({scalar("0"), scalar("1")})}}}};
  const json lo{{"blocks", json::array({{{"eigenvalue", scalar("1")}, {"sizes", {1}}},
                                        {{"eigenvalue", scalar("0")}, {"sizes", {2}}}})}};
  const json hi{{"blocks", json::array({{{"eigenvalue", scalar("2")}, {"sizes", {1}}},
                                        {{"eigenvalue", scalar("0")}, {"sizes", {1, 1}}}})}};
  const json m = run("monotone", {{"f", id}, {"x", lo}, {"y", hi}});
  CHECK(m["certificate"]["case"] == "A");
  CHECK(m["direct"] == "weak_less");

  const json s = run("schur", {{"f", {{"builtin", "sumsq"}, {"arity", 3}}}, {"trials", 500}});
  CHECK(s["falsify"]["counterexample"].is_null());
  CHECK(s["ostrowski"].is_null());
  CHECK(s["seed"] == kDefaultSeed);
  CHECK(run("schur", {{"f", {{"builtin", "sumsq"}, {"arity", 3}}}, {"trials", 500}}) == s);
}

TEST_CASE("requests are checked for shape") {
  CHECK(error_of([] { run("majorize", {{"x", json::array()}}); }).first == ErrorCode::schema_violation);
  CHECK(error_of([] { run("gdod", {{"p", {1}}, {"q", {1}}, {"r", {1}}}); }).first == ErrorCode::schema_violation);
  CHECK(error_of([] { run("frobnicate", json::object()); }).first == ErrorCode::schema_violation);
}

TEST_CASE("error objects name the code and its kind") {
  const json e = json_io::error_json(Error(ErrorCode::rank_ambiguous, "gap too small"));
  CHECK(e["error"]["code"] == "RankAmbiguous");
  CHECK(e["error"]["kind"] == "backend");
  CHECK(json_io::error_json(Error(ErrorCode::not_majorized, "x"))["error"]["kind"] == "input");
}
