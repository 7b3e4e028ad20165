// sno: command-line front end over libsno. Reads JSON input files, builds a
// request, runs it through the C API and prints the JSON report.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sno/sno.h"

using json = nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240607;

struct InputError {
  std::string code;
  std::string message;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{"IoError", "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError{"SchemaViolation", path + ": " + e.what()};
  }
}

// "0.1,1/2,0.9" -> [{"re":"0.1"},{"re":"1/2"},{"re":"0.9"}]
json parse_ts(const std::string& list) {
  json out = json::array();
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError{"SchemaViolation", "--t: empty entry in \"" + list + "\""};
    out.push_back({{"re", item}});
  }
  if (out.empty()) throw InputError{"SchemaViolation", "--t: no values"};
  return out;
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output);
  if (!out) {
    std::cout << json{{"error", {{"code", "IoError"}, {"message", "cannot write " + output}, {"kind", "input"}}}}
                     .dump(2)
              << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and nilpotent ordering analyses over JSON inputs"};
  app.require_subcommand(1);

  const char* env_backend = std::getenv("SNO_BACKEND");
  std::string backend = env_backend && *env_backend ? env_backend : "exact";
  double eps = 0.0;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  app.add_option("--backend", backend, "exact or float (default: $SNO_BACKEND, else exact)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--eps", eps, "float comparison tolerance (default 1e-9)");
  app.add_option("--seed", seed, "seed for randomized procedures")->capture_default_str();
  app.add_option("-o,--output", output, "write the report here instead of stdout");

  std::string command;
  json request;
  std::string a_path, b_path, f_path, g_path, spec_path, spec_y_path, box_path, samples_path,
      domain_path, c_path, p_path, t_list;
  long trials = -1;
  bool hp = false;

  auto* compare = app.add_subcommand("compare", "compare two representations (a below b?)");
  compare->add_option("a", a_path, "Jordan spec or matrix")->required();
  compare->add_option("b", b_path, "Jordan spec or matrix")->required();

  auto* repr = app.add_subcommand("repr", "SN representation of a spec or matrix");
  repr->add_option("input", a_path)->required();

  auto* fmap = app.add_subcommand("fmap", "representation of f(X)");
  fmap->add_option("--spec", spec_path)->required();
  fmap->add_option("--f", f_path)->required();
  fmap->add_option("--g", g_path, "second function, for the f(X) vs g(Y) GDOD");
  fmap->add_option("--spec-y", spec_y_path);

  auto* gdod = app.add_subcommand("gdod", "dominance and GDOD of two partitions");
  gdod->add_option("p", a_path)->required();
  gdod->add_option("q", b_path)->required();

  auto* majorize = app.add_subcommand("majorize", "is x majorized by y?");
  majorize->add_option("x", a_path)->required();
  majorize->add_option("y", b_path)->required();

  auto* schur = app.add_subcommand("schur", "Schur-Ostrowski check and Schur-convexity falsifier");
  schur->add_option("--f", f_path)->required();
  schur->add_option("--box", box_path, "domain box {c1,c2,c3}; enables the derivative check");
  schur->add_option("--samples", samples_path, "sample points for the derivative check");
  schur->add_option("--domain", domain_path, "sampling box for random points");
  schur->add_option("--trials", trials, "falsifier trials (default 10000)");

  auto* convexity = app.add_subcommand("convexity", "SNO convexity of f between two matrices");
  convexity->add_option("--f", f_path)->required();
  convexity->add_option("--a", a_path)->required();
  convexity->add_option("--b", b_path)->required();
  convexity->add_option("--t", t_list, "comma-separated t values in [0,1]")->required();
  convexity->add_flag("--hp", hp, "also run the contraction identities and items 2-4");
  convexity->add_option("--c", c_path, "contraction (default: drawn from --seed)");
  convexity->add_option("--p", p_path, "orthogonal projection for item 4");

  auto* monotone = app.add_subcommand("monotone", "monotonicity certificate for f between X and Y");
  monotone->add_option("--f", f_path)->required();
  monotone->add_option("--x", a_path)->required();
  monotone->add_option("--y", b_path)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", {{"code", "UsageError"}, {"message", e.what()}, {"kind", "input"}}}}.dump(2)
              << "\n";
    return 2;
  }

  try {
    if (*compare) {
      command = "compare";
      request = {{"a", read_json(a_path)}, {"b", read_json(b_path)}};
    } else if (*repr) {
      command = "repr";
      request = {{"input", read_json(a_path)}};
    } else if (*fmap) {
      command = "fmap";
      request = {{"spec", read_json(spec_path)}, {"f", read_json(f_path)}};
      if (g_path.empty() != spec_y_path.empty())
        throw InputError{"SchemaViolation", "--g and --spec-y go together"};
      if (!g_path.empty()) {
        request["g"] = read_json(g_path);
        request["spec_y"] = read_json(spec_y_path);
      }
    } else if (*gdod) {
      command = "gdod";
      request = {{"p", read_json(a_path)}, {"q", read_json(b_path)}};
    } else if (*majorize) {
      command = "majorize";
      request = {{"x", read_json(a_path)}, {"y", read_json(b_path)}};
    } else if (*schur) {
      command = "schur";
      request = {{"f", read_json(f_path)}};
      if (!box_path.empty()) request["box"] = read_json(box_path);
      if (!samples_path.empty()) request["samples"] = read_json(samples_path);
      if (!domain_path.empty()) request["domain"] = read_json(domain_path);
      if (trials >= 0) request["trials"] = trials;
    } else if (*convexity) {
      command = "convexity";
      request = {{"f", read_json(f_path)},
                 {"a", read_json(a_path)},
                 {"b", read_json(b_path)},
                 {"t", parse_ts(t_list)}};
      if (hp || !c_path.empty() || !p_path.empty()) {
        json h = json::object();
        if (!c_path.empty()) h["c"] = read_json(c_path);
        if (!p_path.empty()) h["p"] = read_json(p_path);
        request["hp"] = h;
      }
    } else if (*monotone) {
      command = "monotone";
      request = {{"f", read_json(f_path)}, {"x", read_json(a_path)}, {"y", read_json(b_path)}};
    }
  } catch (const InputError& e) {
    std::cout << json{{"error", {{"code", e.code}, {"message", e.message}, {"kind", "input"}}}}.dump(2) << "\n";
    return 2;
  }

  sno_context* ctx = sno_context_new();
  if (!ctx) return 4;
  int status = sno_context_set_backend(ctx, backend.c_str(), eps);
  sno_context_set_seed(ctx, seed);
  char* report = nullptr;
  if (status == SNO_OK) status = sno_run(ctx, command.c_str(), request.dump().c_str(), &report);
  int code = status;
  if (status == SNO_OK) {
    code = emit(report, output);
    sno_string_free(report);
  } else {
    std::cout << json::parse(sno_last_error(ctx)).dump(2) << "\n";
  }
  sno_context_free(ctx);
  return code;
}
