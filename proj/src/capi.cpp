#include "sno/sno.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sno/commands.hpp"

using sno::json_io::json;

struct sno_context {
  sno::CommandOptions options;
  std::string last_error;
};

struct sno_repr {
  sno::SNRepresentation value;
};

struct sno_function {
  sno::AnalyticFunction value;
};

namespace {

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sno_status record(sno_context* ctx, const json& error, sno_status status) {
  if (ctx) ctx->last_error = error.dump();
  return status;
}

json plain_error(const char* code, const std::string& message, const char* kind) {
  return {{"error", {{"code", code}, {"message", message}, {"kind", kind}}}};
}

// Runs body, translating exceptions into a status and the context's error.
template <typename F>
sno_status guarded(sno_context* ctx, F&& body) {
  if (!ctx) return SNO_ERR_INPUT;
  try {
    body();
    ctx->last_error.clear();
    return SNO_OK;
  } catch (const sno::Error& e) {
    return record(ctx, sno::json_io::error_json(e),
                  sno::is_input_error(e.code()) ? SNO_ERR_INPUT : SNO_ERR_BACKEND);
  } catch (const json::exception& e) {
    return record(ctx, plain_error("SchemaViolation", e.what(), "input"), SNO_ERR_INPUT);
  } catch (const std::exception& e) {
    return record(ctx, plain_error("Internal", e.what(), "internal"), SNO_ERR_INTERNAL);
  }
}

json parse(const char* text) {
  if (!text) sno::fail(sno::ErrorCode::schema_violation, "null JSON text");
  return json::parse(text);
}

}  // namespace

extern "C" {

const char* sno_version(void) { return "1.0.0"; }

sno_context* sno_context_new(void) { return new (std::nothrow) sno_context(); }

void sno_context_free(sno_context* ctx) { delete ctx; }

sno_status sno_context_set_backend(sno_context* ctx, const char* name, double epsilon) {
  return guarded(ctx, [&] {
    const std::string n = name ? name : "";
    if (n == "exact") {
      ctx->options.backend = sno::Backend::exact();
    } else if (n == "float") {
      ctx->options.backend = sno::Backend::floating(epsilon > 0.0 ? epsilon : sno::kDefaultEpsilon);
    } else {
      sno::fail(sno::ErrorCode::schema_violation, "unknown backend \"" + n + "\"");
    }
  });
}

void sno_context_set_seed(sno_context* ctx, uint64_t seed) {
  if (ctx) ctx->options.seed = seed;
}

const char* sno_last_error(const sno_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void sno_string_free(char* s) { std::free(s); }

sno_status sno_repr_parse(sno_context* ctx, const char* text, sno_repr** out) {
  return guarded(ctx, [&] {
    if (!out) sno::fail(sno::ErrorCode::schema_violation, "null output pointer");
    auto value = sno::json_io::repr_input_from_json(parse(text), ctx->options.backend);
    *out = new sno_repr{std::move(value)};
  });
}

sno_status sno_repr_to_json(sno_context* ctx, const sno_repr* r, char** out) {
  return guarded(ctx, [&] {
    if (!r || !out) sno::fail(sno::ErrorCode::schema_violation, "null argument");
    *out = copy_out(sno::json_io::to_json(r->value).dump());
  });
}

size_t sno_repr_dimension(const sno_repr* r) { return r ? r->value.dimension() : 0; }

void sno_repr_free(sno_repr* r) { delete r; }

sno_status sno_compare(sno_context* ctx, const sno_repr* x, const sno_repr* y, sno_verdict* out) {
  return guarded(ctx, [&] {
    if (!x || !y || !out) sno::fail(sno::ErrorCode::schema_violation, "null argument");
    switch (sno::compare_sno(x->value, y->value)) {
      case sno::SNOVerdict::equal: *out = SNO_EQUAL; break;
      case sno::SNOVerdict::strict_less: *out = SNO_STRICT_LESS; break;
      case sno::SNOVerdict::weak_less: *out = SNO_WEAK_LESS; break;
      case sno::SNOVerdict::incomparable: *out = SNO_INCOMPARABLE; break;
    }
  });
}

sno_status sno_function_parse(sno_context* ctx, const char* text, sno_function** out) {
  return guarded(ctx, [&] {
    if (!out) sno::fail(sno::ErrorCode::schema_violation, "null output pointer");
    auto value = sno::json_io::function_from_json(parse(text), ctx->options.backend);
    *out = new sno_function{std::move(value)};
  });
}

void sno_function_free(sno_function* f) { delete f; }

sno_status sno_fmap(sno_context* ctx, const sno_function* f, const sno_repr* x, sno_repr** out) {
  return guarded(ctx, [&] {
    if (!f || !x || !out) sno::fail(sno::ErrorCode::schema_violation, "null argument");
    *out = new sno_repr{sno::repr_of_fx(f->value, x->value).repr};
  });
}

sno_status sno_run(sno_context* ctx, const char* command, const char* request_json,
                   char** report_json) {
  return guarded(ctx, [&] {
    if (!command || !report_json) sno::fail(sno::ErrorCode::schema_violation, "null argument");
    const json report = sno::run_command(command, parse(request_json), ctx->options);
    *report_json = copy_out(report.dump(2) + "\n");
  });
}

}  // extern "C"
