#pragma once

#include <cstdint>
#include <string>

#include "sno/json_io.hpp"

namespace sno {

struct CommandOptions {
  Backend backend = Backend::exact();
  std::uint64_t seed = kDefaultSeed;
};

// Runs one analysis on a JSON request and returns its report. The request and
// report shapes are the ones published under schemas/v1. Throws Error.
json_io::json run_command(const std::string& name, const json_io::json& request,
                          const CommandOptions& options);

// A float n x n matrix with spectral norm `norm`, from a Gaussian draw.
Matrix random_contraction(std::size_t n, std::uint64_t seed, double norm = 0.9);

}  // namespace sno
