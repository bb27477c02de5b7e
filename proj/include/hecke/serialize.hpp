#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hecke/cartan.hpp"
#include "hecke/torus.hpp"
#include "hecke/version.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

inline constexpr const char* kVersion = version;

// Coweight <-> JSON array of n-coordinates, e.g. [1,0,-1].
nlohmann::json coweight_to_json(const Coweight& t);
Coweight coweight_from_json(const nlohmann::json& j, int expect_n = -1);

// TorusFunction <-> {"n", "invariant", "terms": [{"t", "re", "im"}]} with the
// rational coefficients as exact strings and the terms in the total order.
nlohmann::json function_to_json(const TorusFunction& f);
TorusFunction function_from_json(const nlohmann::json& j);

// Convolution table <-> {"n", "p", "lambda", "mu", "terms": [{"nu","coeff"}]}.
nlohmann::json convolution_to_json(const Convolution& c);
Convolution convolution_from_json(const nlohmann::json& j);

// Settings shared by the CLI subcommands.  Every run report embeds the
// resolved config and the library version.
struct RunConfig {
  int n = 2;
  long p = 2;
  int resolution = 256;
  double tolerance = 1e-6;
  std::int64_t budget = 2000000;  // enumeration budget (transversal size cap)
  std::int64_t L_max = 8;
  double epsilon = 0.5;
  std::string cache_dir;  // empty = unset; see resolve_cache_dir
  std::string format = "json";

  void validate() const;  // throws InvalidArgument outside documented ranges
};

nlohmann::json config_to_json(const RunConfig& c);
// Rejects unknown fields; missing fields keep their defaults.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// Precedence: explicit flag > HECKE_CACHE_DIR environment > config file >
// ./hecke-cache.
std::string resolve_cache_dir(const std::string& flag_value, const RunConfig& config);

}  // namespace hecke
