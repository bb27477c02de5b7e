#include "hecke/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "hecke/errors.hpp"
#include "hecke/numeric.hpp"

namespace hecke {

using nlohmann::json;

json coweight_to_json(const Coweight& t) {
  json a = json::array();
  for (std::int64_t c : t.n_coords()) a.push_back(c);
  return a;
}

Coweight coweight_from_json(const json& j, int expect_n) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("coweight must be a nonempty array");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("coweight entries must be integers");
    c.push_back(x.get<std::int64_t>());
  }
  if (expect_n >= 0 && static_cast<int>(c.size()) != expect_n)
    throw InvalidArgument("coweight has the wrong rank");
  return Coweight(std::move(c));  // the constructor rejects nonzero sums
}

json function_to_json(const TorusFunction& f) {
  json terms = json::array();
  for (const auto& [t, v] : f.terms()) {
    terms.push_back({{"t", coweight_to_json(t)},
                     {"re", rational_to_string(v.re)},
                     {"im", rational_to_string(v.im)}});
  }
  return {{"n", f.rank()}, {"invariant", f.weyl_invariant()}, {"terms", std::move(terms)}};
}

TorusFunction function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw InvalidArgument("malformed function record");
  int n = j.at("n").get<int>();
  if (n < 2 || n > 16) throw InvalidArgument("function rank out of range");
  TorusFunction f(n);
  for (const auto& term : j.at("terms")) {
    Coweight t = coweight_from_json(term.at("t"), n);
    ExactComplex v(rational_from_string(term.at("re").get<std::string>()),
                   rational_from_string(term.at("im").get<std::string>()));
    f.add(t, v);
  }
  if (j.contains("invariant") && j.at("invariant").get<bool>() != f.weyl_invariant())
    throw InvalidArgument("stored invariance flag contradicts the terms");
  return f;
}

json convolution_to_json(const Convolution& c) {
  json terms = json::array();
  for (const auto& term : c.terms)
    terms.push_back({{"nu", coweight_to_json(term.nu)}, {"coeff", term.coeff.str()}});
  return {{"n", c.lambda.rank()},
          {"p", c.p},
          {"lambda", coweight_to_json(c.lambda)},
          {"mu", coweight_to_json(c.mu)},
          {"terms", std::move(terms)}};
}

Convolution convolution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("mu") || !j.contains("terms"))
    throw InvalidArgument("malformed convolution record");
  int n = j.at("n").get<int>();
  Convolution c{coweight_from_json(j.at("lambda"), n), coweight_from_json(j.at("mu"), n),
                j.at("p").get<long>(), {}};
  for (const auto& term : j.at("terms")) {
    Int coeff(term.at("coeff").get<std::string>());
    if (coeff <= 0) throw InvalidArgument("convolution coefficients must be positive");
    c.terms.push_back({coweight_from_json(term.at("nu"), n), std::move(coeff)});
  }
  for (std::size_t i = 1; i < c.terms.size(); ++i)
    if (!(c.terms[i - 1].nu < c.terms[i].nu))
      throw InvalidArgument("convolution terms out of order");
  return c;
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void RunConfig::validate() const {
  if (n < 2 || n > 8) throw InvalidArgument("n must lie in [2, 8]");
  if (!is_prime(p) || p > 997) throw InvalidArgument("p must be a prime <= 997");
  if (resolution < 2 || resolution > (1 << 20))
    throw InvalidArgument("resolution must lie in [2, 2^20]");
  if (!(tolerance > 0.0) || tolerance >= 1.0)
    throw InvalidArgument("tolerance must lie in (0, 1)");
  if (budget < 1 || budget > 1000000000)
    throw InvalidArgument("budget must lie in [1, 1e9]");
  if (L_max < 1 || L_max > 40) throw InvalidArgument("L_max must lie in [1, 40]");
  if (!(epsilon > 0.0) || epsilon >= 1.0) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (format != "json" && format != "csv")
    throw InvalidArgument("format must be json or csv");
}

json config_to_json(const RunConfig& c) {
  return {{"n", c.n},           {"p", c.p},
          {"resolution", c.resolution}, {"tolerance", c.tolerance},
          {"budget", c.budget}, {"L_max", c.L_max},
          {"epsilon", c.epsilon}, {"cache_dir", c.cache_dir},
          {"format", c.format}};
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  static const std::set<std::string> known{"n",      "p",       "resolution",
                                           "tolerance", "budget", "L_max",
                                           "epsilon",   "cache_dir", "format"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (known.count(key) == 0) throw InvalidArgument("unknown config field: " + key);
  }
  RunConfig c;
  if (j.contains("n")) c.n = j.at("n").get<int>();
  if (j.contains("p")) c.p = j.at("p").get<long>();
  if (j.contains("resolution")) c.resolution = j.at("resolution").get<int>();
  if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
  if (j.contains("budget")) c.budget = j.at("budget").get<std::int64_t>();
  if (j.contains("L_max")) c.L_max = j.at("L_max").get<std::int64_t>();
  if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
  if (j.contains("cache_dir")) c.cache_dir = j.at("cache_dir").get<std::string>();
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

std::string resolve_cache_dir(const std::string& flag_value, const RunConfig& config) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("HECKE_CACHE_DIR"); env && *env) return env;
  if (!config.cache_dir.empty()) return config.cache_dir;
  return "./hecke-cache";
}

}  // namespace hecke
