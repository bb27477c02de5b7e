// Command-line front end.  Subcommands: satake, convolve, spherical,
// plancherel, amplifier build|verify, kronecker approx|defect, selftest.
// Exit 0 on success, 2 on validation errors, 3 when verify/selftest fails.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/amplifier.hpp"
#include "hecke/cache.hpp"
#include "hecke/cartan.hpp"
#include "hecke/errors.hpp"
#include "hecke/kronecker.hpp"
#include "hecke/satake.hpp"
#include "hecke/selfcheck.hpp"
#include "hecke/serialize.hpp"
#include "hecke/spectral.hpp"
#include "hecke/torus.hpp"
#include "hecke/weyl.hpp"

using nlohmann::json;

namespace {

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoll(piece, &used));
    if (used != piece.size()) throw hecke::InvalidArgument("bad integer list: " + s);
  }
  if (out.empty()) throw hecke::InvalidArgument("empty integer list");
  return out;
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(piece, &used));
    if (used != piece.size()) throw hecke::InvalidArgument("bad real list: " + s);
  }
  if (out.empty()) throw hecke::InvalidArgument("empty real list");
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw hecke::InvalidArgument("cannot open output file " + out_path);
  f << text;
  if (!f.good()) throw hecke::Error("write failed on " + out_path);
}

// every report carries the resolved configuration and the library version
json wrap(const hecke::RunConfig& cfg, const std::string& command) {
  json out;
  out["version"] = hecke::kVersion;
  out["command"] = command;
  out["config"] = hecke::config_to_json(cfg);
  return out;
}

std::string csv_header(const hecke::RunConfig& cfg, const std::string& command) {
  std::ostringstream os;
  os << "# " << command << " version " << hecke::kVersion << "\n"
     << "# config " << hecke::config_to_json(cfg).dump() << "\n";
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw hecke::InvalidArgument("cannot open " + path);
  json j;
  f >> j;
  return j;
}

json verification_report_json(const hecke::VerificationReport& rep) {
  json out;
  out["support_exponent"] = rep.support_exponent;
  out["support_r"] = rep.support_r;
  out["shell_c1"] = rep.shell_c1;
  out["shell_c2"] = rep.shell_c2;
  out["supnorm"] = rep.supnorm;
  out["outside_max"] = rep.outside_max;
  out["supnorm_delta_fit"] = rep.delta_fit;
  out["eigenvalue"] = rep.eigenvalue;
  out["min_spectral"] = rep.min_spectral;
  out["sweep"] = json::array();
  for (const auto& pt : rep.sweep)
    out["sweep"].push_back(
        {{"N", pt.N}, {"q1", pt.q1}, {"supnorm", pt.supnorm}, {"r", pt.r}});
  out["items"] = json::array();
  for (const auto& it : rep.items)
    out["items"].push_back({{"name", it.name},
                            {"pass", it.pass},
                            {"measured", it.measured},
                            {"note", it.note}});
  out["pass"] = rep.pass;
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"spherical-function analysis and amplifier kernels for SL_n over Q_p"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path, out_path, cache_flag, format_flag;
  app.add_option("--config", config_path, "JSON config file merged over the defaults");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--cache-dir", cache_flag,
                 "cache directory (beats HECKE_CACHE_DIR and the config file)");
  app.add_option("--format", format_flag, "output format for tables")
      ->check(CLI::IsMember({"json", "csv"}));

  int n_flag = -1;
  long p_flag = -1;
  int res_flag = -1;
  app.add_option("--n", n_flag, "rank n of SL_n");
  app.add_option("--p", p_flag, "the prime");

  std::string lambda_str, mu_str, theta_str, alpha_str;

  CLI::App* sat = app.add_subcommand("satake", "transform of one double coset class");
  sat->add_option("--lambda", lambda_str, "dominant coweight, comma-separated")
      ->required();

  CLI::App* conv = app.add_subcommand("convolve", "double coset convolution table");
  conv->add_option("--lambda", lambda_str, "first dominant coweight")->required();
  conv->add_option("--mu", mu_str, "second dominant coweight")->required();

  std::vector<std::string> t0_strs;
  CLI::App* sph = app.add_subcommand("spherical", "spherical-function values at t0");
  sph->add_option("--theta", theta_str, "unitary parameter angles, comma-separated")
      ->required();
  sph->add_option("--t0", t0_strs, "coweight to evaluate at (repeatable)")->required();

  CLI::App* pl = app.add_subcommand("plancherel", "density table over the grid");
  pl->add_option("--resolution", res_flag, "nodes per angle");

  CLI::App* amp = app.add_subcommand("amplifier", "kernel construction and checks");
  amp->fallthrough();
  amp->require_subcommand(1);
  std::int64_t L_flag = 1, N_flag = 0;
  double eps_flag = -1.0;
  CLI::App* ab = amp->add_subcommand("build", "assemble the kernel at scale N");
  ab->add_option("--L", L_flag, "starting amplifier length");
  ab->add_option("--N", N_flag, "scale (q1 is chosen near N/2L..N/L)")->required();
  ab->add_option("--theta", theta_str, "target unitary parameter")->required();
  ab->add_option("--epsilon", eps_flag, "eigenvalue demand 1/epsilon");

  std::string kernel_path;
  int grid_flag = -1, samples_flag = 64;
  CLI::App* av = amp->add_subcommand("verify", "check a built kernel end to end");
  av->add_option("--kernel", kernel_path, "kernel JSON from `amplifier build`")
      ->required();
  av->add_option("--grid", grid_flag, "spectral grid resolution");
  av->add_option("--samples", samples_flag, "double coset classes sampled per check");

  CLI::App* kr = app.add_subcommand("kronecker", "simultaneous approximation");
  kr->fallthrough();
  kr->require_subcommand(1);
  double keps_flag = 0.1;
  std::int64_t kN_flag = 0, kK_flag = 8;
  CLI::App* ka = kr->add_subcommand("approx", "denominator search in the window");
  ka->add_option("--alpha", alpha_str, "targets in [0,1), comma-separated")->required();
  ka->add_option("--eps", keps_flag, "wrap-distance tolerance")->required();
  ka->add_option("--N", kN_flag, "window scale")->required();
  CLI::App* kd = kr->add_subcommand("defect", "equidistribution defect of the orbit");
  kd->add_option("--alpha", alpha_str, "targets in [0,1), comma-separated")->required();
  kd->add_option("--N", kN_flag, "orbit length")->required();
  kd->add_option("--K", kK_flag, "frequency cutoff");

  CLI::App* st = app.add_subcommand("selftest", "run the library checks at (n, p)");
  (void)st;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  hecke::RunConfig cfg;
  if (!config_path.empty()) cfg = hecke::load_config(config_path);
  if (n_flag > 0) cfg.n = n_flag;
  if (p_flag > 0) cfg.p = p_flag;
  if (res_flag > 0) cfg.resolution = res_flag;
  if (eps_flag > 0) cfg.epsilon = eps_flag;
  if (!format_flag.empty()) cfg.format = format_flag;
  cfg.validate();

  if (sat->parsed()) {
    hecke::Coweight lam(parse_ints(lambda_str));
    hecke::CacheKey key = hecke::make_key(cfg.n, cfg.p, "satake", {lam});
    hecke::DiskCache cache(hecke::resolve_cache_dir(cache_flag, cfg));
    std::optional<hecke::TorusFunction> hit = cache.get_function(key);
    hecke::TorusFunction chi = hit ? *hit : hecke::satake_chi(lam, cfg.p);
    if (!hit) cache.put_function(key, chi);
    json out = wrap(cfg, "satake");
    out["p"] = cfg.p;
    out["lambda"] = hecke::coweight_to_json(lam);
    out["cache_hit"] = hit.has_value();
    out["transform"] = hecke::function_to_json(chi);
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (conv->parsed()) {
    hecke::Coweight lam(parse_ints(lambda_str)), mu(parse_ints(mu_str));
    hecke::CacheKey key = hecke::make_key(cfg.n, cfg.p, "convolution", {lam, mu});
    hecke::DiskCache cache(hecke::resolve_cache_dir(cache_flag, cfg));
    std::optional<hecke::Convolution> hit = cache.get_convolution(key);
    hecke::Convolution table =
        hit ? *hit : hecke::double_coset_convolve(lam, mu, cfg.p);
    if (!hit) cache.put_convolution(key, table);
    json out = wrap(cfg, "convolve");
    out["cache_hit"] = hit.has_value();
    out["result"] = hecke::convolution_to_json(table);
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (sph->parsed()) {
    std::vector<double> theta = parse_reals(theta_str);
    if (static_cast<int>(theta.size()) != cfg.n - 1)
      throw hecke::InvalidArgument("--theta needs n-1 angles");
    std::vector<hecke::Coweight> points;
    for (const std::string& s : t0_strs) {
      hecke::Coweight t(parse_ints(s));
      if (t.rank() != cfg.n) throw hecke::InvalidArgument("--t0 rank must equal n");
      points.push_back(t);
    }
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << csv_header(cfg, "spherical") << "t0,re,im\n";
      for (const hecke::Coweight& t : points) {
        std::complex<double> v = hecke::spherical_value(theta, t, cfg.p);
        for (int i = 0; i < t.rank(); ++i) os << (i ? " " : "") << t[i];
        os << "," << v.real() << "," << v.imag() << "\n";
      }
      emit(out_path, os.str());
      return 0;
    }
    json out = wrap(cfg, "spherical");
    out["theta"] = theta;
    out["values"] = json::array();
    for (const hecke::Coweight& t : points) {
      std::complex<double> v = hecke::spherical_value(theta, t, cfg.p);
      out["values"].push_back(
          {{"t0", hecke::coweight_to_json(t)}, {"re", v.real()}, {"im", v.imag()}});
    }
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (pl->parsed()) {
    hecke::QuadratureGrid grid(cfg.n, cfg.p, cfg.resolution);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << csv_header(cfg, "plancherel") << "# kappa " << grid.kappa() << "\n";
      for (int i = 0; i < cfg.n - 1; ++i) os << "theta" << i << ",";
      os << "density\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        for (double x : grid.node(i)) os << x << ",";
        os << grid.density(i) << "\n";
      }
      emit(out_path, os.str());
      return 0;
    }
    json out = wrap(cfg, "plancherel");
    out["kappa"] = grid.kappa();
    out["nodes"] = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
      out["nodes"].push_back({{"theta", grid.node(i)}, {"density", grid.density(i)}});
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (ab->parsed()) {
    std::vector<double> theta = parse_reals(theta_str);
    if (static_cast<int>(theta.size()) != cfg.n - 1)
      throw hecke::InvalidArgument("--theta needs n-1 angles");
    hecke::AmplifierKernel k =
        hecke::build_kernel(L_flag, N_flag, theta, cfg.epsilon, cfg.L_max);
    json out = wrap(cfg, "amplifier-build");
    out["params"] = {{"n", k.params.n},     {"L", k.params.L},
                     {"N", k.params.N},     {"q1", k.params.q1},
                     {"theta", k.params.theta}, {"epsilon", k.params.epsilon}};
    out["normalizer"] = hecke::rational_to_string(k.normalizer);
    out["eigenvalue"] = k.eigenvalue;
    out["f"] = hecke::function_to_json(k.f);
    out["k_tilde"] = hecke::function_to_json(k.k_tilde);
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (av->parsed()) {
    json in = load_json_file(kernel_path);
    hecke::RunConfig built = hecke::config_from_json(in.at("config"));
    const json& jp = in.at("params");
    hecke::AmplifierParams params{jp.at("n").get<int>(),
                                  jp.at("L").get<std::int64_t>(),
                                  jp.at("N").get<std::int64_t>(),
                                  jp.at("q1").get<std::int64_t>(),
                                  jp.at("theta").get<std::vector<double>>(),
                                  jp.at("epsilon").get<double>()};
    hecke::AmplifierKernel kernel{hecke::function_from_json(in.at("k_tilde")),
                                  hecke::function_from_json(in.at("f")),
                                  hecke::rational_from_string(in.at("normalizer")),
                                  params, in.at("eigenvalue").get<double>()};
    if (kernel.k_tilde.rank() != params.n || kernel.f.rank() != params.n)
      throw hecke::InvalidArgument("kernel file rank disagrees with its params");
    long p = p_flag > 0 ? p_flag : built.p;
    int resolution = grid_flag > 0 ? grid_flag : cfg.resolution;
    hecke::QuadratureGrid grid(params.n, p, resolution);
    hecke::VerificationReport rep = hecke::verify_kernel(kernel, grid, samples_flag);
    json out = wrap(cfg, "amplifier-verify");
    out["kernel"] = kernel_path;
    out["p"] = p;
    out["report"] = verification_report_json(rep);
    emit(out_path, out.dump(2) + "\n");
    return rep.pass ? 0 : 3;
  }

  if (ka->parsed()) {
    std::vector<double> alpha = parse_reals(alpha_str);
    hecke::ApproxResult r = hecke::simultaneous_approx(alpha, keps_flag, kN_flag);
    json out = wrap(cfg, "kronecker-approx");
    out["alpha"] = alpha;
    out["eps"] = keps_flag;
    out["N"] = kN_flag;
    out["result"] = {{"q", r.q},
                     {"achieved", r.achieved},
                     {"window_lo", r.window_lo},
                     {"window_hi", r.window_hi},
                     {"window_exhausted", r.window_exhausted}};
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (kd->parsed()) {
    std::vector<double> alpha = parse_reals(alpha_str);
    double d = hecke::equidistribution_defect(alpha, kN_flag, kK_flag);
    json out = wrap(cfg, "kronecker-defect");
    out["alpha"] = alpha;
    out["N"] = kN_flag;
    out["K"] = kK_flag;
    out["defect"] = d;
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  // selftest
  std::vector<hecke::CheckResult> results = hecke::run_selftest(cfg.n, cfg.p);
  std::ostringstream os;
  os << "# selftest version " << hecke::kVersion << "\n"
     << "# config " << hecke::config_to_json(cfg).dump() << "\n";
  int failed = 0;
  for (const hecke::CheckResult& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  os << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  emit(out_path, os.str());
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hecke::VerificationFailure& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return 3;
  } catch (const hecke::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
