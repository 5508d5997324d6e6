// divaudit: divergence evaluation, triangle-violation search, certificate
// amplification, random metric audits, and limit sweeps.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 search failure
// (no triangle violation found in the configured range).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divaudit/asymptotics.hpp"
#include "divaudit/audit.hpp"
#include "divaudit/cauchy.hpp"
#include "divaudit/divergences.hpp"
#include "divaudit/serialization.hpp"

namespace {

using nlohmann::json;
namespace da = divaudit;

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("DIVAUDIT_OUTPUT_DIR")) return env;
  return ".";
}

void write_json(const std::string& dir, const std::string& name, const json& j) {
  std::filesystem::create_directories(dir);
  da::write_file_atomic((std::filesystem::path(dir) / name).string(),
                        j.dump(2) + "\n");
}

da::CauchyParams parse_mu_sigma(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("expected <mu>,<sigma>, got '" + s + "'");
  }
  return da::make_cauchy(std::stod(s.substr(0, comma)),
                         std::stod(s.substr(comma + 1)));
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> ts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) ts.push_back(std::stod(item));
  return ts;
}

int run_div(const std::string& measure, const std::string& family,
            const std::string& gen_id, const std::string& p_json,
            const std::string& q_json, const std::string& a_str,
            const std::string& b_str, bool oracle, double tolerance) {
  if (family == "cauchy") {
    if (!measure.empty()) {
      std::cerr << "error: --measure applies to the multinomial family; "
                   "use --gen for cauchy\n";
      return 1;
    }
    const auto gen = da::generator_by_id(gen_id.empty() ? "js" : gen_id);
    const auto a = parse_mu_sigma(a_str);
    const auto b = parse_mu_sigma(b_str);
    const double v = oracle
                         ? da::f_div_cauchy_oracle(gen, a, b, tolerance > 0 ? tolerance : 1e-9)
                         : da::f_div_cauchy(gen, a, b, tolerance > 0 ? tolerance : 1e-10);
    std::cout << fmt17(v) << " base=natural\n";
    return 0;
  }

  const auto p = da::multinomial_from_json(json::parse(p_json));
  const auto q = da::multinomial_from_json(json::parse(q_json));
  da::DivergenceValue v{};
  if (measure == "kl") {
    v = da::kl(p, q);
  } else if (measure == "jsd") {
    v = da::jsd(p, q);
  } else if (measure == "tvd") {
    v = da::tvd(p, q);
  } else if (measure.rfind("f:", 0) == 0) {
    v = da::f_divergence_discrete(da::generator_by_id(measure.substr(2)), p, q);
  } else {
    std::cerr << "error: unknown measure '" << measure
              << "' (expected kl|jsd|tvd|f:<gen>)\n";
    return 1;
  }
  std::cout << fmt17(v.value) << " base="
            << (v.base == da::LogBase::base2 ? "2" : "natural") << "\n";
  return 0;
}

int run_audit_find(const std::string& family, double alpha,
                   const std::string& gen_id, std::size_t n,
                   da::SearchConfig cfg, const std::string& out_dir) {
  try {
    da::TriangleCertificate cert;
    if (family == "multinomial") {
      cert = da::find_jsd_violation(alpha, cfg, n);
    } else if (family == "cauchy") {
      cert = da::find_cauchy_violation(da::generator_by_id(gen_id), alpha, cfg);
    } else {
      std::cerr << "error: unknown family '" << family << "'\n";
      return 1;
    }
    const json j = da::to_json(cert);
    write_json(output_dir(out_dir), "certificate.json", j);
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const da::SearchFailure& e) {
    std::cerr << "search failure: " << e.what()
              << " (max objective " << fmt17(e.max_objective) << ")\n";
    return 2;
  }
}

int run_audit_random(double alpha, std::uint64_t trials, std::uint64_t seed,
                     std::size_t n, const std::string& out_dir) {
  const auto report = da::random_audit(
      [](const da::Multinomial& a, const da::Multinomial& b) {
        return da::jsd(a, b).value;
      },
      alpha, trials, seed, n);
  const json j = da::to_json(report);
  write_json(output_dir(out_dir), "audit_report.json", j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_audit_amplify(const std::string& cert_path, double beta,
                      const std::string& out_dir) {
  std::ifstream in(cert_path);
  if (!in) {
    std::cerr << "error: cannot read certificate file " << cert_path << "\n";
    return 1;
  }
  const auto cert = da::certificate_from_json(json::parse(in));
  const auto amplified = da::amplify_certificate(cert, beta);
  const json j = da::to_json(amplified);
  write_json(output_dir(out_dir), "certificate_amplified.json", j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

void print_limits(const std::vector<da::LimitEstimate>& estimates,
                  const std::string& out_dir, const std::string& name) {
  // CSV: one row per t, one column per tracked ratio.
  std::ostringstream csv;
  csv << "t";
  for (const auto& e : estimates) csv << "," << e.target_name;
  csv << "\n";
  const std::size_t rows = estimates.front().samples.size();
  for (std::size_t i = 0; i < rows; ++i) {
    csv << fmt17(estimates.front().samples[i].first);
    for (const auto& e : estimates) csv << "," << fmt17(e.samples[i].second);
    csv << "\n";
  }
  std::cout << csv.str();

  json summary = json::array();
  for (const auto& e : estimates) summary.push_back(da::to_json(e));
  std::cout << summary.dump(2) << "\n";

  const std::string dir = output_dir(out_dir);
  std::filesystem::create_directories(dir);
  da::write_file_atomic(
      (std::filesystem::path(dir) / (name + "_sweep.csv")).string(), csv.str());
  write_json(dir, name + "_limits.json", summary);
}

int run_limits(const std::string& which, const std::string& gen_id,
               const std::string& grid_csv, const std::string& out_dir) {
  std::vector<double> ts =
      grid_csv.empty() ? da::default_sweep_grid() : parse_grid(grid_csv);
  if (which == "jsd") {
    auto [gf, gpfp] = da::jsd_fg_sweep(ts);
    print_limits({gf, gpfp}, out_dir, "jsd");
  } else if (which == "cauchy") {
    const auto gen = da::generator_by_id(gen_id.empty() ? "js" : gen_id);
    auto estimates = da::cauchy_h_ratio_sweep(gen, ts);
    estimates.push_back(da::cauchy_h2_limit(gen));
    print_limits(estimates, out_dir, "cauchy_" + gen.name);
  } else if (which == "tv") {
    print_limits(da::cauchy_tv_ratio_sweep(ts), out_dir, "tv");
  } else {
    std::cerr << "error: unknown limits target '" << which
              << "' (expected jsd|cauchy|tv)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divergence metric-axiom auditing toolkit"};
  app.require_subcommand(1);

  std::string out_dir;
  double tolerance = 0.0;
  app.add_option("--output", out_dir, "output directory (default: $DIVAUDIT_OUTPUT_DIR or .)");
  app.add_option("--tolerance", tolerance, "override quadrature tolerance");

  // div
  auto* div = app.add_subcommand("div", "evaluate a divergence");
  std::string measure, family = "multinomial", gen_id, p_json, q_json, a_str, b_str;
  bool oracle = false;
  div->add_option("--measure", measure, "kl|jsd|tvd|f:<gen>");
  div->add_option("--family", family, "multinomial|cauchy");
  div->add_option("--gen", gen_id, "generator id: js|kl|tv");
  div->add_option("--p", p_json, "first distribution, JSON array");
  div->add_option("--q", q_json, "second distribution, JSON array");
  div->add_option("--a", a_str, "first Cauchy params <mu>,<sigma>");
  div->add_option("--b", b_str, "second Cauchy params <mu>,<sigma>");
  div->add_flag("--oracle", oracle, "use the direct real-line integral");

  // audit
  auto* audit = app.add_subcommand("audit", "triangle-inequality auditing");
  audit->require_subcommand(1);

  auto* find = audit->add_subcommand("find", "search for a violation");
  double alpha = 0.6;
  std::size_t dim = 2, audit_n = 3;
  double t_min = -1, t_max = -1, margin_floor = 1e-10;
  int grid_size = 256;
  find->add_option("--family", family, "multinomial|cauchy");
  find->add_option("--alpha", alpha, "divergence exponent")->required();
  find->add_option("--gen", gen_id, "generator id (cauchy family)");
  find->add_option("--n", dim, "simplex dimension (multinomial family)");
  find->add_option("--t-min", t_min, "search interval lower end");
  find->add_option("--t-max", t_max, "search interval upper end");
  find->add_option("--grid-size", grid_size, "coarse grid size");
  find->add_option("--margin-floor", margin_floor, "minimum accepted margin");

  auto* rnd = audit->add_subcommand("random", "randomized triangle audit");
  std::uint64_t trials = 100000, seed = 1;
  rnd->add_option("--alpha", alpha, "divergence exponent")->required();
  rnd->add_option("--trials", trials, "number of sampled triples");
  rnd->add_option("--seed", seed, "RNG seed");
  rnd->add_option("--n", audit_n, "simplex dimension");

  auto* amp = audit->add_subcommand("amplify", "raise a certificate's exponent");
  std::string cert_path;
  double beta = 1.0;
  amp->add_option("--cert", cert_path, "certificate JSON file")->required();
  amp->add_option("--beta", beta, "power >= 1")->required();

  // limits
  auto* limits = app.add_subcommand("limits", "asymptotic limit sweeps");
  std::string which, grid_csv;
  limits->add_option("target", which, "jsd|cauchy|tv")->required();
  limits->add_option("--gen", gen_id, "generator id (cauchy target)");
  limits->add_option("--grid", grid_csv, "comma-separated t grid");

  CLI11_PARSE(app, argc, argv);

  try {
    if (div->parsed()) {
      return run_div(measure, family, gen_id, p_json, q_json, a_str, b_str,
                     oracle, tolerance);
    }
    if (find->parsed()) {
      da::SearchConfig cfg = family == "cauchy" ? da::default_cauchy_search()
                                                : da::default_multinomial_search();
      if (t_min > 0) cfg.t_min = t_min;
      if (t_max > 0) cfg.t_max = t_max;
      cfg.grid_size = grid_size;
      cfg.margin_floor = margin_floor;
      return run_audit_find(family, alpha, gen_id, dim, cfg, out_dir);
    }
    if (rnd->parsed()) {
      return run_audit_random(alpha, trials, seed, audit_n, out_dir);
    }
    if (amp->parsed()) {
      return run_audit_amplify(cert_path, beta, out_dir);
    }
    if (limits->parsed()) {
      return run_limits(which, gen_id, grid_csv, out_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
