#include "mudef/cli/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mudef/context.hpp"

namespace mudef::cli {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"specfun", "trace", "scan", "verify-identities",
                                                 "check-operators"};
  return names;
}

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string flag_name(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return "--" + key;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
    return buf;
  }
  throw UsageError("config: unsupported value " + v.dump());
}

void add_options(CLI::App& app, RunConfig& cfg) {
  const auto last = CLI::MultiOptionPolicy::TakeLast;
  app.add_option("--mu", cfg.mu, "deformation parameter (> -1/2)")->multi_option_policy(last);
  app.add_option("--mu-grid", cfg.mu_grid, "comma-separated mu values")->delimiter(',');
  app.add_option("--set-a", cfg.set_a, "interval set A, e.g. [1,2]+[3,4] (repeatable)")->allow_extra_args(false);
  app.add_option("--set-b", cfg.set_b, "interval set B (repeatable, paired with --set-a)")->allow_extra_args(false);
  app.add_option("--z", cfg.z, "complex argument for exp_mu, e.g. 1-2i")->multi_option_policy(last);
  app.add_option("--s", cfg.s, "real s for |exp_mu(is)|^2")->multi_option_policy(last);
  app.add_option("--tol", cfg.tol, "relative tolerance in (0,1)")->multi_option_policy(last);
  app.add_option("--precision-bits", cfg.precision_bits, "MPFR working precision")->multi_option_policy(last);
  app.add_option("--n-max", cfg.n_max, "closed-form n limit / operator basis degree")->multi_option_policy(last);
  app.add_option("--k-max", cfg.k_max, "largest odd k for the vanishing check")->multi_option_policy(last);
  app.add_option("--kappa", cfg.kappa, "rational reflection coefficient of P")->multi_option_policy(last);
  app.add_option("--psi", cfg.psi, "extra GaussPoly literal for check-operators")->multi_option_policy(last);
  app.add_option("--method", cfg.method, "trace method")
      ->check(CLI::IsMember({"both", "quadrature", "moment-series"}))
      ->multi_option_policy(last);
  app.add_option("--format", cfg.format, "stdout format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->multi_option_policy(last);
  app.add_option("--out", cfg.out, "write the report (JSON, or CSV for scans ending in .csv)")
      ->multi_option_policy(last);
  app.add_option("--plot", cfg.plot, "SVG plot path (scan)")->multi_option_policy(last);
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->multi_option_policy(last);
  app.add_option("--threads", cfg.threads, "worker threads for scans")->multi_option_policy(last);
  app.add_option("--config", cfg.config, "config file (key=value or JSON)")->multi_option_policy(last);
}

void validate(const RunConfig& cfg) {
  if (std::find(command_names().begin(), command_names().end(), cfg.command) == command_names().end()) {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  std::vector<double> mus = cfg.mu_grid;
  if (cfg.mu) mus.push_back(*cfg.mu);
  for (double mu : mus) {
    if (!(mu > -0.5 + kMuGuard) || !std::isfinite(mu)) {
      throw UsageError("mu must exceed -1/2 + 1e-6, got " + std::to_string(mu));
    }
  }
  if (cfg.tol && !(*cfg.tol > 0.0 && *cfg.tol < 1.0)) throw UsageError("--tol must lie in (0, 1)");
  if (cfg.precision_bits < 53 || cfg.precision_bits > 8192) throw UsageError("--precision-bits must lie in [53, 8192]");
  if (cfg.n_max && (*cfg.n_max < 0 || *cfg.n_max > 40)) throw UsageError("--n-max must lie in [0, 40]");
  if (cfg.k_max < 1 || cfg.k_max > 201) throw UsageError("--k-max must lie in [1, 201]");
  if (cfg.threads < 1 || cfg.threads > 256) throw UsageError("--threads must lie in [1, 256]");
  if (cfg.set_a.size() != cfg.set_b.size()) throw UsageError("--set-a and --set-b must be given in pairs");
}

}  // namespace

std::vector<std::string> config_file_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<std::string> args;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config file '" + path + "': " + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      if (value.is_array()) {
        if (key == "mu_grid" || key == "mu-grid") {
          std::string joined;
          for (const auto& v : value) joined += (joined.empty() ? "" : ",") + json_scalar(v);
          args.push_back(flag_name(key));
          args.push_back(joined);
        } else {
          for (const auto& v : value) {
            args.push_back(flag_name(key));
            args.push_back(json_scalar(v));
          }
        }
      } else {
        args.push_back(flag_name(key));
        args.push_back(json_scalar(value));
      }
    }
    return args;
  }
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config file '" + path + "' line " + std::to_string(number) + ": expected key=value");
    }
    args.push_back(flag_name(trim(line.substr(0, eq))));
    args.push_back(trim(line.substr(eq + 1)));
  }
  return args;
}

std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::string* help_text) {
  RunConfig cfg;
  // locate --config without interpreting anything else
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }

  const auto parse_into = [&](std::vector<std::string> tokens, bool with_command) -> bool {
    CLI::App app("mudef: deformed quantum mechanics numerics", "mudef");
    add_options(app, cfg);
    if (with_command) {
      app.add_option("command", cfg.command, "specfun | trace | scan | verify-identities | check-operators")
          ->required();
    }
    std::reverse(tokens.begin(), tokens.end());  // CLI11 consumes from the back
    try {
      app.parse(tokens);
    } catch (const CLI::CallForHelp&) {
      if (help_text) *help_text = app.help();
      return false;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    return true;
  };

  if (!config_path.empty()) {
    std::vector<std::string> from_file = config_file_arguments(config_path);
    for (const auto& t : from_file) {
      if (t == "--config") throw UsageError("config files cannot include other config files");
    }
    parse_into(from_file, false);
  }
  if (!parse_into(args, true)) return std::nullopt;
  validate(cfg);
  return cfg;
}

}  // namespace mudef::cli
