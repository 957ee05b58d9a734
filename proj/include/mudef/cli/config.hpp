#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mudef::cli {

/// Bad flags, config files or values; the CLI exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  ///< specfun, trace, scan, verify-identities, check-operators
  std::optional<double> mu;
  std::vector<double> mu_grid;
  std::vector<std::string> set_a;
  std::vector<std::string> set_b;
  std::optional<std::string> z;
  std::optional<double> s;
  std::optional<double> tol;  ///< per-command default when unset
  int precision_bits = 212;
  std::optional<int> n_max;
  int k_max = 41;
  std::string kappa = "1";
  std::string psi;
  std::string method = "both";
  std::string format = "text";
  std::string out;
  std::string plot;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string config;
};

const std::vector<std::string>& command_names();

/// Flag tokens ("--key", "value", ...) from a config file: JSON object or
/// key=value lines ('#' starts a comment). Keys may use '-' or '_'.
std::vector<std::string> config_file_arguments(const std::string& path);

/// Parses args (without the program name). Values from --config apply first and
/// are overridden by flags given on the command line. Throws UsageError.
/// Returns nullopt when help was requested; the help text goes to help_text.
std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::string* help_text = nullptr);

}  // namespace mudef::cli
