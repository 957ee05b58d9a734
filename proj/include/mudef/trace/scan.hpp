#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mudef/trace/trace.hpp"

namespace mudef::trace {

using SetPair = std::pair<IntervalSet, IntervalSet>;

struct ScanRow {
  double mu = 0.0;
  IntervalSet a;
  IntervalSet b;
  TraceEstimate estimate;
  bool sign_resolved = false;  ///< error_estimate < |deviation| / 10
  bool contains_zero = false;  ///< A or B contains 0
  std::string error;           ///< evaluation failure; estimate then holds the best value
  bool ok() const { return error.empty(); }
};

struct ScanOptions {
  TraceMethod method = TraceMethod::quadrature;
  double series_tol = 1e-16;
  int threads = 1;  ///< rows are independent; output order never depends on this
};

std::vector<double> default_mu_grid();
/// Unit-length intervals at distances 0.25 to 4 from the origin, plus one two-piece set.
std::vector<SetPair> default_pairs();

/// One row per (mu, pair), ordered by mu then by pair index. Rows that fail
/// record the error and the scan continues. Throws DomainError for mu <= -1/2.
std::vector<ScanRow> deviation_scan(const std::vector<double>& mu_grid, const std::vector<SetPair>& pairs,
                                    const QuadratureSpec& spec = {}, const ScanOptions& options = {});

/// Columns: mu, A, B, method, value, error, product, deviation, sign_resolved, contains_zero.
std::string scan_to_csv(const std::vector<ScanRow>& rows);
nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);

}  // namespace mudef::trace
