#include "mudef/trace/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <thread>

#include "mudef/errors.hpp"
#include "mudef/trace/measure.hpp"

namespace mudef::trace {

std::vector<double> default_mu_grid() {
  return {-0.45, -0.4, -0.3, -0.2, -0.1, -0.05, 0.0, 0.05, 0.25, 0.5, 1.0, 2.0};
}

std::vector<SetPair> default_pairs() {
  return {
      {IntervalSet{{1.0, 2.0}}, IntervalSet{{0.5, 1.5}}},
      {IntervalSet{{0.25, 1.25}}, IntervalSet{{0.25, 1.25}}},
      {IntervalSet{{2.0, 3.0}}, IntervalSet{{3.0, 4.0}}},
      {IntervalSet{{0.25, 1.25}}, IntervalSet{{3.0, 4.0}}},
      {IntervalSet{{0.5, 1.0}, {2.5, 3.0}}, IntervalSet{{1.5, 2.5}}},
  };
}

namespace {

ScanRow evaluate_row(double mu, const SetPair& pair, const QuadratureSpec& spec, const ScanOptions& options) {
  ScanRow row;
  row.mu = mu;
  row.a = pair.first;
  row.b = pair.second;
  row.contains_zero = pair.first.contains_zero() || pair.second.contains_zero();
  const MuContext ctx(mu);
  try {
    row.estimate = options.method == TraceMethod::quadrature
                       ? trace_quadrature(pair.first, pair.second, ctx, spec)
                       : trace_moment_series(pair.first, pair.second, ctx, options.series_tol);
  } catch (const EvaluationError& e) {
    row.error = e.what();
    row.estimate.method = options.method;
    row.estimate.value = e.best_value();
    row.estimate.error_estimate = e.best_error();
    row.estimate.product_measures = measure(pair.first, ctx) * measure(pair.second, ctx);
    row.estimate.deviation = row.estimate.value - row.estimate.product_measures;
  }
  row.sign_resolved = row.ok() && row.estimate.error_estimate < std::abs(row.estimate.deviation) / 10.0;
  return row;
}

std::string fmt(double x) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<ScanRow> deviation_scan(const std::vector<double>& mu_grid, const std::vector<SetPair>& pairs,
                                    const QuadratureSpec& spec, const ScanOptions& options) {
  spec.validate();
  std::vector<double> mus = mu_grid;
  std::sort(mus.begin(), mus.end());
  for (double mu : mus) MuContext check(mu);  // reject the whole grid up front

  const std::size_t total = mus.size() * pairs.size();
  std::vector<ScanRow> rows(total);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < total; i = next++) {
      rows[i] = evaluate_row(mus[i / pairs.size()], pairs[i % pairs.size()], spec, options);
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(total)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::string out = "mu,A,B,method,value,error,product,deviation,sign_resolved,contains_zero\n";
  for (const auto& r : rows) {
    out += fmt(r.mu) + "," + csv_field(r.a.to_string()) + "," + csv_field(r.b.to_string()) + "," +
           (r.ok() ? to_string(r.estimate.method) : "failed") + "," + fmt(r.estimate.value) + "," +
           fmt(r.estimate.error_estimate) + "," + fmt(r.estimate.product_measures) + "," +
           fmt(r.estimate.deviation) + "," + (r.sign_resolved ? "true" : "false") + "," +
           (r.contains_zero ? "true" : "false") + "\n";
  }
  return out;
}

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"mu", r.mu},
                        {"A", r.a.to_string()},
                        {"B", r.b.to_string()},
                        {"method", to_string(r.estimate.method)},
                        {"value", r.estimate.value},
                        {"error", r.estimate.error_estimate},
                        {"product", r.estimate.product_measures},
                        {"deviation", r.estimate.deviation},
                        {"sign_resolved", r.sign_resolved},
                        {"contains_zero", r.contains_zero},
                        {"steps", r.estimate.steps}};
    if (!r.ok()) j["error_message"] = r.error;
    arr.push_back(std::move(j));
  }
  return {{"schema_version", 1}, {"rows", std::move(arr)}};
}

}  // namespace mudef::trace
