#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mudef/cli/commands.hpp"

using namespace mudef::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mudef_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

}  // namespace

TEST_CASE("specfun examples") {
  const Run e = run_cli({"specfun", "--mu", "0", "--z", "1"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("2.71828182845904") != std::string::npos);

  const Run j = run_cli({"specfun", "--mu", "1", "--s", "2", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto report = nlohmann::json::parse(j.out);
  CHECK(report["schema_version"] == 1);
  CHECK(report["abs2"]["modulus"].get<double>() < 1.0);
  CHECK(report["abs2"]["methods"].size() == 3);

  const Run neg = run_cli({"specfun", "--mu", "-0.25", "--s", "2", "--format", "json"});
  CHECK(neg.code == kExitOk);
  const auto nr = nlohmann::json::parse(neg.out);
  CHECK(nr["abs2"]["methods"].size() == 2);  // no integral representation for mu <= 0
  CHECK(nr["abs2"]["methods"][0]["method"] == "product");
  CHECK(nr["abs2"]["methods"][0].contains("cancellation"));
  CHECK(nr["abs2"]["modulus"].get<double>() > 1.0);

  CHECK(run_cli({"specfun", "--mu", "0.5", "--z", "2-3i"}).code == kExitOk);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"specfun", "--mu", "-0.5"}).code == kExitUsage);
  CHECK(run_cli({"specfun", "--mu", "abc"}).code == kExitUsage);
  CHECK(run_cli({"specfun", "--z", "1+x"}).code == kExitUsage);
  CHECK(run_cli({"trace", "--set-a", "[2,1]", "--set-b", "[0,1]"}).code == kExitUsage);
  CHECK(run_cli({"trace", "--set-a", "[1,2]"}).code == kExitUsage);
  CHECK(run_cli({"scan", "--tol", "2"}).code == kExitUsage);
  CHECK(run_cli({"check-operators", "--kappa", "i"}).code == kExitUsage);
  CHECK(run_cli({"scan", "--config", "/nonexistent/file"}).code == kExitUsage);
  const Run help = run_cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("--mu-grid") != std::string::npos);
}

TEST_CASE("trace command at mu = 0") {
  const Run r = run_cli({"trace", "--mu", "0", "--set-a", "[1,2]", "--set-b", "[0.5,1.5]", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& res : j["results"]) {
    CHECK(std::abs(res["value"].get<double>() - 0.15915494309189535) < 1e-12);
    CHECK(std::abs(res["deviation"].get<double>()) < 1e-9);
  }
  CHECK(j["agreement"]["pass"] == true);
  // moment series cannot reach these sets; the failure is reported with status 3
  const Run far = run_cli({"trace", "--mu", "0.5", "--set-a", "[19,20]", "--set-b", "[19,20]", "--method", "moment-series"});
  CHECK(far.code == kExitEvaluation);
  CHECK(far.out.find("FAILED") != std::string::npos);
}

TEST_CASE("scan: default checks, outputs, determinism") {
  const fs::path csv1 = temp_path("scan1.csv"), csv2 = temp_path("scan2.csv");
  const fs::path json1 = temp_path("scan1.json"), svg = temp_path("scan.svg");
  const std::vector<std::string> base = {"scan", "--mu-grid", "-0.4,0,0.5", "--seed", "7"};
  auto args = base;
  args.insert(args.end(), {"--out", csv1.string(), "--plot", svg.string(), "--threads", "3"});
  const Run a = run_cli(args);
  CHECK(a.code == kExitOk);
  args = base;
  args.insert(args.end(), {"--out", csv2.string()});
  CHECK(run_cli(args).code == kExitOk);
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK(slurp(csv1) == a.out);
  args = base;
  args.insert(args.end(), {"--out", json1.string()});
  CHECK(run_cli(args).code == kExitOk);
  const auto j = nlohmann::json::parse(slurp(json1));
  CHECK(j["schema_version"] == 1);
  CHECK(j["rows"].size() == 30);
  CHECK(j["summary"]["strict_failures"] == 0);
  CHECK(j["summary"]["conjecture_rows"] == 10);
  const std::string plot = slurp(svg);
  CHECK(plot.rfind("<svg", 0) == 0);
  CHECK(plot.find("equality at mu = 0") != std::string::npos);
  CHECK(plot.find("conjecture region") != std::string::npos);

  // rows are ordered by mu, then pair, then method
  CHECK(j["rows"][0]["mu"] == -0.4);
  CHECK(j["rows"][0]["method"] == "quadrature");
  CHECK(j["rows"][1]["method"] == "moment_series");
  CHECK(j["rows"][29]["mu"] == 0.5);
}

TEST_CASE("scan exit status ignores the conjecture region but not failures for mu >= 0") {
  // the moment series fails on far sets: hard failure at mu > 0, ignored at mu < 0
  const std::vector<std::string> far = {"--set-a", "[19,20]", "--set-b", "[19,20]", "--method", "moment-series"};
  std::vector<std::string> neg = {"scan", "--mu-grid", "-0.2"};
  neg.insert(neg.end(), far.begin(), far.end());
  CHECK(run_cli(neg).code == kExitOk);
  std::vector<std::string> pos = {"scan", "--mu-grid", "0.5"};
  pos.insert(pos.end(), far.begin(), far.end());
  CHECK(run_cli(pos).code == kExitCheckFailed);
  // sets containing 0 are reported but not asserted
  const Run z = run_cli({"scan", "--mu-grid", "0.5", "--set-a", "[-1,1]", "--set-b", "[0,2]", "--format", "json"});
  CHECK(z.code == kExitOk);
  CHECK(nlohmann::json::parse(z.out)["rows"][0]["contains_zero"] == true);
}

TEST_CASE("repeated set flags form pairs; unions use either notation") {
  const Run r = run_cli({"scan", "--mu-grid", "1", "--method", "quadrature", "--set-a", "[0.5,1]+[2.5,3]", "--set-b",
                         "[1.5,2.5]", "--set-a", "[1,2]\xE2\x88\xAA[3,4]", "--set-b", "[0.25,1.25]", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["A"] == "[0.5,1]+[2.5,3]");
  CHECK(j["rows"][1]["A"] == "[1,2]+[3,4]");
}

TEST_CASE("verify-identities") {
  const Run d = run_cli({"verify-identities", "--format", "json"});
  CHECK(d.code == kExitOk);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["odd_vanishing"]["checks"].size() == 21);
  CHECK(j["closed_forms"]["checks"].size() >= 36);
  CHECK(j["closed_forms"]["checks"][0].contains("random_mu"));

  const Run n1 = run_cli({"verify-identities", "--n-max", "1", "--k-max", "3", "--format", "json"});
  const auto small = nlohmann::json::parse(n1.out);
  CHECK(n1.code == kExitOk);
  CHECK(small["odd_vanishing"]["checks"].size() == 2);
  int per_n = 0;
  for (const auto& c : small["closed_forms"]["checks"]) {
    if (c["n"] == 1) ++per_n;
  }
  CHECK(per_n == 3);
  CHECK(small["closed_forms"]["checks"][1]["formula"]["text"] == "(4*mu) / (mu + 1/2)");

  const Run s1 = run_cli({"verify-identities", "--n-max", "2", "--seed", "5", "--format", "json"});
  const Run s2 = run_cli({"verify-identities", "--n-max", "2", "--seed", "5", "--format", "json"});
  const Run s3 = run_cli({"verify-identities", "--n-max", "2", "--seed", "6", "--format", "json"});
  CHECK(s1.out == s2.out);
  CHECK(s1.out != s3.out);
}

TEST_CASE("check-operators: default and kappa = 2") {
  const Run d = run_cli({"check-operators", "--format", "json"});
  CHECK(d.code == kExitOk);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["ccr"]["all_zero"] == true);
  CHECK(j["ccr"]["basis"].size() == 11);
  CHECK(j["eom"]["basis"][1]["fitted_c1"] == "-i");
  CHECK(j["eom"]["basis"][1]["fitted_c2"] == "i");
  for (const auto& e : j["intertwining"]["entries"]) CHECK(e["max_discrepancy"].get<double>() < 1e-6);

  const Run k2 = run_cli({"check-operators", "--kappa", "2", "--mu-grid", "0.5", "--format", "json"});
  CHECK(k2.code == kExitOk);  // expected-failure mode is not an error exit
  const auto jk = nlohmann::json::parse(k2.out);
  CHECK(jk["expected_failure_mode"] == true);
  CHECK(jk["ccr"]["failure_demonstrated"] == true);
  CHECK(jk["ccr"]["basis"][1]["zero"] == false);

  const Run psi = run_cli({"check-operators", "--psi", "(1 + 2x^3) * gauss", "--n-max", "3", "--mu-grid", "0.5"});
  CHECK(psi.code == kExitOk);
  CHECK(run_cli({"check-operators", "--psi", "(1 + ", "--n-max", "1"}).code == kExitUsage);
}

TEST_CASE("config files: key=value and JSON, with flags taking precedence") {
  const fs::path kv = temp_path("run.conf");
  write(kv, "# scan settings\nmu_grid = 0.25, 1\nset-a = [1,2]\nset-b = [0.5,1.5]\nmethod = quadrature\nformat=json\n");
  const Run a = run_cli({"scan", "--config", kv.string()});
  CHECK(a.code == kExitOk);
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["rows"].size() == 2);
  CHECK(ja["rows"][0]["mu"] == 0.25);

  // command-line --mu-grid replaces the file's grid; --format overrides too
  const Run b = run_cli({"scan", "--config", kv.string(), "--mu-grid", "0.5", "--format", "csv"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.rfind("mu,A,B", 0) == 0);
  CHECK(b.out.find("\n0.5,") != std::string::npos);
  CHECK(b.out.find("\n0.25,") == std::string::npos);

  const fs::path js = temp_path("run.json");
  write(js, R"({"mu": 0.5, "s": 2, "format": "json"})");
  const Run c = run_cli({"specfun", "--config", js.string()});
  CHECK(c.code == kExitOk);
  CHECK(nlohmann::json::parse(c.out)["mu"] == 0.5);
  const Run d = run_cli({"specfun", "--config", js.string(), "--mu", "2"});
  CHECK(nlohmann::json::parse(d.out)["mu"] == 2.0);

  write(kv, "mu 0.5\n");
  CHECK(run_cli({"specfun", "--config", kv.string()}).code == kExitUsage);
  write(js, "{\"mu\": }");
  CHECK(run_cli({"specfun", "--config", js.string()}).code == kExitUsage);
}
