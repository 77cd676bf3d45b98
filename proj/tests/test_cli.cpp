#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "multlab/cli.hpp"
#include "multlab/serialize.hpp"

using multlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  auto r = invoke({"definitely-not-a-command"});
  CHECK(r.code == 1);
  auto r2 = invoke({});
  CHECK(r2.code == 1);
}

TEST_CASE("doubling recursion output") {
  auto r = invoke({"cotlar", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.41421356") != std::string::npos);
  CHECK(r.out.find("5.02733949") != std::string::npos);
  CHECK(r.out.find("cross-check PASS") != std::string::npos);
}

TEST_CASE("identical seeds give identical bytes") {
  std::vector<std::string> cmd = {"transfer-check", "--N",     "6",  "--p",
                                  "4",              "--count", "3",  "--seed",
                                  "99",             "--restarts", "3"};
  auto a = invoke(cmd);
  auto b = invoke(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("scan produces CSV with the header line") {
  auto r = invoke({"riesz-scan", "--p", "4", "--sizes", "2,4", "--restarts", "3",
                   "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# multlab", 0) == 0);
  CHECK(r.out.find("n,lower,target,gap,seconds") != std::string::npos);
  CHECK(r.out.find("1.41421356") != std::string::npos);  // the analytic target column
}

TEST_CASE("szego subcommand emits the report") {
  auto r = invoke({"szego", "--sizes", "16,64", "--orders", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("window,k,empirical,exact,abs_error,bound") != std::string::npos);
  CHECK(r.out.find("1.96875") != std::string::npos);  // 2 - 2/64
}

TEST_CASE("extension pipeline through JSON files") {
  std::string spec_path = "extend_input_test.json";
  {
    std::ofstream f(spec_path);
    f << R"({"x": [1.0, 2.0, 4.0], "y": [1.0, 0.5, 0.25],
             "support": [[0,0],[0,1],[0,2],[1,1],[1,2],[2,2]]})";
  }
  auto r = invoke({"extend", "--input", spec_path, "--trials", "25", "--seed", "3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("bound").get<double>() == doctest::Approx(1.0));
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("rho_tilde").size() == 3);

  auto rv = invoke({"verify-extend", "--input", spec_path, "--trials", "10"});
  CHECK(rv.code == 0);
  std::remove(spec_path.c_str());
}

TEST_CASE("norm subcommand reads symbol files") {
  std::string path = "symbol_test.json";
  {
    std::ofstream f(path);
    f << R"({"rows": 2, "cols": 2,
             "entries": [[0,0,1.0,0.0],[0,1,1.0,0.0],[1,0,1.0,0.0],[1,1,-1.0,0.0]]})";
  }
  auto r = invoke({"norm", "--kind", "schur", "--input", path, "--p", "4", "--restarts",
                   "6", "--seed", "2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  double lower = j.at("estimate").at("lower").get<double>();
  CHECK(lower == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-2));
  std::remove(path.c_str());
}

TEST_CASE("atomic check passes") {
  auto r = invoke({"atomic-check", "--p", "0.5", "--trials", "30", "--N", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("skipped blocks subcommand") {
  auto r = invoke({"skipped-blocks", "--n", "2", "--eps", "0.1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass").get<bool>());
}

TEST_CASE("sumset subcommand") {
  auto r = invoke({"sumset", "--n", "2", "--p", "4", "--restarts", "6"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("analytic").get<double>() == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(j.at("witnessed").get<double>() <= j.at("analytic").get<double>() + 1e-6);
}

TEST_CASE("uncond subcommand") {
  auto r = invoke({"uncond", "--rows", "2", "--cols", "2", "--p", "4", "--mode",
                   "unimodular", "--restarts", "6"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("analytic_full_square").get<double>() == doctest::Approx(std::pow(2.0, 0.25)));
}
