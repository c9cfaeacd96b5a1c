#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using qillum::cli::execute;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the measures as JSON") {
  const auto r = run({"eval", "--c", "1,-1,1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["qa"].get<double>() == doctest::Approx(0.057048).epsilon(1e-9));
  CHECK(j["delta_enc"].get<double>() == doctest::Approx(0.057048).epsilon(1e-9));
  CHECK(j["separable"].get<bool>() == false);
  CHECK(run({"eval", "--c", "-1,0,0"}).code == 0);
  CHECK(run({"eval", "--c", "1,-1,1", "--eta", "1"}).out.find("0.237517") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"eval", "--c", "2,0,0"}).code == 2);
  CHECK(run({"eval", "--c", "1,1,1"}).code == 2);
  CHECK(run({"eval", "--c", "1,2"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"eval", "--c", "0,0,0", "--bogus"}).code == 2);
  CHECK(run({"eval", "--c", "0,0,0", "--p0", "1"}).code == 2);
  CHECK(run({"figure", "fig1", "--axes", "qa-eof"}).code == 2);
  CHECK(run({"figure", "fig9"}).code == 2);
  CHECK(run({"cluster", "--axes", "qa-eof", "--stat", "median", "--step", "0.5"}).code == 2);
  CHECK(run({"verify", "--check", "nothing"}).code == 2);
  CHECK(run({}).code == 2);
  const auto bad = run({"sweep", "--step", "0"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sweep", "--help"}).code == 0);
}

TEST_CASE("verify exit status follows the outcome") {
  const auto ok = run({"verify", "--check", "identity", "--step", "1.0"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("PASS identity", 0) == 0);
  // The beta upper bound is exceeded by about 1.3e-5 at half reflectivity.
  const auto bounds = run({"verify", "--check", "bounds", "--step", "0.05"});
  CHECK(bounds.code == 1);
  CHECK(bounds.out.rfind("FAIL bounds", 0) == 0);
}

TEST_CASE("unwritable output exits with 3") {
  const auto path =
      (std::filesystem::temp_directory_path() / "qillum_missing_dir" / "out.csv").string();
  CHECK(run({"sweep", "--step", "1.0", "--out", path}).code == 3);
}

TEST_CASE("data commands") {
  const auto sweep = run({"sweep", "--step", "1.0"});
  REQUIRE(sweep.code == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 12);
  const auto ent = run({"sweep", "--step", "1.0", "--entangled-only"});
  CHECK(std::count(ent.out.begin(), ent.out.end(), '\n') == 5);
  CHECK(run({"sweep", "--step", "1.0"}).out == sweep.out);

  const auto toy = run({"toy", "--step", "0.5"});
  REQUIRE(toy.code == 0);
  CHECK(toy.out.find("1.000000000,0.800000000,0.666666667") != std::string::npos);

  const auto cl = run({"cluster", "--axes", "qa-eof", "--stat", "max-discord", "--step", "0.25",
                       "--mesh", "20"});
  REQUIRE(cl.code == 0);
  CHECK(cl.out.rfind("qa_bin,eof_bin,", 0) == 0);

  const auto fig = run({"figure", "fig6", "--step", "0.25"});
  REQUIRE(fig.code == 0);
  CHECK(fig.out.rfind("<?xml", 0) == 0);
  CHECK(fig.out.find("min-discord") != std::string::npos);
}
