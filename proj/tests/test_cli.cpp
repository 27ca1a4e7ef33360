#include "cli.hpp"
#include "slelab/algebra/pbw_vector.hpp"
#include "slelab/flow/loewner.hpp"
#include "slelab/io/format.hpp"
#include "slelab/io/json_codec.hpp"

#include <doctest.h>

#include <bit>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace slelab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("slelab-test-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("double formatting round trips bit for bit") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::bit_cast<double>(rng());
    if (!std::isfinite(x)) {
      continue;
    }
    CHECK(std::bit_cast<std::uint64_t>(io::parse_double(io::format_double(x))) == std::bit_cast<std::uint64_t>(x));
  }
  CHECK_THROWS(io::parse_double("1.5x"));
  CHECK_THROWS(io::parse_double(""));
}

TEST_CASE("complex parsing") {
  CHECK(io::parse_complex("2i") == flow::CPoint(0, 2));
  CHECK(io::parse_complex("1.5-2i") == flow::CPoint(1.5, -2));
  CHECK(io::parse_complex("-i") == flow::CPoint(0, -1));
  CHECK(io::parse_complex("3") == flow::CPoint(3, 0));
  CHECK(io::parse_complex("1e-3+1e+2i") == flow::CPoint(1e-3, 1e2));
  CHECK(io::parse_complex("0.5 + i") == flow::CPoint(0.5, 1));
  CHECK_THROWS(io::parse_complex("2j"));
  CHECK_THROWS(io::parse_complex("a+bi"));
  const flow::CPoint z(-0.1, 3.25);
  CHECK(io::parse_complex(io::format_complex(z)) == z);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"trace", "--kappa", "2"}).code == cli::kUsage);
  CHECK(run({"trace", "--grade", "0"}).code == cli::kUsage);
  CHECK(run({"trace", "--T", "0.3", "--dt", "0.25"}).code == cli::kUsage);
  CHECK(run({"stats", "scale-invariance", "--seed", "1", "--z", "oops"}).code == cli::kUsage);
  CHECK(run({"stats", "stationarity"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("zero-drive trace lies on the bisector") {
  const auto r = run({"trace", "--grade", "2", "--kappa", "0", "--T", "1", "--points", "4", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::Json::parse(r.out);
  const auto curve = io::trace_from_json(j);
  REQUIRE(curve.points.size() == 5);
  CHECK(std::abs(std::abs(curve.points.back().point) - std::pow(8.0, 0.25)) < 1e-9);
  CHECK(j["manifest"]["subcommand"] == "trace");
}

TEST_CASE("csv and json traces agree and carry manifests") {
  TempDir dir;
  const auto csv = dir.path / "t.csv";
  const auto json = dir.path / "t.json";
  const std::vector<std::string> common{"trace", "--grade", "2", "--kappa", "4", "--seed", "12",
                                        "--T", "0.2", "--dt", "1e-3", "--points", "10"};
  auto a = common;
  a.insert(a.end(), {"--format", "csv", "--out", csv.string()});
  auto b = common;
  b.insert(b.end(), {"--format", "json", "--out", json.string()});
  REQUIRE(run(a).code == cli::kOk);
  REQUIRE(run(b).code == cli::kOk);
  const auto from_csv = io::trace_from_csv(slurp(csv));
  const auto from_json = io::trace_from_json(io::Json::parse(slurp(json)));
  REQUIRE(from_csv.points.size() == from_json.points.size());
  for (std::size_t i = 0; i < from_csv.points.size(); ++i) {
    CHECK(from_csv.points[i].t == from_json.points[i].t);
    CHECK(from_csv.points[i].point == from_json.points[i].point);
  }
  const auto manifest = io::Json::parse(slurp(csv.string() + ".manifest.json"));
  CHECK(manifest["seed"] == 12);
  CHECK(manifest["flags"]["format"] == "csv");
  // same seed, same bytes
  const auto again = dir.path / "u.csv";
  auto c = common;
  c.insert(c.end(), {"--format", "csv", "--out", again.string()});
  REQUIRE(run(c).code == cli::kOk);
  CHECK(slurp(again) == slurp(csv));
}

TEST_CASE("hull subcommand") {
  const auto r = run({"hull", "--grade", "2", "--t", "0.125", "--dt", "1e-3", "--grid", "2,40,21"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "re,im,tau");
  int finite = 0;
  while (std::getline(lines, line)) {
    const auto tau = line.substr(line.rfind(',') + 1);
    finite += tau != "inf" && io::parse_double(tau) <= 0.125 ? 1 : 0;
  }
  CHECK(finite == 20);
}

TEST_CASE("virasoro subcommands") {
  const auto sing = run({"virasoro", "singular", "--level", "4", "--c=-22/5", "--delta", "0"});
  REQUIRE(sing.code == cli::kOk);
  CHECK(sing.out.find("125/27") != std::string::npos);
  const auto gram = run({"virasoro", "gram", "--level", "1", "--c", "0", "--delta", "0"});
  REQUIRE(gram.code == cli::kOk);
  CHECK(io::Json::parse(gram.out)["matrix"][0][0] == "0");
  CHECK(run({"virasoro", "reduce", "--model", "5,2", "--term", "4=1", "--term", "2,2=-5/3", "--expect-null"}).code ==
        cli::kOk);
  CHECK(run({"virasoro", "reduce", "--model", "5,2", "--term", "4=1", "--expect-null"}).code == cli::kIdentity);
  CHECK(run({"virasoro", "reduce", "--model", "5,2", "--term", "4=x"}).code == cli::kUsage);
}

TEST_CASE("bridge subcommands") {
  const std::vector<std::string> base{"bridge", "solve-kappa", "--grade", "2", "--model", "5,2", "--module", "1,1"};
  auto s2 = base;
  s2.insert(s2.end(), {"--sign", "2", "--expect", "40"});
  CHECK(run(s2).code == cli::kOk);
  auto wrong = base;
  wrong.insert(wrong.end(), {"--sign", "2", "--expect", "39"});
  CHECK(run(wrong).code == cli::kIdentity);
  auto s1 = base;
  s1.insert(s1.end(), {"--sign", "1", "--expect-none"});
  const auto r1 = run(s1);
  CHECK(r1.code == cli::kOk);
  CHECK(io::Json::parse(r1.out)["rejected_negative"][0] == "-40");
  CHECK(run({"bridge", "obstruction", "--grade", "2", "--sign", "2", "--kappa", "40"}).code == cli::kOk);
  CHECK(run({"bridge", "singular", "--grade", "1", "--sign", "1"}).code == cli::kOk);
}

TEST_CASE("stats subcommand") {
  const auto r = run({"stats", "scale-invariance", "--seed", "3", "--N", "200", "--dt", "1e-3", "--shared-streams"});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::Json::parse(r.out);
  CHECK(j["p_value"] == 1.0);
  CHECK(j["seed"] == 3);
  CHECK(j["status"] == "pass");
}

TEST_CASE("selftest subset") {
  const auto r = run({"selftest", "--only", "1,2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("[PASS] 1") != std::string::npos);
  CHECK(r.out.find("[PASS] 2") != std::string::npos);
}

TEST_CASE("JSON codecs") {
  const auto params = algebra::VermaParams::numeric(algebra::Rational(-22, 5), algebra::Rational(0));
  const algebra::PBWVector v(4, params,
                             {{algebra::Partition{4}, algebra::ParamPoly(1)},
                              {algebra::Partition{2, 2}, algebra::ParamPoly(algebra::Rational(-5, 3))}});
  CHECK(io::pbw_from_json(io::to_json(v)) == v);
  const auto hull = flow::hull_grid(flow::DrivePath::zero(1.0, 1e-3), {1, 1, 1e-3, 1e-8}, 0.0, {1.0, 2, 3});
  const auto j = io::to_json(hull);
  CHECK(j.dump().find("null") != std::string::npos);
}
