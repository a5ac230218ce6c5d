#include "support.hpp"

#include "gmt/cli.hpp"
#include "gmt/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gmt;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gmt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GMT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"jacobian", "--no-such-flag"}).code == 2);
  CHECK(run({"mass"}).code == 2);  // --current is required
  CHECK(run({"mass", "--current", "/nonexistent.json"}).code == 2);
  CHECK(run({"flatnorm"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("numerical failures print a diagnostic and exit with 1", "[cli]") {
  const Run r = run({"jacobian", "--kind", "holmes"});
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  CHECK(j["error"] == "InvalidInput");
  CHECK(j.contains("message"));
}

TEST_CASE("jacobian and demos print their values", "[cli]") {
  CHECK(run({"jacobian", "--norm", "linf", "--dim", "2", "--kind", "mstar"}).out == "1.0\n");
  CHECK(run({"flatnorm", "--demo", "square-boundary"}).out == "1.0\n");
  const Run cone = run({"cone", "--demo", "circle", "--m", "64"});
  CHECK(cone.code == 0);
  CHECK(cone.out.rfind("ratio 0.5 ", 0) == 0);
}

TEST_CASE("mass and slice commands", "[cli]") {
  const Run m = run({"mass", "--current", data("square_linf.json"), "--kind", "ir"});
  CHECK(m.code == 0);
  CHECK(m.out.find(": 1.0") != std::string::npos);
  const Run s = run({"slice", "--current", data("square_l2.json"), "--axis", "0", "--level", "0.3"});
  REQUIRE(s.code == 0);
  const PolyhedralCurrent slice = current_from_json(Json::parse(s.out));
  CHECK(slice.dim() == 1);
  CHECK(s.err.find("mass 1.0") != std::string::npos);
  const Run f = run({"slice", "--current", data("circle32.json"), "--axis", "1", "--fubini"});
  REQUIRE(f.code == 0);
  CHECK(f.out.rfind("p,slice_mass\n", 0) == 0);
}

TEST_CASE("artifacts go to --out and the summary to stdout", "[cli]") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "gmt_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "decompose.json").string();
  const Run r = run({"decompose", "--current", data("circle32.json"), "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0 paths, 1 loops") != std::string::npos);
  const Json j = read_json_file(path);
  CHECK(j["loops"].size() == 1);
  const Run d = run({"--out-dir", dir.string(), "witness", "linfty-square"});
  REQUIRE(d.code == 0);
  CHECK(std::filesystem::exists(dir / "witness.json"));
}

TEST_CASE("flat norm of a stored chain", "[cli]") {
  const Run r = run({"flatnorm", "--complex", data("staircase_complex.json"), "--chain", data("staircase_minus_diagonal.json")});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["certified"] == true);
  CHECK(j["value"].get<double>() <= 0.125 + 1e-9);
}

TEST_CASE("filling from a corpus name and from an OFF file agree", "[cli]") {
  const Run a = run({"filling", "--candidate", "square-tent-0.2"});
  const Run b = run({"filling", "--body", "square", "--candidate", data("corpus/square-tent-0.2.off")});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(Json::parse(a.out)["gap_ir"] == Json::parse(b.out)["gap_ir"]);
}

TEST_CASE("verify-all on one criterion", "[cli]") {
  const Run r = run({"verify-all", "--only", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS 10 ", 0) == 0);
}
