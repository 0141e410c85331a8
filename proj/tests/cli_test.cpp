#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "quasitri/catalog.hpp"
#include "quasitri/io.hpp"
#include "support/cli_runner.hpp"

using namespace quasitri;
using quasitri::testing::run_cli;

namespace {

std::filesystem::path fixtures() {
  const auto dir = std::filesystem::temp_directory_path() / "quasitri_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& body) {
  const auto path = fixtures() / name;
  std::ofstream out(path);
  out << body;
  return path.string();
}

}  // namespace

TEST_CASE("emit dumps a parseable catalog entry") {
  const auto res = run_cli("--emit su2-standard --q 2");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j["name"] == "su2-standard");
  CHECK(j.contains("rmatrix"));
  CHECK(run_cli("--emit nothing-here").exit_code == 2);
}

TEST_CASE("exit code contract on the ybe check") {
  CHECK(run_cli("check ybe --catalog su2-standard --q 2").exit_code == 0);

  const std::string identity = write_fixture("identity_r.json", rmat_to_json(RMat::identity(2)).dump());
  const auto idres = run_cli("check ybe --input " + identity);
  CHECK(idres.exit_code == 0);
  CHECK(idres.output.find("qybe_residual: 0.0000000000000000e+00") != std::string::npos);

  Mat bad = standard_r_su2(2.0).entries;
  bad(0, 1) = 0.3;
  const std::string broken =
      write_fixture("broken_r.json", rmat_to_json(RMat(2, bad, RConvention::kPlain)).dump());
  CHECK(run_cli("check ybe --input " + broken).exit_code == 1);

  CHECK(run_cli("check ybe --input " + fixtures().string() + "/no_such.json").exit_code == 2);
  const std::string garbage = write_fixture("garbage.json", "{this is not json");
  CHECK(run_cli("check ybe --input " + garbage).exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check").exit_code == 2);
  CHECK(run_cli("check ybe --report yaml").exit_code == 2);
  CHECK(run_cli("check poisson-map sideways --catalog sl2-real").exit_code == 2);
  CHECK(run_cli("check ybe").exit_code == 2);  // neither --input nor --catalog
  CHECK(run_cli("check ybe --catalog su2-standard --input x.json").exit_code == 2);
}

TEST_CASE("reports are deterministic and json mode is parseable") {
  const std::string args = "check poisson-map two-link --catalog sl2-real --samples 5 --seed 42";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const auto j = run_cli(args + " --report json");
  const json parsed = json::parse(j.output);
  CHECK(parsed["verdict"] == "pass");
  CHECK(parsed["seed"] == 42);
  CHECK(parsed["residuals"].contains("map_residual"));
  CHECK(parsed["inputs_digest"] == json::parse(run_cli(args + " --report json").output)["inputs_digest"]);
}

TEST_CASE("homomorphism certificates appear in json reports") {
  const auto res = run_cli("check homomorphism --catalog su2-standard --q 2 --report json");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  REQUIRE(j.contains("certificates"));
  CHECK(j["certificates"].size() == 16);
  bool some_entry = false;
  for (const auto& defect : j["certificates"])
    if (!defect["certificate"].empty()) some_entry = true;
  CHECK(some_entry);
}

TEST_CASE("--out writes the report to a file") {
  const std::string out = (fixtures() / "report.json").string();
  std::filesystem::remove(out);
  const auto res = run_cli("check cybe --catalog sl2-real --report json --out " + out);
  CHECK(res.exit_code == 0);
  CHECK(res.output.empty());
  const json j = json::parse(std::ifstream(out));
  CHECK(j["check"] == "cybe");
}

TEST_CASE("catalog two-link fixtures pass and perturbed inputs fail") {
  const CatalogEntry entry = sl2_real();
  ordered_json spec;
  spec["algebra"] = algebra_to_json(*entry.algebra);
  spec["r"] = tensor_to_json(entry.tensor("r"));
  spec["phi"] = {{"kind", "constant"},
                 {"tensor", tensor_to_json(entry.tensor("w") * cplx(-2.0, 0))}};
  const std::string doubled = write_fixture("twolink_doubled.json", spec.dump());
  CHECK(run_cli("check poisson-map two-link --input " + doubled + " --samples 5").exit_code == 1);
  CHECK(run_cli("check poisson-map compose --input " + doubled + " --samples 5").exit_code == 1);
  CHECK(run_cli("check jacobi --input " + doubled + " --samples 3 --tolerance 1e-4").exit_code == 1);
}
