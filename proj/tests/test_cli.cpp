#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semient/driver.hpp"
#include "semient/suite.hpp"
#include "semient/yangbaxter.hpp"
#include "support.hpp"

using namespace semient;

namespace {

const Field Q = Field::rationals();
const std::filesystem::path tmp = SEMIENT_TEST_TMP;

struct Run {
  int status;
  std::string out;
};

/// Runs the CLI with stdout captured to a file; stderr is discarded.
Run cli(const std::string &args, const std::string &tag) {
  const std::filesystem::path out = tmp / ("cli-" + tag + ".out");
  const std::string cmd = std::string("\"") + SEMIENT_CLI + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("verify exit codes") {
  CHECK(cli("verify registry 'gamma_q@Kx2-1,q=1' semi-entwining", "ok").status == 0);
  const Run bad = cli("verify registry braid-corrupted braid", "bad");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("witness: (1, x, x)") != std::string::npos);
  CHECK(cli("verify registry Kx2-1 no-such-check", "unknown").status == 2);
  CHECK(cli("verify registry no-such-object algebra", "missing").status == 2);
  CHECK(cli("--field fp:8 list", "field").status == 2);
  CHECK(cli("frobnicate", "usage").status == 2);
  CHECK(cli("--help", "help").status == 0);
}

TEST_CASE("verify json output is a report") {
  const Run r = cli("verify registry KZ2 bialgebra --json", "json");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(canonical(j) == r.out);
}

TEST_CASE("construct emits what the library builds") {
  const Run r = cli("construct 'R_rs@Kx2-1,r=1,s=2' --name R", "rrs");
  REQUIRE(r.status == 0);
  const StructureFile f = StructureFile::parse(r.out);
  CHECK(f.map("R") == make_R_rs(fixtures::kx2(Q, 1), Q.one(), Q.from_int(2)));
}

TEST_CASE("construct then verify gives the same verdict as verify on the expression") {
  const Run made = cli("construct 'gamma_q@M2,q=2' --name g", "g2");
  REQUIRE(made.status == 0);
  const std::filesystem::path file = tmp / "g2.json";
  std::ofstream(file) << made.out;
  for (const char *check : {"semi-entwining", "factorization"}) {
    const Run direct = cli(std::string("verify registry 'gamma_q@M2,q=2' ") + check, "direct");
    const Run stored = cli("verify " + file.string() + " g " + check, "stored");
    CHECK(direct.status == stored.status);
    CHECK(direct.out == stored.out);
  }
}

TEST_CASE("biproduct with a non-integral is refused") {
  const Run made = cli("construct 'gamma_q@KZ2,q=1' --name g1", "g1");
  REQUIRE(made.status == 0);
  const std::filesystem::path file = tmp / "g1.json";
  std::ofstream(file) << made.out;
  const Run r = cli("construct 'biproduct@g1,bialgebra=KZ2,x=KZ2-g' --file " + file.string(), "bip");
  CHECK(r.status == 1);
  CHECK(r.out.find("integral") != std::string::npos);
  CHECK(cli("construct 'biproduct@g1,bialgebra=KZ2' --file " + file.string(), "bip-ok").status == 0);
}

TEST_CASE("suite honours grid tags and is independent of the worker count") {
  const std::string grid = (default_data_dir() / "grids" / "type2.json").string();
  const Run one = cli("suite --grid " + grid + " --jobs 1 --json", "s1");
  const Run two = cli("suite --grid " + grid + " --jobs 2 --json", "s2");
  CHECK(one.status == 0);
  CHECK(one.out == two.out);
  const Json j = Json::parse(one.out);
  std::size_t rows = 0;
  for (const auto &row : j.at("rows")) {
    ++rows;
    CHECK(row.at("id").get<std::string>().rfind("c9-type", 0) == 0);
  }
  CHECK(rows == 3);
}

TEST_CASE("list names objects and constructions") {
  const Run r = cli("list --checks", "list");
  CHECK(r.status == 0);
  CHECK(r.out.find("Kx2-1  algebra") != std::string::npos);
  CHECK(r.out.find("constructions:") != std::string::npos);
}

TEST_CASE("driver dispatch") {
  const StructureFile f = StructureFile::load_directory(default_data_dir() / "registry");
  const Object a = f.object("Kx2-1");
  const auto names = check_names(a);
  CHECK(std::find(names.begin(), names.end(), "algebra") != names.end());
  CHECK(run_check(a, "algebra").passed());
  CHECK_THROWS_AS(run_check(a, "braid"), InputError);
  const Object g = resolve_object(f, "gamma_q@Kx2-1,q=2");
  CHECK(std::get<EntwiningData>(g).psi() == make_gamma_q(fixtures::kx2(Q, 1), Q.from_int(2)).psi());
  CHECK_THROWS_AS(resolve_object(f, "nope@Kx2-1"), InputError);
}

} // TEST_SUITE
