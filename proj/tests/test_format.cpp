#include <doctest.h>

#include <fstream>
#include <sstream>

#include "semient/driver.hpp"
#include "semient/suite.hpp"
#include "semient/yangbaxter.hpp"
#include "support.hpp"

using namespace semient;
using namespace fixtures;

namespace {

const Field Q = Field::rationals();

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureFile registry(const std::optional<Field> &f = std::nullopt) {
  return StructureFile::load_directory(default_data_dir() / "registry", f);
}

} // namespace

TEST_SUITE("format") {

TEST_CASE("registry algebras equal the hand-built fixtures") {
  const StructureFile r = registry();
  for (const auto &[name, a] : all_algebras(Q)) {
    CAPTURE(name);
    if (name == "K" || name == "KZ2" || name == "Kmon")
      continue;
    const Algebra got = r.algebra(name);
    CHECK(got.space().labels() == a.space().labels());
    CHECK(got.mult().reshaped(a.mult().domain(), a.mult().codomain()) == a.mult());
    CHECK(got.unit() == a.unit());
  }
  for (const auto &[name, h] : std::vector<std::pair<std::string, Bialgebra>>{{"KZ2", kz2(Q)}, {"Kmon", kmon(Q)}}) {
    const Bialgebra got = r.bialgebra(name);
    CHECK(got.algebra().mult().reshaped(h.algebra().mult().domain(), h.algebra().mult().codomain()) == h.algebra().mult());
    CHECK(got.coalgebra().comult().reshaped(h.coalgebra().comult().domain(), h.coalgebra().comult().codomain()) ==
          h.coalgebra().comult());
    CHECK(got.coalgebra().counit() == h.coalgebra().counit());
  }
  const ModuleAction sign = r.module("KZ2-sign");
  CHECK(sign.action().reshaped(character(kz2(Q), {1, -1}).action().domain(), character(kz2(Q), {1, -1}).action().codomain()) ==
        character(kz2(Q), {1, -1}).action());
  CHECK(r.coalgebra("Kx2-1*").comult().reshaped(dualize_algebra(kx2(Q, 1)).comult().domain(),
                                                dualize_algebra(kx2(Q, 1)).comult().codomain()) ==
        dualize_algebra(kx2(Q, 1)).comult());
  CHECK_NOTHROW(r.validate());
}

TEST_CASE("stored quadratic table equals the constructed one") {
  const StructureFile r = registry();
  const EntwiningData e = r.entwining("Kx2-1-table");
  CHECK(e.psi() == make_quadratic_factorization(kx2(Q, 1), Q.from_int(2)).psi());
}

TEST_CASE("parse then dump is the identity on shipped files") {
  for (const auto &dir : {default_data_dir() / "registry"}) {
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
      CAPTURE(entry.path().string());
      const std::string text = slurp(entry.path());
      CHECK(StructureFile::parse(text).dump() == text);
    }
  }
  for (const auto &entry : std::filesystem::directory_iterator(default_data_dir() / "grids")) {
    const std::string text = slurp(entry.path());
    CHECK(canonical(Json::parse(text)) == text);
  }
}

TEST_CASE("emitted objects parse back to the same structure") {
  StructureFile f(Q);
  f.put("A", Object{kx3(Q)});
  f.put("H", Object{kz2(Q)});
  f.put("M", Object{regular_module(kx2(Q, 2))});
  f.put("psi", Object{make_gamma_q(kx2(Q, 1), Q.from_fraction(-1, 3))});
  const StructureFile back = StructureFile::parse(f.dump());
  CHECK(back.dump() == f.dump());
  CHECK(back.algebra("A").mult() == kx3(Q).mult());
  CHECK(back.entwining("psi").psi() == make_gamma_q(kx2(Q, 1), Q.from_fraction(-1, 3)).psi());
  CHECK(std::get<EntwiningData>(back.object("psi")).kind() == EntwiningKind::semi);
  CHECK(back.type_of("M") == "module");
}

TEST_CASE("the field override reduces scalars") {
  const StructureFile r = registry(Field::parse("fp:7"));
  CHECK(r.field() == Field::parse("fp:7"));
  const Algebra a = r.algebra("Kx2-1");
  CHECK(a.mult().at(0, 3) == Field::parse("fp:7").one());
}

TEST_CASE("malformed input is an input error") {
  CHECK_THROWS_AS(StructureFile::parse("{"), InputError);
  CHECK_THROWS_AS(StructureFile::parse(R"({"field":"q","format":1,"objects":{"A":{"type":"algebra","basis":["1"],"mult":[["1/0"]],"unit":["1"]}}})")
                      .validate(),
                  InputError);
  CHECK_THROWS_AS(StructureFile::parse(R"({"field":"q","format":1,"objects":{"A":{"type":"algebra","basis":["1","x"],"mult":[["1"]],"unit":["1","0"]}}})")
                      .validate(),
                  InputError);
  CHECK_THROWS_AS(StructureFile::parse(R"({"field":"q","format":1,"objects":{"A":{"type":"wormhole"}}})").validate(),
                  InputError);
  CHECK_THROWS_AS(StructureFile::parse(R"({"field":"q","format":2,"objects":{}})"), InputError);
  StructureFile f(Q);
  f.put("A", Object{kx3(Q)});
  StructureFile g(Q);
  g.put("A", Object{kx3(Q)});
  CHECK_THROWS_AS(f.merge(g), InputError);
  CHECK_THROWS_AS(f.algebra("missing"), InputError);
}

TEST_CASE("expressions") {
  const Expression e = parse_expression("gamma_q@Kx2-1,q=1/2");
  CHECK(e.name == "gamma_q");
  CHECK(e.positional == std::vector<std::string>{"Kx2-1"});
  CHECK(e.keyed.at("q") == "1/2");
  CHECK(is_expression("twist@A,B"));
  CHECK_FALSE(is_expression("Kx2-1"));
  CHECK_THROWS_AS(parse_expression("@A"), InputError);
}

TEST_CASE("reports serialize with witnesses and residuals") {
  Report r("demo");
  const Space s({"a", "b"});
  r.expect_equal("id", LinearMap::identity(s, Q), LinearMap(s, s, Q));
  const Json j = report_to_json(r);
  CHECK(j.dump().find("\"a\"") != std::string::npos);
  CHECK(r.first_failure()->witness == std::vector<std::string>{"a"});
  CHECK(r.first_failure()->residual == std::vector<std::string>{"1", "0"});
}

} // TEST_SUITE
