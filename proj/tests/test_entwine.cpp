#include <doctest.h>

#include <random>

#include "semient/tambara.hpp"
#include "semient/yangbaxter.hpp"
#include "support.hpp"

using namespace semient;
using namespace fixtures;

namespace {

const Field Q = Field::rationals();

/// Coordinates of psi(e_b (x) e_a) as a dim(A) x dim(B) grid.
std::vector<std::vector<Scalar>> image(const LinearMap &psi, std::size_t b, std::size_t a, std::size_t na,
                                       std::size_t nb) {
  std::vector<std::vector<Scalar>> out(na, std::vector<Scalar>(nb, psi.field().zero()));
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      out[x][y] = psi.at(x * nb + y, b * na + a);
  return out;
}

/// First (b, a, a') where psi(b (x) a a') differs from a_alpha a'_beta (x) b^{alpha beta},
/// computed elementwise from the structure constants.
std::optional<std::vector<std::size_t>> first_semi_failure(const Algebra &a, std::size_t nb, const LinearMap &psi) {
  const std::size_t na = a.dim();
  const Field &k = a.field();
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) {
        std::vector<std::vector<Scalar>> lhs(na, std::vector<Scalar>(nb, k.zero()));
        const Vector prod = a.multiply(basis_vector(a.space(), i, k), basis_vector(a.space(), j, k));
        for (std::size_t t = 0; t < na; ++t) {
          const auto img = image(psi, b, t, na, nb);
          for (std::size_t x = 0; x < na; ++x)
            for (std::size_t y = 0; y < nb; ++y)
              lhs[x][y] += prod[t] * img[x][y];
        }
        std::vector<std::vector<Scalar>> rhs(na, std::vector<Scalar>(nb, k.zero()));
        const auto first = image(psi, b, i, na, nb);
        for (std::size_t al = 0; al < na; ++al)
          for (std::size_t be = 0; be < nb; ++be) {
            if (first[al][be].is_zero())
              continue;
            const auto second = image(psi, be, j, na, nb);
            for (std::size_t ga = 0; ga < na; ++ga)
              for (std::size_t de = 0; de < nb; ++de) {
                if (second[ga][de].is_zero())
                  continue;
                const Vector p = a.multiply(basis_vector(a.space(), al, k), basis_vector(a.space(), ga, k));
                for (std::size_t x = 0; x < na; ++x)
                  rhs[x][de] += first[al][be] * second[ga][de] * p[x];
              }
          }
        if (lhs != rhs)
          return std::vector<std::size_t>{b, i, j};
      }
  return std::nullopt;
}

std::vector<Scalar> qs() { return {Q.zero(), Q.one(), Q.from_int(-1), Q.from_int(2), Q.from_fraction(1, 2)}; }

Carrier carrier_of_module(const ModuleAction &m) { return Carrier::plain(m.module()); }

} // namespace

TEST_SUITE("entwine") {

TEST_CASE("gamma_q and eta_q are semi-entwinings on every algebra") {
  for (const auto &[name, a] : all_algebras(Q))
    for (const Scalar &q : qs()) {
      CAPTURE(name);
      CAPTURE(q.to_string());
      CHECK(check_semi_entwining(make_gamma_q(a, q)).passed());
      CHECK(check_semi_entwining(make_eta_q(a, q)).passed());
    }
}

TEST_CASE("gamma_q matches its defining formula on K[x]/(x^2 - 1)") {
  const Algebra a = kx2(Q, 1);
  const Scalar q = Q.from_int(2);
  const LinearMap psi = make_gamma_q(a, q).psi();
  // b (x) a |-> 1 (x) ba + q ba (x) 1 - q b (x) a, column x (x) x: ba = 1.
  // 1 (x) 1 + 2 (1 (x) 1) - 2 x (x) x.
  const std::size_t col = 1 * 2 + 1;
  CHECK(psi.at(0, col) == Q.from_int(3));
  CHECK(psi.at(1, col).is_zero());
  CHECK(psi.at(2, col).is_zero());
  CHECK(psi.at(3, col) == Q.from_int(-2));
  for (const long long q2 : {0, 1, -1, 2})
    CHECK(check_semi_entwining(make_gamma_q(a, Q.from_int(q2))).passed());
}

TEST_CASE("the module map m (x) a -> 1 (x) ma is a semi-entwining") {
  for (const auto &[name, a] : all_algebras(Q))
    CHECK(check_semi_entwining(make_module_semi(regular_module(a))).passed());
  const Bialgebra h = kz2(Q);
  CHECK(check_semi_entwining(make_module_semi(character(h, {1, -1}))).passed());
}

TEST_CASE("the flip satisfies every entwining-type axiom") {
  for (const auto &[bn, b] : all_algebras(Q))
    for (const auto &[an, a] : all_algebras(Q)) {
      const EntwiningData t = make_twist(Carrier::of(b), Carrier::of(a), EntwiningKind::factorization);
      CHECK(check_semi_entwining(t).passed());
      CHECK(check_algebra_factorization(t).passed());
    }
  const Coalgebra c = grouplike(Q, {"g0", "g1"});
  const EntwiningData ct = make_twist(Carrier::of(trivial_bialgebra(Q)), Carrier::of(c), EntwiningKind::cosemi);
  CHECK(check_cosemi_entwining(ct).passed());
  CHECK(check_coalgebra_factorization(ct).passed());
  CHECK(check_entwining_rr(ct).passed());
  CHECK(check_declared(ct).passed());
}

TEST_CASE("quadratic table is an algebra factorization") {
  for (const auto &[p, q] : std::vector<std::pair<long long, long long>>{{1, 2}, {0, 0}, {2, 4}, {1, 3}, {2, -1}}) {
    CAPTURE(p);
    CAPTURE(q);
    const EntwiningData e = make_quadratic_factorization(kx2(Q, p), Q.from_int(q));
    CHECK(check_algebra_factorization(e).passed());
    CHECK(check_declared(e).passed());
  }
  CHECK_THROWS_AS(make_quadratic_factorization(kx3(Q), Q.one()), StructureError);
  CHECK_THROWS_AS(make_quadratic_factorization(m2(Q), Q.one()), StructureError);
}

TEST_CASE("gamma_1 is a factorization on matrices while gamma_2 is not") {
  const Algebra a = m2(Q);
  CHECK(check_algebra_factorization(make_gamma_q(a, Q.one()).with_kind(EntwiningKind::factorization)).passed());
  const Report r = check_algebra_factorization(make_gamma_q(a, Q.from_int(2)).with_kind(EntwiningKind::factorization));
  CHECK_FALSE(r.passed());
  CHECK(check_semi_entwining(make_gamma_q(a, Q.from_int(2))).passed());
  // The failing axiom is one of the two on B; both semi axioms hold.
  const CheckResult *c = r.first_failure();
  REQUIRE(c != nullptr);
  CHECK(c->name.rfind("factorization-", 0) == 0);
  CHECK_FALSE(c->witness.empty());
}

TEST_CASE("a corrupted entry is reported at the lexicographically first failing tuple") {
  std::mt19937 rng(21);
  int caught = 0;
  for (const auto &[name, a] : all_algebras(Q)) {
    if (a.dim() > 3)
      continue;
    const EntwiningData g = make_gamma_q(a, Q.one());
    for (int t = 0; t < 6; ++t) {
      const std::size_t row = rng() % g.psi().rows();
      const std::size_t col = rng() % g.psi().cols();
      const EntwiningData bad = g.with_psi(bump(g.psi(), row, col));
      const Report r = check_semi_entwining(bad);
      const auto oracle = first_semi_failure(a, a.dim(), bad.psi());
      const CheckResult *mult = r.find("semi-multiplicative");
      REQUIRE(mult != nullptr);
      CHECK(mult->passed == !oracle.has_value());
      if (oracle) {
        ++caught;
        const Space dom = tensor(a.space(), a.space(), a.space());
        CHECK(mult->witness == dom.leaf_labels(dom.join_index(*oracle)));
      }
    }
  }
  CHECK(caught > 0);
}

TEST_CASE("Doi-Koppinen map over K[Z/2] with the regular coaction") {
  const Bialgebra h = kz2(Q);
  const ComoduleCoaction delta = regular_comodule(h.coalgebra());
  const Space hs = h.space();
  const std::size_t g = 1;
  SUBCASE("trivial module gives the flip on g") {
    const EntwiningData e = make_doi_koppinen(h, h.algebra(), delta, character(h, {1, 1}));
    CHECK(check_semi_entwining(e).passed());
    CHECK(e.psi().apply(basis_vector(e.psi().domain(), g, Q)) == basis_vector(e.psi().codomain(), g, Q));
  }
  SUBCASE("sign module gives g (x) -1") {
    const EntwiningData e = make_doi_koppinen(h, h.algebra(), delta, character(h, {1, -1}));
    CHECK(check_semi_entwining(e).passed());
    Vector want = zero_vector(2, Q);
    want[g] = Q.from_int(-1);
    CHECK(e.psi().apply(basis_vector(e.psi().domain(), g, Q)) == want);
  }
  SUBCASE("regular module gives g (x) hg") {
    const EntwiningData e = make_doi_koppinen(h, h.algebra(), delta, regular_module(h.algebra()));
    CHECK(check_semi_entwining(e).passed());
    for (std::size_t hb = 0; hb < 2; ++hb) {
      const Vector out = e.psi().apply(basis_vector(e.psi().domain(), hb * 2 + g, Q));
      CHECK(out == basis_vector(e.psi().codomain(), g * 2 + (hb + g) % 2, Q));
    }
  }
  SUBCASE("a module algebra upgrades it to a factorization") {
    // K[Z/2] acting on itself through the counit is a module algebra.
    LinearMap act(tensor(hs, hs), hs, Q);
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t x = 0; x < 2; ++x)
        act.at(b, b * 2 + x) = Q.one();
    const ModuleAction triv(hs, h.algebra(), act);
    const EntwiningData e = make_doi_koppinen(h, h.algebra(), delta, triv, h.algebra());
    CHECK(e.kind() == EntwiningKind::factorization);
    CHECK(check_algebra_factorization(e).passed());
    // The regular action is not a module-algebra structure.
    CHECK_THROWS_AS(make_doi_koppinen(h, h.algebra(), delta, regular_module(h.algebra()), h.algebra()),
                    PreconditionError);
  }
}

TEST_CASE("alternative Doi-Koppinen map needs a comodule coalgebra") {
  const Bialgebra h = kz2(Q);
  const ModuleAction sign = character(h, {1, -1});
  // K[Z/2] coacting on itself by its comultiplication fails colinearity of Delta.
  const ComoduleCoaction delta = regular_comodule(h.coalgebra());
  const Report cc = check_comodule_coalgebra(h.coalgebra(), delta, h);
  CHECK_FALSE(cc.passed());
  CHECK_FALSE(cc.find("comult-colinear")->passed);
  CHECK_THROWS_AS(make_alt_doi_koppinen(h, h.coalgebra(), delta, sign), PreconditionError);

  // Dual numbers graded by Z/2: 1* in degree 1, x* in degree g.
  const Coalgebra c = dualize_algebra(kx2(Q, 0));
  LinearMap rho(c.space(), tensor(c.space(), h.space()), Q);
  rho.at(0, 0) = Q.one();
  rho.at(3, 1) = Q.one();
  const ComoduleCoaction graded(c.space(), h.coalgebra(), rho, Side::right);
  CHECK(check_comodule_coalgebra(c, graded, h).passed());
  const EntwiningData e = make_alt_doi_koppinen(h, c, graded, sign);
  CHECK(check_cosemi_entwining(e).passed());
  const EntwiningData dual = dualize_cosemi(e);
  CHECK(check_semi_entwining(dual).passed());
}

TEST_CASE("induced module on A (x) B for the flip") {
  const Algebra a = kx2(Q, 0);
  const Algebra b = kx3(Q);
  const ModuleAction m = induced_AtensorB_module(make_twist(Carrier::of(b), Carrier::of(a), EntwiningKind::semi));
  CHECK(check_module(m).passed());
  // (a (x) b) a' = a a' (x) b.
  const LinearMap want =
      kron(a.mult(), b.identity()) * kron(a.identity(), twist(b.space(), a.space(), Q));
  CHECK(m.action() == want.reshaped(m.action().domain(), m.action().codomain()));
}

TEST_CASE("twisted product is an algebra exactly for factorizations") {
  SUBCASE("flip gives the tensor product algebra") {
    const Algebra a = kx2(Q, 0);
    const FactorizationProduct p = factorization_product(make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::factorization));
    CHECK(p.algebra_report.passed());
    CHECK(p.factorization_report.passed());
    const LinearMap tensor_mult = kron(a.mult(), a.mult()) * kron(a.identity(), twist(a.space(), a.space(), Q), a.identity());
    CHECK(p.product.mult() == tensor_mult.reshaped(p.product.mult().domain(), p.product.mult().codomain()));
  }
  SUBCASE("quadratic table") {
    const FactorizationProduct p = factorization_product(make_quadratic_factorization(kx2(Q, 1), Q.from_int(2)));
    CHECK(p.algebra_report.passed());
    CHECK(p.factorization_report.passed());
  }
  SUBCASE("gamma_2 on matrices fails both ways") {
    const FactorizationProduct p =
        factorization_product(make_gamma_q(m2(Q), Q.from_int(2)).with_kind(EntwiningKind::factorization));
    CHECK_FALSE(p.algebra_report.passed());
    CHECK_FALSE(p.factorization_report.passed());
  }
  SUBCASE("corrupted flips") {
    const Algebra a = kx2(Q, 1);
    const EntwiningData t = make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::factorization);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        const FactorizationProduct p = factorization_product(t.with_psi(bump(t.psi(), r, c)));
        CHECK(p.verdicts_agree());
      }
  }
  SUBCASE("random maps: agreement and the factorization-implies-semi subset") {
    std::mt19937 rng(22);
    int failures = 0;
    for (const auto &[bn, b] : all_algebras(Q))
      for (const auto &[an, a] : all_algebras(Q)) {
        if (a.dim() * b.dim() > 9)
          continue;
        const EntwiningData t = make_twist(Carrier::of(b), Carrier::of(a), EntwiningKind::factorization);
        for (int i = 0; i < 4; ++i) {
          const EntwiningData e = t.with_psi(i % 2 ? random_map(rng, t.psi().domain(), t.psi().codomain(), Q)
                                                   : bump(t.psi(), rng() % t.psi().rows(), rng() % t.psi().cols()));
          const FactorizationProduct p = factorization_product(e);
          CHECK(p.verdicts_agree());
          failures += !p.factorization_report.passed();
          if (p.factorization_report.passed())
            CHECK(check_semi_entwining(e).passed());
        }
      }
    CHECK(failures >= 3);
  }
}

TEST_CASE("twisted coproduct is a coalgebra exactly for cofactorizations") {
  const Coalgebra c = grouplike(Q, {"g0", "g1"});
  const CofactorizationCoproduct p =
      cofactorization_coproduct(make_twist(Carrier::of(c), Carrier::of(c), EntwiningKind::cofactorization));
  CHECK(p.coalgebra_report.passed());
  CHECK(p.cofactorization_report.passed());

  // Transposing the quadratic factorization gives a cofactorization of the dual coalgebra.
  const Algebra a = kx2(Q, 1);
  const Coalgebra d = dualize_algebra(a);
  const LinearMap t = make_quadratic_factorization(a, Q.from_int(2)).psi().transposed();
  const EntwiningData co(Carrier::of(d), Carrier::of(d), t.reshaped(tensor(d.space(), d.space()), tensor(d.space(), d.space())),
                         EntwiningKind::cofactorization);
  const CofactorizationCoproduct pq = cofactorization_coproduct(co);
  CHECK(pq.coalgebra_report.passed());
  CHECK(pq.cofactorization_report.passed());

  std::mt19937 rng(23);
  int failures = 0;
  const EntwiningData tw = make_twist(Carrier::of(d), Carrier::of(c), EntwiningKind::cofactorization);
  for (int i = 0; i < 12; ++i) {
    const EntwiningData e = tw.with_psi(i % 2 ? random_map(rng, tw.psi().domain(), tw.psi().codomain(), Q)
                                              : bump(tw.psi(), rng() % 4, rng() % 4));
    const CofactorizationCoproduct r = cofactorization_coproduct(e);
    CHECK(r.verdicts_agree());
    failures += !r.cofactorization_report.passed();
  }
  CHECK(failures >= 3);
}

TEST_CASE("dualizing cosemi-entwinings") {
  const Coalgebra c = grouplike(Q, {"g0", "g1"});
  SUBCASE("flip dualizes to the flip") {
    const Coalgebra d = dualize_algebra(kx2(Q, 1));
    const EntwiningData dual = dualize_cosemi(make_twist(Carrier::of(d), Carrier::of(c), EntwiningKind::cosemi));
    CHECK(check_semi_entwining(dual).passed());
    CHECK(dual.psi() == twist(d.space(), dual.right().space, Q));
  }
  SUBCASE("one-dimensional D over two points") {
    const EntwiningData dual =
        dualize_cosemi(make_twist(Carrier::of(trivial_bialgebra(Q)), Carrier::of(c), EntwiningKind::cosemi));
    CHECK(check_semi_entwining(dual).passed());
    CHECK(dual.psi() == twist(dual.left().space, dual.right().space, Q));
    CHECK(check_algebra(dual.right().require_algebra("right")).passed());
  }
  SUBCASE("a map that is not cosemi is rejected") {
    const EntwiningData t = make_twist(Carrier::of(c), Carrier::of(c), EntwiningKind::cosemi);
    CHECK_THROWS_AS(dualize_cosemi(t.with_psi(bump(t.psi(), 0, 1))), PreconditionError);
  }
}

TEST_CASE("B (+) A algebra and coactions") {
  SUBCASE("monoid bialgebra with the absorbing integral") {
    const Bialgebra h = kmon(Q);
    const EntwiningData e = make_twist(Carrier::of(ground(Q)), Carrier::of(h.algebra()), EntwiningKind::semi);
    const Biproduct b = biproduct_BplusA(e, h, Vector{Q.zero(), Q.one()});
    CHECK(b.bimodule.passed());
    CHECK(b.algebra_report.passed());
    CHECK(b.comodule_report.passed());
    REQUIRE(b.integral_comodule_algebra.has_value());
    CHECK(b.integral_comodule_algebra->passed());
    CHECK(b.algebra.dim() == 3);
    CHECK(b.passed());
  }
  SUBCASE("group bialgebra with gamma_1 and no integral") {
    const Bialgebra h = kz2(Q);
    const Biproduct b = biproduct_BplusA(make_gamma_q(h.algebra(), Q.one()), h);
    CHECK(b.bimodule.passed());
    CHECK(b.algebra_report.passed());
    CHECK(b.comodule_report.passed());
    CHECK_FALSE(b.integral_coaction.has_value());
  }
  SUBCASE("g is not an integral of K[Z/2]") {
    const Bialgebra h = kz2(Q);
    try {
      biproduct_BplusA(make_gamma_q(h.algebra(), Q.one()), h, Vector{Q.zero(), Q.one()});
      FAIL("accepted g");
    } catch (const PreconditionError &e) {
      CHECK(e.report().first_failure()->name.find("integral") != std::string::npos);
    }
  }
}

TEST_CASE("semi-entwined modules from the listed examples") {
  for (const auto &[name, a] : all_algebras(Q)) {
    CAPTURE(name);
    const ModuleAction m = regular_module(a);
    const LinearMap unit_comeasuring =
        kron(a.identity(), a.unit_map()).reshaped(a.space(), tensor(a.space(), a.space()));
    for (const long long q : {0, 1, 2}) {
      CHECK(check_entwined_variant(MeasuredModule::semi_module(m, a.space(), a.mult()), make_gamma_q(a, Q.from_int(q)))
                .passed());
      CHECK(check_entwined_variant(MeasuredModule::semi_comodule(m, a.space(), unit_comeasuring),
                                   make_eta_q(a, Q.from_int(q)))
                .passed());
    }
    CHECK(check_entwined_variant(MeasuredModule::semi_module(m, a.space(), a.mult()), make_eta_q(a, Q.one())).passed());
    CHECK(check_entwined_variant(MeasuredModule::semi_comodule(m, a.space(), unit_comeasuring), make_gamma_q(a, Q.one()))
              .passed());
  }
}

TEST_CASE("degenerate and corrupted measurings") {
  const Algebra a = kx2(Q, 1);
  const ModuleAction m = regular_module(a);
  // Both sides of m a_alpha <| v^alpha = (m <| v) a vanish for the zero measuring.
  const LinearMap zero(tensor(a.space(), a.space()), a.space(), Q);
  CHECK(check_entwined_variant(MeasuredModule::semi_module(m, a.space(), zero), make_gamma_q(a, Q.one())).passed());
  const Report r =
      check_entwined_variant(MeasuredModule::semi_module(m, a.space(), bump(a.mult(), 0, 0)), make_gamma_q(a, Q.one()));
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->witness.size() == 3);
  CHECK_THROWS_AS(check_entwined_variant(MeasuredModule::semi_module(m, a.space(), a.mult()),
                                         make_twist(Carrier::of(dualize_algebra(a)), Carrier::of(dualize_algebra(a)),
                                                    EntwiningKind::cosemi)),
                  StructureError);
}

TEST_CASE("A (x) B modules from semi-entwined modules and back") {
  for (const auto &[p, q] : std::vector<std::pair<long long, long long>>{{1, 2}, {0, 0}, {2, 4}}) {
    const Algebra a = kx2(Q, p);
    const LinearMap left_mult = a.mult() * twist(a.space(), a.space(), Q);
    CHECK(entwined_roundtrip(make_quadratic_factorization(a, Q.from_int(q)), regular_module(a), left_mult).passed());
  }
  for (const auto &[name, a] : all_algebras(Q)) {
    const LinearMap left_mult = a.mult() * twist(a.space(), a.space(), Q);
    const EntwiningData e = make_twist(Carrier::of(a.opposite()), Carrier::of(a), EntwiningKind::factorization);
    CHECK(entwined_roundtrip(e, regular_module(a), left_mult).passed());
  }
}

TEST_CASE("psi intertwines the induced module structures") {
  for (const auto &[name, a] : all_algebras(Q))
    for (const Scalar &q : qs()) {
      CHECK(check_intertwining(make_gamma_q(a, q)).passed());
      CHECK(check_intertwining(make_eta_q(a, q)).passed());
    }
  const Algebra a = kx2(Q, 1);
  const EntwiningData g = make_gamma_q(a, Q.one());
  const EntwiningData bad = g.with_psi(bump(g.psi(), 1, 1));
  CHECK(check_intertwining(bad).passed() == !first_semi_failure(a, 2, bad.psi()).has_value());
}

TEST_CASE("lifted modules recover psi") {
  std::mt19937 rng(24);
  for (const auto &[name, a] : all_algebras(Q)) {
    const EntwiningData e = make_gamma_q(a, Q.from_int(2));
    const ModuleAction lifted = lift_module(e, regular_module(a));
    CHECK(check_module(lifted).passed());
    const EntwiningData back = semi_from_lifted(lifted, carrier_of_module(regular_module(a)), a);
    CHECK(back.psi() == e.psi());
    // Left multiplication by a fixed element is right A-linear.
    const Vector c = basis_vector(a.space(), rng() % a.dim(), Q);
    const LinearMap lm = a.mult() * kron(LinearMap::point(a.space(), c), a.identity()).reshaped(a.space(), tensor(a.space(), a.space()));
    CHECK(check_lifted_morphism(e, regular_module(a), regular_module(a), lm).passed());
  }
}

} // TEST_SUITE
