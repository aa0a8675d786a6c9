#include <doctest.h>

#include <random>

#include "semient/yangbaxter.hpp"
#include "support.hpp"

using namespace semient;
using namespace fixtures;

namespace {
const Field Q = Field::rationals();

LinearMap id2(const Algebra &a) { return LinearMap::identity(tensor(a.space(), a.space()), Q); }
} // namespace

TEST_SUITE("yangbaxter") {

TEST_CASE("commutator of constant systems") {
  const Algebra a = kx2(Q, 1);
  const LinearMap i = id2(a);
  CHECK(yb_commutator(i, i, i) == LinearMap(tensor(a.space(), a.space(), a.space()), tensor(a.space(), a.space(), a.space()), Q));
  const LinearMap r = make_R_rs(a, Q.one(), Q.one());
  const LinearMap c = yb_commutator(r, r, r);
  CHECK(c == c * Q.zero());
  // Mixed shapes: R on V (x) V', S on V (x) V'', T on V' (x) V''.
  const Algebra b = kx3(Q);
  const LinearMap ab = LinearMap::identity(tensor(a.space(), b.space()), Q);
  const LinearMap bb = LinearMap::identity(tensor(b.space(), b.space()), Q);
  const LinearMap ab2 = LinearMap::identity(tensor(a.space(), b.space()), Q);
  CHECK(yb_commutator(ab, ab2, bb).domain().leaf_dims() == std::vector<std::size_t>{2, 3, 3});
}

TEST_CASE("R_rs matches its formula on K[x]/(x^2 - 1)") {
  const Algebra a = kx2(Q, 1);
  // x (x) x |-> s 1 (x) 1 + r 1 (x) 1 - s x (x) x with r = 2, s = 3.
  const LinearMap r = make_R_rs(a, Q.from_int(2), Q.from_int(3));
  CHECK(r.at(0, 3) == Q.from_int(5));
  CHECK(r.at(3, 3) == Q.from_int(-3));
  // 1 (x) x |-> s x (x) 1 + r 1 (x) x - s x (x) 1.
  CHECK(r.at(1, 1) == Q.from_int(2));
  CHECK(r.at(2, 1).is_zero());
}

TEST_CASE("braid relation and QYBE verdicts agree") {
  const Algebra a = kx2(Q, 1);
  const LinearMap t = twist(a.space(), a.space(), Q);
  CHECK(check_yb_operator(t).passed());
  CHECK(check_yb_operator(id2(a)).passed());
  CHECK(check_qybe(t).passed());
  CHECK(check_yb_operator(make_psi_A(a)).passed());

  // Not invertible: braid holds but invertibility does not.
  const Report zero = check_yb_operator(LinearMap(tensor(a.space(), a.space()), tensor(a.space(), a.space()), Q));
  CHECK(zero.find("braid")->passed);
  CHECK_FALSE(zero.find("invertible")->passed);

  std::mt19937 rng(31);
  int braids = 0;
  for (int i = 0; i < 50; ++i) {
    const LinearMap phi = random_map(rng, tensor(a.space(), a.space()), tensor(a.space(), a.space()), Q);
    const Report q = check_qybe(phi);
    REQUIRE(q.find("braid-agreement") != nullptr);
    CHECK(q.find("braid-agreement")->passed);
    braids += check_yb_operator(phi).find("braid")->passed;
  }
  CHECK(braids < 50);
}

TEST_CASE("psi_A is an involutive braiding on commutative algebras") {
  for (const auto &[name, a] : all_algebras(Q)) {
    CAPTURE(name);
    const LinearMap psi = make_psi_A(a);
    CHECK(check_braided_algebra(a, psi).passed());
    if (a.is_commutative()) {
      CHECK(psi * psi == id2(a));
      CHECK(check_r_commutative(a, psi).passed());
    }
  }
  // x (x) x on K[x]/(x^2 - 2): 1 (x) 2 + 2 (x) 1 - x (x) x.
  const LinearMap p = make_psi_A(kx2(Q, 2));
  CHECK(p.at(0, 3) == Q.from_int(4));
  CHECK(p.at(3, 3) == Q.from_int(-1));
}

TEST_CASE("the flip on matrices is braided but not r-commutative") {
  const Algebra a = m2(Q);
  const LinearMap t = twist(a.space(), a.space(), Q);
  CHECK(check_braided_algebra(a, t).passed());
  CHECK_FALSE(check_r_commutative(a, t).passed());
}

TEST_CASE("x |-> 1 is a braided morphism onto the ground field") {
  const Algebra a = kx2(Q, 1);
  const Algebra k = ground(Q);
  const LinearMap f = LinearMap::from_rows(a.space(), k.space(), {{Q.one(), Q.one()}});
  CHECK(check_braided_morphism(f, a, make_psi_A(a), k, make_psi_A(k)).passed());
  const LinearMap g = LinearMap::from_rows(a.space(), k.space(), {{Q.one(), Q.from_int(2)}});
  CHECK_FALSE(check_braided_morphism(g, a, make_psi_A(a), k, make_psi_A(k)).passed());
}

TEST_CASE("derivations give braided morphisms into the square-zero extension") {
  const Algebra a = kx3(Q);
  CHECK(check_algebra(square_zero_extension(a)).passed());
  CHECK(derivation_morphism_check(a, LinearMap(a.space(), a.space(), Q)).passed());
  LinearMap d(a.space(), a.space(), Q);
  d.at(1, 1) = Q.one();
  d.at(2, 2) = Q.from_int(2);
  CHECK(derivation_morphism_check(a, d).passed());
  const Algebra b = kx2(Q, 1);
  LinearMap bad(b.space(), b.space(), Q);
  bad.at(0, 1) = Q.one();
  CHECK_THROWS_AS(derivation_morphism_check(b, bad), PreconditionError);
}

TEST_CASE("type II systems from the lambda maps") {
  for (const auto &[name, a] : all_algebras(Q)) {
    if (!a.is_commutative()) {
      CHECK_THROWS_AS(make_type2_np2(a, Q.one(), Q.one()), StructureError);
      continue;
    }
    for (const auto &[l1, l2] : std::vector<std::pair<Scalar, Scalar>>{
             {Q.one(), Q.one()}, {Q.zero(), Q.one()}, {Q.from_int(2), Q.from_int(-1)}, {Q.from_fraction(1, 2), Q.from_int(3)}}) {
      const TypeIISystem s = make_type2_np2(a, l1, l2);
      CHECK(check_type2(s).passed());
      CHECK(check_type1_from_type2(s).passed());
    }
  }
  // plus conjugates by the flip.
  const Algebra a = kx2(Q, 0);
  const LinearMap t = twist(a.space(), a.space(), Q);
  const LinearMap m = make_np2_map(a, Q.from_int(2));
  CHECK(plus(m) == t * m * t);
}

TEST_CASE("flip systems are type II") {
  const Algebra a = kx2(Q, 1);
  const LinearMap t = twist(a.space(), a.space(), Q);
  CHECK(check_type2(TypeIISystem{t, t, t, t}).passed());
  const LinearMap i = id2(a);
  CHECK(check_type2(TypeIISystem{i, i, i, i}).passed());
}

TEST_CASE("type II from a semi-entwining and its flip") {
  const Algebra a = kx2(Q, 1);
  const EntwiningData e = make_gamma_q(a, Q.one());
  const LinearMap t = twist(a.space(), a.space(), Q);
  const LinearMap flipped = t * e.psi() * t;
  REQUIRE(check_semi_entwining(e.with_psi(flipped)).passed());
  CHECK(check_type2(make_type2_from_semi(a, e.psi(), flipped, Q.one(), Q.one(), Q.one(), Q.one())).passed());
}

TEST_CASE("semi systems correspond to semi-entwinings") {
  const Algebra a = kx2(Q, 1);
  const EntwiningData g = make_gamma_q(a, Q.one());
  for (const auto &[r, s] : std::vector<std::pair<long long, long long>>{{1, 1}, {1, 0}, {2, -1}, {0, 1}}) {
    const Agreement ok = semi_system_equivalence(a, g.left(), x_from_psi(g), Q.from_int(r), Q.from_int(s));
    CHECK(ok.agree());
    CHECK(ok.second.passed());
  }
  // Corrupting the column of x (x) x keeps X(1 (x) b) = 1 (x) b; pick an entry that breaks psi.
  EntwiningData bad = g;
  for (std::size_t r = 0; r < 4 && check_semi_entwining(bad).passed(); ++r)
    bad = g.with_psi(bump(g.psi(), r, 3));
  REQUIRE_FALSE(check_semi_entwining(bad).passed());
  const Agreement ag = semi_system_equivalence(a, bad.left(), x_from_psi(bad), Q.one(), Q.one());
  CHECK(ag.agree());
  CHECK_FALSE(ag.second.passed());
  CHECK_FALSE(ag.first.passed());
  // Moving the unit is outside the correspondence.
  const EntwiningData moved = g.with_psi(bump(g.psi(), 3, 2));
  CHECK_THROWS_AS(semi_system_equivalence(a, moved.left(), x_from_psi(moved), Q.one(), Q.one()), PreconditionError);
}

TEST_CASE("WXZ systems correspond to factorizations") {
  const Algebra a = kx2(Q, 1);
  const EntwiningData e = make_quadratic_factorization(a, Q.from_int(2));
  const Agreement ag = wxz_factorization_equivalence(a, e.left().require_algebra("left"), x_from_psi(e), Q.one(), Q.one(),
                                                     Q.one(), Q.one());
  CHECK(ag.agree());
  CHECK(ag.second.passed());

  const EntwiningData t = make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::factorization);
  CHECK(wxz_factorization_equivalence(a, a, x_from_psi(t), Q.from_int(2), Q.from_int(-1), Q.one(), Q.zero()).agree());

  // gamma_1 on K[x]/(x^2 - 1) is a factorization with unit-fixing X.
  const EntwiningData g = make_gamma_q(a, Q.one()).with_kind(EntwiningKind::factorization);
  const Agreement ga = wxz_factorization_equivalence(a, a, x_from_psi(g), Q.one(), Q.one(), Q.one(), Q.one());
  CHECK(ga.agree());
  CHECK(ga.second.passed());

  const Algebra m = m2(Q);
  const EntwiningData g2 = make_gamma_q(m, Q.from_int(2)).with_kind(EntwiningKind::factorization);
  CHECK_THROWS_AS(wxz_factorization_equivalence(m, m, x_from_psi(g2), Q.one(), Q.one(), Q.one(), Q.one()),
                  PreconditionError);
  CHECK(wxz_completion(x_from_psi(t)) == id2(a));
}

TEST_CASE("flipped semi-entwinings and factorizations over the opposite") {
  for (const auto &[name, a] : all_algebras(Q)) {
    const LinearMap t = twist(a.space(), a.space(), Q);
    const Agreement ag = opposite_factorization_equivalence(a, t);
    CHECK(ag.agree());
    CHECK(ag.second.passed());
  }
  const Algebra a = kx2(Q, 1);
  CHECK(opposite_factorization_equivalence(a, make_quadratic_factorization(a, Q.from_int(2)).psi()).second.passed());
  const Agreement m = opposite_factorization_equivalence(m2(Q), make_gamma_q(m2(Q), Q.one()).psi());
  CHECK(m.agree());
  CHECK_THROWS_AS(opposite_factorization_equivalence(a, bump(twist(a.space(), a.space(), Q), 0, 3)), PreconditionError);
}

TEST_CASE("measured commutator vanishes on semi-entwined modules") {
  const Algebra a = kx2(Q, 1);
  const MeasuredModule mm = MeasuredModule::semi_module(regular_module(a), a.space(), a.mult());
  const Vector one = basis_vector(a.space(), 0, Q);
  const Vector x = basis_vector(a.space(), 1, Q);
  CHECK(measured_commutator_check(make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::semi), mm, one).passed());
  CHECK(measured_commutator_check(make_gamma_q(a, Q.one()), mm, x).passed());
  CHECK(measured_commutator_check(make_gamma_q(a, Q.from_int(2)), mm, {Q.one(), Q.one()}).passed());
  CHECK_THROWS_AS(measured_commutator_check(make_gamma_q(a, Q.one()), mm, zero_vector(2, Q)), PreconditionError);
}

} // TEST_SUITE
