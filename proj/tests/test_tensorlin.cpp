#include <doctest.h>

#include <random>

#include "semient/yangbaxter.hpp"
#include "support.hpp"

using namespace semient;
using fixtures::random_map;

namespace {

const Field Q = Field::rationals();

Space plain(std::size_t n, const std::string &prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(prefix + std::to_string(i));
  return Space(labels);
}

std::size_t index_of_tuple(const Space &s, std::vector<std::size_t> t) { return s.join_index(t); }

} // namespace

TEST_SUITE("tensorlin") {

TEST_CASE("scalars parse exactly and reject malformed text") {
  CHECK(Q.parse_scalar("-3/2") == Q.from_fraction(-3, 2));
  CHECK(Q.parse_scalar("6/4").to_string() == "3/2");
  CHECK(Q.parse_scalar("0/5").is_zero());
  CHECK_THROWS_AS(Q.parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Q.parse_scalar("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Q.parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(Q.parse_scalar("2/-"), std::invalid_argument);

  const Field f7 = Field::parse("fp:7");
  CHECK(f7.parse_scalar("1/2") == f7.from_int(4));
  CHECK(f7.parse_scalar("-1") == f7.from_int(6));
  CHECK(f7.parse_scalar("7").is_zero());
  CHECK_THROWS_AS(f7.parse_scalar("1/7"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("fp:8"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("r"), std::invalid_argument);
  CHECK(Field::parse("q") == Q);
}

TEST_CASE("kron of identities is the identity") {
  const Space v = plain(2, "v");
  const Space w = plain(3, "w");
  CHECK(kron(LinearMap::identity(v, Q), LinearMap::identity(w, Q)) == LinearMap::identity(tensor(v, w), Q));
  const Space one({"e"});
  CHECK(kron(LinearMap::identity(one, Q), LinearMap::identity(one, Q)) ==
        LinearMap::identity(tensor(one, one), Q));
}

TEST_CASE("adjacent flips compose to a cyclic shift") {
  // (tau (x) id)(id (x) tau): e0 (x) e1 (x) e2 -> e0 (x) e2 (x) e1 -> e2 (x) e0 (x) e1... traced by hand.
  const Space v = plain(3, "e");
  const LinearMap t = twist(v, v, Q);
  const LinearMap id = LinearMap::identity(v, Q);
  const LinearMap f = kron(t, id) * kron(id, t);
  const Space vvv = tensor(v, v, v);
  const Vector in = basis_vector(vvv, index_of_tuple(vvv, {0, 1, 2}), Q);
  // id (x) tau: e0 e1 e2 -> e0 e2 e1; tau (x) id: -> e2 e0 e1.
  CHECK(f.apply(in) == basis_vector(vvv, index_of_tuple(vvv, {2, 0, 1}), Q));
  // The reverse order sends it to e1 e2 e0.
  const LinearMap g = kron(id, t) * kron(t, id);
  CHECK(g.apply(in) == basis_vector(vvv, index_of_tuple(vvv, {1, 2, 0}), Q));
}

TEST_CASE("embed13 acts on the outer legs") {
  const Space v = plain(2, "e");
  const Space m1({"f"});
  const Space m2 = plain(2, "f");
  CHECK(embed13(LinearMap::identity(tensor(v, v), Q), m2) == LinearMap::identity(tensor(v, m2, v), Q));

  const LinearMap s = twist(v, v, Q);
  for (const Space &mid : {m1, m2}) {
    const LinearMap e = embed13(s, mid);
    const Space dom = tensor(v, mid, v);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < mid.dim(); ++j)
        for (std::size_t k = 0; k < 2; ++k)
          CHECK(e.apply(basis_vector(dom, dom.join_index({i, j, k}), Q)) ==
                basis_vector(dom, dom.join_index({k, j, i}), Q));
  }
  // Only endomorphisms of a two-factor space can be spread over three legs.
  const Space w = plain(3, "g");
  CHECK_THROWS(embed13(twist(v, w, Q), m2));
  CHECK_THROWS(embed13(LinearMap::identity(v, Q), m2));
}

TEST_CASE("invertibility by exact determinant") {
  const Space v = plain(3, "e");
  CHECK(is_invertible(LinearMap::identity(v, Q)));
  CHECK_FALSE(is_invertible(LinearMap(v, v, Q)));
  // Quadratic table with p = 1, q = 2: a transposition block and [[1,2],[0,-1]], det 1.
  const Algebra a = fixtures::kx2(Q, 1);
  const LinearMap psi = make_quadratic_factorization(a, Q.from_int(2)).psi();
  CHECK(determinant(psi) == Q.one());
  CHECK(is_invertible(psi));
  CHECK(determinant(LinearMap::from_rows(plain(2, "a"), plain(2, "a"),
                                         {{Q.from_int(2), Q.from_int(3)}, {Q.from_int(4), Q.from_int(5)}})) ==
        Q.from_int(-2));
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Space a = plain(1 + rng() % 3, "a"), b = plain(1 + rng() % 3, "b"), c = plain(1 + rng() % 3, "c"),
                d = plain(1 + rng() % 3, "d");
    const LinearMap h = random_map(rng, a, b, Q), g = random_map(rng, b, c, Q), f = random_map(rng, c, d, Q);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("kron is bilinear and interchanges with composition") {
  std::mt19937 rng(12);
  for (int t = 0; t < 30; ++t) {
    const Space a = plain(1 + rng() % 3, "a"), b = plain(1 + rng() % 3, "b"), c = plain(1 + rng() % 3, "c");
    const Space x = plain(1 + rng() % 3, "x"), y = plain(1 + rng() % 3, "y"), z = plain(1 + rng() % 3, "z");
    const LinearMap f2 = random_map(rng, a, b, Q), f1 = random_map(rng, b, c, Q);
    const LinearMap g2 = random_map(rng, x, y, Q), g1 = random_map(rng, y, z, Q);
    CHECK(kron(f1 * f2, g1 * g2) == kron(f1, g1) * kron(f2, g2));

    const LinearMap f3 = random_map(rng, b, c, Q);
    const Scalar s = Q.from_int(static_cast<long long>(rng() % 5) - 2);
    CHECK(kron(f1 + f3, g1) == kron(f1, g1) + kron(f3, g1));
    CHECK(kron(f1 * s, g1) == kron(f1, g1) * s);
    CHECK(kron(f1, g1 * s) == kron(f1, g1) * s);
  }
}

TEST_CASE("the flip is natural") {
  std::mt19937 rng(13);
  for (int t = 0; t < 30; ++t) {
    const Space v = plain(1 + rng() % 3, "v"), v2 = plain(1 + rng() % 3, "p");
    const Space w = plain(1 + rng() % 3, "w"), w2 = plain(1 + rng() % 3, "q");
    const LinearMap f = random_map(rng, v, v2, Q), g = random_map(rng, w, w2, Q);
    CHECK(kron(g, f) * twist(v, w, Q) == twist(v2, w2, Q) * kron(f, g));
  }
}

TEST_CASE("flattening and unflattening triple indices round trip") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b)
      for (std::size_t c = 1; c <= 4; ++c) {
        const Space s = tensor(plain(a, "a"), plain(b, "b"), plain(c, "c"));
        for (std::size_t i = 0; i < a; ++i)
          for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < c; ++k) {
              const std::size_t flat = s.join_index({i, j, k});
              CHECK(flat == (i * b + j) * c + k);
              CHECK(s.split_index(flat) == std::vector<std::size_t>{i, j, k});
            }
      }
}

TEST_CASE("shape mismatches are rejected") {
  const Space v = plain(2, "v");
  const Space w = plain(3, "w");
  const LinearMap f(v, w, Q);
  CHECK_THROWS_AS(f * f, ShapeError);
  CHECK_THROWS_AS((void)(f == LinearMap(w, v, Q)), ShapeError);
  CHECK_THROWS_AS(LinearMap::from_rows(v, w, {{Q.one(), Q.one()}}), ShapeError);
}

TEST_CASE("mixing fields is an error") {
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS(Q.one() + f7.one(), std::domain_error);
}

} // TEST_SUITE
