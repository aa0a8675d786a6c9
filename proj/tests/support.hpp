#pragma once

// Hand-built structures used as independent oracles for the registry files.

#include <random>
#include <string>
#include <vector>

#include "semient/entwine.hpp"

namespace fixtures {

using namespace semient;

inline Scalar sc(const Field &k, long long n) { return k.from_int(n); }
inline Scalar frac(const Field &k, long long n, long long d) { return k.from_fraction(n, d); }

/// Algebra from a product table: table(i, j) is the coordinate vector of e_i e_j.
template <class Table>
Algebra table_algebra(const Field &k, std::vector<std::string> labels, Table table, std::size_t unit_index = 0) {
  const Space s(std::move(labels));
  const std::size_t n = s.dim();
  LinearMap m(tensor(s, s), s, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::vector<long long> v = table(i, j);
      for (std::size_t r = 0; r < n; ++r)
        m.at(r, i * n + j) = k.from_int(v[r]);
    }
  return Algebra(s, m, basis_vector(s, unit_index, k));
}

inline Algebra ground(const Field &k) {
  return table_algebra(k, {"1"}, [](std::size_t, std::size_t) { return std::vector<long long>{1}; });
}

/// K[x]/(x^2 - p), basis {1, x}.
inline Algebra kx2(const Field &k, long long p) {
  return table_algebra(k, {"1", "x"}, [p](std::size_t i, std::size_t j) {
    if (i + j < 2)
      return std::vector<long long>{i + j == 0, i + j == 1};
    return std::vector<long long>{p, 0};
  });
}

/// K[x]/(x^3), basis {1, x, x2}.
inline Algebra kx3(const Field &k) {
  return table_algebra(k, {"1", "x", "x2"}, [](std::size_t i, std::size_t j) {
    std::vector<long long> v(3, 0);
    if (i + j < 3)
      v[i + j] = 1;
    return v;
  });
}

/// 2x2 matrices, basis e11, e12, e21, e22; unit e11 + e22.
inline Algebra m2(const Field &k) {
  const Space s({"e11", "e12", "e21", "e22"});
  LinearMap m(tensor(s, s), s, k);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t n = 0; n < 2; ++n)
          if (j == l)
            m.at(i * 2 + n, (i * 2 + j) * 4 + l * 2 + n) = k.one();
  return Algebra(s, m, {k.one(), k.zero(), k.zero(), k.one()});
}

/// Coalgebra where every basis element is group-like.
inline Coalgebra grouplike(const Field &k, std::vector<std::string> labels) {
  const Space s(std::move(labels));
  const std::size_t n = s.dim();
  LinearMap d(s, tensor(s, s), k);
  for (std::size_t i = 0; i < n; ++i)
    d.at(i * n + i, i) = k.one();
  return Coalgebra(s, d, Vector(n, k.one()));
}

/// Group bialgebra K[Z/2], basis {1, g}.
inline Bialgebra kz2(const Field &k) {
  Algebra a = table_algebra(k, {"1", "g"}, [](std::size_t i, std::size_t j) {
    return std::vector<long long>{(i + j) % 2 == 0, (i + j) % 2 == 1};
  });
  return Bialgebra(a, grouplike(k, {"1", "g"}));
}

/// Monoid bialgebra K[{1, z}] with z absorbing.
inline Bialgebra kmon(const Field &k) {
  Algebra a = table_algebra(k, {"1", "z"}, [](std::size_t i, std::size_t j) {
    return std::vector<long long>{i + j == 0, i + j > 0};
  });
  return Bialgebra(a, grouplike(k, {"1", "z"}));
}

inline Bialgebra trivial_bialgebra(const Field &k) { return Bialgebra(ground(k), grouplike(k, {"1"})); }

/// One-dimensional right H-module where every basis group element acts by `signs[i]`.
inline ModuleAction character(const Bialgebra &h, const std::vector<long long> &signs) {
  const Field &k = h.field();
  const Space s({"v"});
  LinearMap act(tensor(s, h.space()), s, k);
  for (std::size_t i = 0; i < signs.size(); ++i)
    act.at(0, i) = k.from_int(signs[i]);
  return ModuleAction(s, h.algebra(), act);
}

/// Every registry algebra.
inline std::vector<std::pair<std::string, Algebra>> all_algebras(const Field &k) {
  return {{"K", ground(k)},         {"Kx2-0", kx2(k, 0)},           {"Kx2-1", kx2(k, 1)},
          {"Kx2-2", kx2(k, 2)},     {"Kx3", kx3(k)},                {"M2", m2(k)},
          {"KZ2", kz2(k).algebra()}, {"Kmon", kmon(k).algebra()}};
}

/// Flips one entry of a map by adding 1 there.
inline LinearMap bump(LinearMap f, std::size_t row, std::size_t col) {
  f.at(row, col) += f.field().one();
  return f;
}

/// Matrix with entries drawn uniformly from {-1, 0, 1}.
inline LinearMap random_map(std::mt19937 &rng, const Space &dom, const Space &cod, const Field &k) {
  LinearMap f(dom, cod, k);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      f.at(r, c) = k.from_int(static_cast<long long>(rng() % 3) - 1);
  return f;
}

} // namespace fixtures
