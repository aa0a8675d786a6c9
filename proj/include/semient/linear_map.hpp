#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semient/scalar.hpp"
#include "semient/space.hpp"

namespace semient {

/// Raised when maps or spaces do not fit together.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

/// Dense matrix of a linear map between labelled spaces.
///
/// Column j is the image of the j-th domain basis vector. Storage is
/// column-major so that columns are contiguous.
class LinearMap {
public:
  LinearMap() = default;
  /// Zero map.
  LinearMap(Space domain, Space codomain, Field field);
  /// rows.size() == codomain.dim(), each row of length domain.dim().
  static LinearMap from_rows(Space domain, Space codomain, const std::vector<Vector> &rows);
  static LinearMap from_columns(Space domain, Space codomain, const std::vector<Vector> &columns);
  static LinearMap identity(const Space &space, const Field &field);
  /// The map k -> V sending 1 to v.
  static LinearMap point(const Space &space, const Vector &v);
  /// The functional V -> k with the given coefficients.
  static LinearMap functional(const Space &space, const Vector &coefficients);

  const Space &domain() const { return domain_; }
  const Space &codomain() const { return codomain_; }
  const Field &field() const { return field_; }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }

  const Scalar &at(std::size_t row, std::size_t col) const { return data_[col * rows() + row]; }
  Scalar &at(std::size_t row, std::size_t col) { return data_[col * rows() + row]; }
  std::span<const Scalar> column(std::size_t col) const { return {data_.data() + col * rows(), rows()}; }

  Vector apply(const Vector &v) const;
  bool is_zero() const;

  /// Same matrix on different spaces of equal dimension (e.g. k (x) V ~ V).
  LinearMap reshaped(Space domain, Space codomain) const;
  /// Transpose as a map between dual spaces.
  LinearMap transposed() const;

  LinearMap &operator+=(const LinearMap &rhs);
  LinearMap &operator-=(const LinearMap &rhs);
  LinearMap &operator*=(const Scalar &s);

  friend LinearMap operator+(LinearMap a, const LinearMap &b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap &b) { return a -= b; }
  friend LinearMap operator*(LinearMap a, const Scalar &s) { return a *= s; }
  friend LinearMap operator*(const Scalar &s, LinearMap a) { return a *= s; }
  /// Composition f * g = f o g.
  friend LinearMap operator*(const LinearMap &f, const LinearMap &g);

  /// Entrywise equality; shapes must agree.
  friend bool operator==(const LinearMap &a, const LinearMap &b);

private:
  void require_same_shape(const LinearMap &other, const char *what) const;

  Space domain_;
  Space codomain_;
  Field field_;
  std::vector<Scalar> data_;
};

LinearMap compose(const LinearMap &f, const LinearMap &g);

/// f (x) g under the row-major basis order.
LinearMap kron(const LinearMap &f, const LinearMap &g);
LinearMap kron(const LinearMap &f, const LinearMap &g, const LinearMap &h);

/// tau_{V,W}: v (x) w -> w (x) v.
LinearMap twist(const Space &v, const Space &w, const Field &field);

/// S_13 on V (x) V' (x) V'' for S acting on V (x) V''.
LinearMap embed13(const LinearMap &s, const Space &middle);

/// Exact determinant by Gaussian elimination over the field.
Scalar determinant(const LinearMap &f);
bool is_invertible(const LinearMap &f);

/// Drops ground-space leaves (k (x) V -> V) from domain and codomain.
LinearMap squeeze_ground(const LinearMap &f);

/// Injections and projections of V (+) W.
struct DirectSum {
  Space sum;
  LinearMap in_left, in_right, out_left, out_right;
};
DirectSum direct_sum_maps(const Space &v, const Space &w, const Field &field, const std::string &left_tag = "L",
                          const std::string &right_tag = "R");

/// Basis vector e_i of a space.
Vector basis_vector(const Space &space, std::size_t i, const Field &field);
Vector zero_vector(std::size_t dim, const Field &field);

} // namespace semient
