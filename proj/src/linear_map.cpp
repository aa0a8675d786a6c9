#include "semient/linear_map.hpp"

#include <utility>

namespace semient {
namespace {

std::string shape_text(const Space &s) {
  std::string out = "[";
  const auto dims = s.leaf_dims();
  for (std::size_t i = 0; i < dims.size(); ++i)
    out += (i ? "," : "") + std::to_string(dims[i]);
  return out + "]";
}

} // namespace

LinearMap::LinearMap(Space domain, Space codomain, Field field)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), field_(field),
      data_(domain_.dim() * codomain_.dim(), field_.zero()) {}

LinearMap LinearMap::from_rows(Space domain, Space codomain, const std::vector<Vector> &rows) {
  if (rows.size() != codomain.dim())
    throw ShapeError("expected " + std::to_string(codomain.dim()) + " rows, got " + std::to_string(rows.size()));
  if (rows.empty() || rows.front().empty())
    throw ShapeError("empty matrix");
  LinearMap out(std::move(domain), std::move(codomain), rows.front().front().field());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != out.cols())
      throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(out.cols()));
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if (!(rows[r][c].field() == out.field_))
        throw ShapeError("mixed fields in matrix");
      out.at(r, c) = rows[r][c];
    }
  }
  return out;
}

LinearMap LinearMap::from_columns(Space domain, Space codomain, const std::vector<Vector> &columns) {
  if (columns.size() != domain.dim())
    throw ShapeError("expected " + std::to_string(domain.dim()) + " columns, got " + std::to_string(columns.size()));
  if (columns.empty() || columns.front().empty())
    throw ShapeError("empty matrix");
  LinearMap out(std::move(domain), std::move(codomain), columns.front().front().field());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != out.rows())
      throw ShapeError("column " + std::to_string(c) + " has wrong length");
    for (std::size_t r = 0; r < out.rows(); ++r)
      out.at(r, c) = columns[c][r];
  }
  return out;
}

LinearMap LinearMap::identity(const Space &space, const Field &field) {
  LinearMap out(space, space, field);
  for (std::size_t i = 0; i < space.dim(); ++i)
    out.at(i, i) = field.one();
  return out;
}

LinearMap LinearMap::point(const Space &space, const Vector &v) {
  if (v.size() != space.dim() || v.empty())
    throw ShapeError("vector length does not match space dimension");
  LinearMap out(Space::ground(), space, v.front().field());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.at(i, 0) = v[i];
  return out;
}

LinearMap LinearMap::functional(const Space &space, const Vector &coefficients) {
  if (coefficients.size() != space.dim() || coefficients.empty())
    throw ShapeError("functional length does not match space dimension");
  LinearMap out(space, Space::ground(), coefficients.front().field());
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out.at(0, i) = coefficients[i];
  return out;
}

Vector LinearMap::apply(const Vector &v) const {
  if (v.size() != cols())
    throw ShapeError("vector length " + std::to_string(v.size()) + " does not match domain dimension " +
                     std::to_string(cols()));
  Vector out(rows(), field_.zero());
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero())
      continue;
    for (std::size_t r = 0; r < rows(); ++r)
      out[r].add_product(at(r, c), v[c]);
  }
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto &s : data_)
    if (!s.is_zero())
      return false;
  return true;
}

LinearMap LinearMap::reshaped(Space domain, Space codomain) const {
  if (domain.dim() != cols() || codomain.dim() != rows())
    throw ShapeError("reshape must preserve dimensions");
  LinearMap out = *this;
  out.domain_ = std::move(domain);
  out.codomain_ = std::move(codomain);
  return out;
}

LinearMap LinearMap::transposed() const {
  LinearMap out(dual(codomain_), dual(domain_), field_);
  for (std::size_t c = 0; c < cols(); ++c)
    for (std::size_t r = 0; r < rows(); ++r)
      out.at(c, r) = at(r, c);
  return out;
}

void LinearMap::require_same_shape(const LinearMap &other, const char *what) const {
  if (!same_shape(domain_, other.domain_) || !same_shape(codomain_, other.codomain_))
    throw ShapeError(std::string(what) + ": maps " + shape_text(domain_) + "->" + shape_text(codomain_) + " and " +
                     shape_text(other.domain_) + "->" + shape_text(other.codomain_) + " differ in shape");
}

LinearMap &LinearMap::operator+=(const LinearMap &rhs) {
  require_same_shape(rhs, "sum");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += rhs.data_[i];
  return *this;
}

LinearMap &LinearMap::operator-=(const LinearMap &rhs) {
  require_same_shape(rhs, "difference");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= rhs.data_[i];
  return *this;
}

LinearMap &LinearMap::operator*=(const Scalar &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

LinearMap operator*(const LinearMap &f, const LinearMap &g) {
  if (!same_shape(f.domain_, g.codomain_))
    throw ShapeError("composition: inner spaces " + shape_text(f.domain_) + " and " + shape_text(g.codomain_) +
                     " differ");
  if (!(f.field_ == g.field_))
    throw ShapeError("composition across fields");
  LinearMap out(g.domain_, f.codomain_, f.field_);
  const std::size_t inner = f.cols();
  // Sparse row lists for each column of f.
  std::vector<std::vector<std::size_t>> nz(inner);
  for (std::size_t l = 0; l < inner; ++l)
    for (std::size_t r = 0; r < f.rows(); ++r)
      if (!f.at(r, l).is_zero())
        nz[l].push_back(r);
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t l = 0; l < inner; ++l) {
      const Scalar &gl = g.at(l, j);
      if (gl.is_zero())
        continue;
      for (std::size_t r : nz[l])
        out.at(r, j).add_product(f.at(r, l), gl);
    }
  }
  return out;
}

bool operator==(const LinearMap &a, const LinearMap &b) {
  a.require_same_shape(b, "comparison");
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i]))
      return false;
  return true;
}

LinearMap compose(const LinearMap &f, const LinearMap &g) { return f * g; }

LinearMap kron(const LinearMap &f, const LinearMap &g) {
  if (!(f.field() == g.field()))
    throw ShapeError("kron across fields");
  LinearMap out(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()), f.field());
  const std::size_t gr = g.rows();
  const std::size_t gc = g.cols();
  for (std::size_t fc = 0; fc < f.cols(); ++fc) {
    for (std::size_t fr = 0; fr < f.rows(); ++fr) {
      const Scalar &a = f.at(fr, fc);
      if (a.is_zero())
        continue;
      for (std::size_t c = 0; c < gc; ++c)
        for (std::size_t r = 0; r < gr; ++r) {
          const Scalar &b = g.at(r, c);
          if (!b.is_zero())
            out.at(fr * gr + r, fc * gc + c) = a * b;
        }
    }
  }
  return out;
}

LinearMap kron(const LinearMap &f, const LinearMap &g, const LinearMap &h) { return kron(kron(f, g), h); }

LinearMap twist(const Space &v, const Space &w, const Field &field) {
  LinearMap out(tensor(v, w), tensor(w, v), field);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      out.at(j * v.dim() + i, i * w.dim() + j) = field.one();
  return out;
}

LinearMap embed13(const LinearMap &s, const Space &middle) {
  const Space &dom = s.domain();
  if (dom.factors().size() != 2 || !same_shape(dom, s.codomain()))
    throw ShapeError("embed13 needs an endomorphism of a two-factor tensor space");
  const Space &outer = dom.factor(0);
  const Space &inner = dom.factor(1);
  const Field &k = s.field();
  const LinearMap id_outer = LinearMap::identity(outer, k);
  const LinearMap before = kron(id_outer, twist(middle, inner, k));
  const LinearMap after = kron(id_outer, twist(inner, middle, k));
  return after * kron(s, LinearMap::identity(middle, k)) * before;
}

Scalar determinant(const LinearMap &f) {
  if (f.rows() != f.cols())
    throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = f.rows();
  std::vector<Vector> m(n, Vector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m[r][c] = f.at(r, c);
  Scalar det = f.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero())
      ++pivot;
    if (pivot == n)
      return f.field().zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Scalar inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero())
        continue;
      const Scalar factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

bool is_invertible(const LinearMap &f) { return !determinant(f).is_zero(); }

namespace {

bool is_ground(const Space &s) { return !s.is_tensor() && s.dim() == 1 && s.label(0) == "k"; }

Space squeeze(const Space &s) {
  if (!s.is_tensor())
    return s;
  std::vector<Space> kept;
  for (const auto &leaf : s.leaves())
    if (!is_ground(leaf))
      kept.push_back(leaf);
  if (kept.empty())
    return Space::ground();
  if (kept.size() == s.leaves().size())
    return s;
  Space out = kept.front();
  for (std::size_t i = 1; i < kept.size(); ++i)
    out = tensor(out, kept[i]);
  return out;
}

} // namespace

LinearMap squeeze_ground(const LinearMap &f) { return f.reshaped(squeeze(f.domain()), squeeze(f.codomain())); }

DirectSum direct_sum_maps(const Space &v, const Space &w, const Field &field, const std::string &left_tag,
                          const std::string &right_tag) {
  DirectSum out{direct_sum(v, w, left_tag, right_tag), {}, {}, {}, {}};
  out.in_left = LinearMap(v, out.sum, field);
  out.in_right = LinearMap(w, out.sum, field);
  out.out_left = LinearMap(out.sum, v, field);
  out.out_right = LinearMap(out.sum, w, field);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out.in_left.at(i, i) = field.one();
    out.out_left.at(i, i) = field.one();
  }
  for (std::size_t j = 0; j < w.dim(); ++j) {
    out.in_right.at(v.dim() + j, j) = field.one();
    out.out_right.at(j, v.dim() + j) = field.one();
  }
  return out;
}

Vector basis_vector(const Space &space, std::size_t i, const Field &field) {
  Vector v(space.dim(), field.zero());
  v.at(i) = field.one();
  return v;
}

Vector zero_vector(std::size_t dim, const Field &field) { return Vector(dim, field.zero()); }

} // namespace semient
