#include "semient/space.hpp"

#include <set>
#include <stdexcept>

namespace semient {

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty())
    throw std::invalid_argument("a space needs at least one basis element");
  std::set<std::string> seen;
  for (const auto &l : labels_) {
    if (l.empty())
      throw std::invalid_argument("empty basis label");
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate basis label '" + l + "'");
  }
}

Space Space::ground() { return Space({"k"}); }

std::size_t Space::index_of(const std::string &label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  throw std::out_of_range("no basis element '" + label + "'");
}

std::vector<Space> Space::leaves() const {
  if (!is_tensor())
    return {*this};
  std::vector<Space> out;
  for (const auto &f : factors_) {
    auto sub = f.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::size_t> Space::leaf_dims() const {
  std::vector<std::size_t> dims;
  for (const auto &leaf : leaves())
    dims.push_back(leaf.dim());
  return dims;
}

std::vector<std::size_t> Space::split_index(std::size_t index) const {
  if (index >= dim())
    throw std::out_of_range("basis index out of range");
  const auto dims = leaf_dims();
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

std::size_t Space::join_index(const std::vector<std::size_t> &leaf_indices) const {
  const auto dims = leaf_dims();
  if (leaf_indices.size() != dims.size())
    throw std::invalid_argument("wrong number of leaf indices");
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (leaf_indices[k] >= dims[k])
      throw std::out_of_range("leaf index out of range");
    index = index * dims[k] + leaf_indices[k];
  }
  return index;
}

std::vector<std::string> Space::leaf_labels(std::size_t index) const {
  const auto parts = split_index(index);
  const auto ls = leaves();
  std::vector<std::string> out;
  for (std::size_t k = 0; k < parts.size(); ++k)
    out.push_back(ls[k].label(parts[k]));
  return out;
}

bool same_shape(const Space &a, const Space &b) { return a.dim() == b.dim() && a.leaf_dims() == b.leaf_dims(); }

Space tensor(const Space &v, const Space &w) {
  Space out;
  out.labels_.reserve(v.dim() * w.dim());
  for (const auto &a : v.labels())
    for (const auto &b : w.labels())
      out.labels_.push_back(a + "⊗" + b);
  out.factors_ = {v, w};
  return out;
}

Space tensor(const Space &u, const Space &v, const Space &w) { return tensor(tensor(u, v), w); }

Space direct_sum(const Space &v, const Space &w, const std::string &left_tag, const std::string &right_tag) {
  std::set<std::string> left(v.labels().begin(), v.labels().end());
  bool collide = false;
  for (const auto &l : w.labels())
    collide = collide || left.count(l) > 0;
  std::vector<std::string> labels;
  for (const auto &l : v.labels())
    labels.push_back(collide ? left_tag + ":" + l : l);
  for (const auto &l : w.labels())
    labels.push_back(collide ? right_tag + ":" + l : l);
  return Space(std::move(labels));
}

Space dual(const Space &v) {
  if (v.is_tensor()) {
    Space out = dual(v.factor(0));
    for (std::size_t k = 1; k < v.factors().size(); ++k)
      out = tensor(out, dual(v.factor(k)));
    return out;
  }
  std::vector<std::string> labels;
  for (const auto &l : v.labels())
    labels.push_back(l + "*");
  return Space(std::move(labels));
}

} // namespace semient
