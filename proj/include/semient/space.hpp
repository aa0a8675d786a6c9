#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace semient {

/// Finite-dimensional space with a labelled basis.
///
/// A tensor product keeps its factors (possibly nested). The basis of V (x) W
/// is ordered row-major: e_i (x) f_j sits at index i * dim(W) + j. Every
/// embedding, serializer and report in the library depends on this order.
class Space {
public:
  Space() = default;
  /// Plain space. Labels must be non-empty and pairwise distinct.
  explicit Space(std::vector<std::string> labels);

  /// The one-dimensional ground space.
  static Space ground();

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(std::size_t i) const { return labels_.at(i); }
  /// Index of a basis label; throws std::out_of_range when absent.
  std::size_t index_of(const std::string &label) const;

  bool is_tensor() const { return !factors_.empty(); }
  const std::vector<Space> &factors() const { return factors_; }
  const Space &factor(std::size_t i) const { return factors_.at(i); }

  /// Non-tensor spaces obtained by fully flattening the factor tree.
  std::vector<Space> leaves() const;
  std::vector<std::size_t> leaf_dims() const;

  /// Leaf-wise basis indices of basis element `index`.
  std::vector<std::size_t> split_index(std::size_t index) const;
  std::size_t join_index(const std::vector<std::size_t> &leaf_indices) const;
  /// Leaf labels of basis element `index`, e.g. {"x", "1", "x"}.
  std::vector<std::string> leaf_labels(std::size_t index) const;

private:
  friend Space tensor(const Space &, const Space &);

  std::vector<std::string> labels_;
  std::vector<Space> factors_;
};

/// Composable shapes: same flattened sequence of leaf dimensions.
bool same_shape(const Space &a, const Space &b);

Space tensor(const Space &v, const Space &w);
Space tensor(const Space &u, const Space &v, const Space &w);

/// V (+) W with the basis of V first. Labels are kept when they do not
/// collide, otherwise prefixed with the given tags.
Space direct_sum(const Space &v, const Space &w, const std::string &left_tag = "L", const std::string &right_tag = "R");

/// Dual space with dual-basis labels ("x" -> "x*"); tensor structure is kept.
Space dual(const Space &v);

} // namespace semient
