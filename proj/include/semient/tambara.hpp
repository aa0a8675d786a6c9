#pragma once

#include <vector>

#include "semient/entwine.hpp"

namespace semient {

/// Action of the generators [a_i* (x) a_j] on a carrier space.
///
/// The base is an algebra A (Tambara side) or a coalgebra C (co-Tambara side);
/// dual bases are the coordinate bases. rho(i, j) is the matrix of
/// b |-> b [a_i* (x) a_j], and the action is bilinear in (a*, a).
class GeneratorAction {
public:
  GeneratorAction() = default;
  GeneratorAction(Carrier base, Carrier carrier, std::vector<LinearMap> rho);

  const Carrier &base() const { return base_; }
  const Carrier &carrier() const { return carrier_; }
  std::size_t rank() const { return base_.space.dim(); }
  const Field &field() const;
  const LinearMap &rho(std::size_t i, std::size_t j) const { return rho_.at(i * rank() + j); }
  const std::vector<LinearMap> &matrices() const { return rho_; }
  /// sum_{i,j} f_i v_j rho(i, j).
  LinearMap act(const Vector &functional, const Vector &element) const;

  GeneratorAction with_rho(std::size_t i, std::size_t j, const LinearMap &m) const;

  friend bool operator==(const GeneratorAction &a, const GeneratorAction &b);

private:
  Carrier base_;
  Carrier carrier_;
  std::vector<LinearMap> rho_;
};

/// rho(i, j)[b'][b] = psi[(i, b')][(b, j)] for any map psi, with no axiom check.
GeneratorAction slice_generators(const EntwiningData &e);
/// b [a* (x) a] = a*(a_alpha) b^alpha. Throws PreconditionError unless psi is a
/// semi-entwining.
GeneratorAction action_from_semi(const EntwiningData &e);
/// Unit and product relations of the Tambara ideal, one entry per generator
/// index tuple.
Report check_tambara_relations(const GeneratorAction &g);
/// psi(b (x) a_j) = sum_i a_i (x) b [a_i* (x) a_j]. Throws PreconditionError
/// when the relations fail.
EntwiningData semi_from_action(const GeneratorAction &g);
/// Both round trips, entrywise.
Report tambara_roundtrip(const EntwiningData &e);
/// (bb').h = (b.h_(1))(b'.h_(2)) and 1.h = eps(h) 1 on every generator.
Report check_module_algebra_refinement(const GeneratorAction &g);

/// d [c* (x) c] = c*(c^alpha) d_alpha for a cosemi-entwining. Throws
/// PreconditionError unless psi is a cosemi-entwining.
GeneratorAction cotambara_action(const EntwiningData &e);
/// Counit and convolution relations.
Report check_cotambara_relations(const GeneratorAction &g);
/// psi(d (x) c_j) = sum_i c_i (x) d [c_i* (x) c_j].
EntwiningData cosemi_from_action(const GeneratorAction &g);
Report cotambara_roundtrip(const EntwiningData &e);
/// Delta_D o rho_ij = sum_k (rho_ik (x) rho_kj) o Delta_D and eps_D o rho_ij = delta_ij eps_D.
Report check_module_coalgebra_refinement(const GeneratorAction &g);

/// rho^{dual}(i, j) of the dual semi-entwining equals the co-Tambara rho(j, i).
Report check_dual_consistency(const EntwiningData &cosemi);

} // namespace semient
