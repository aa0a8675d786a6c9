#pragma once

#include "semient/linear_map.hpp"
#include "semient/report.hpp"

namespace semient {

/// Missing or mismatched algebraic structure (e.g. a check that needs a
/// coalgebra on a side that only carries a space).
class StructureError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Unital algebra given by structure constants: mult is A (x) A -> A and the
/// unit is a vector of A.
class Algebra {
public:
  Algebra() = default;
  Algebra(Space space, const LinearMap &mult, Vector unit);

  const Space &space() const { return space_; }
  const Field &field() const { return mult_.field(); }
  std::size_t dim() const { return space_.dim(); }
  const LinearMap &mult() const { return mult_; }
  const Vector &unit() const { return unit_; }
  /// k -> A, 1 |-> 1_A.
  LinearMap unit_map() const { return LinearMap::point(space_, unit_); }
  LinearMap identity() const { return LinearMap::identity(space_, field()); }

  Vector multiply(const Vector &a, const Vector &b) const;
  /// Same space, multiplication a . b := b a.
  Algebra opposite() const;
  bool is_commutative() const;

private:
  Space space_;
  LinearMap mult_;
  Vector unit_;
};

/// Counital coalgebra: comult is C -> C (x) C, counit a covector on C.
class Coalgebra {
public:
  Coalgebra() = default;
  Coalgebra(Space space, const LinearMap &comult, Vector counit);

  const Space &space() const { return space_; }
  const Field &field() const { return comult_.field(); }
  std::size_t dim() const { return space_.dim(); }
  const LinearMap &comult() const { return comult_; }
  const Vector &counit() const { return counit_; }
  /// C -> k.
  LinearMap counit_map() const { return LinearMap::functional(space_, counit_); }
  LinearMap identity() const { return LinearMap::identity(space_, field()); }

private:
  Space space_;
  LinearMap comult_;
  Vector counit_;
};

class Bialgebra {
public:
  Bialgebra() = default;
  /// The two structures must live on spaces of equal shape; the coalgebra is
  /// moved onto the algebra's space.
  Bialgebra(Algebra algebra, const Coalgebra &coalgebra);

  const Algebra &algebra() const { return algebra_; }
  const Coalgebra &coalgebra() const { return coalgebra_; }
  const Space &space() const { return algebra_.space(); }
  const Field &field() const { return algebra_.field(); }

private:
  Algebra algebra_;
  Coalgebra coalgebra_;
};

/// Right module M (x) A -> M.
class ModuleAction {
public:
  ModuleAction() = default;
  ModuleAction(Space module, Algebra algebra, const LinearMap &action);

  const Space &module() const { return module_; }
  const Algebra &algebra() const { return algebra_; }
  const LinearMap &action() const { return action_; }

private:
  Space module_;
  Algebra algebra_;
  LinearMap action_;
};

enum class Side { left, right };

/// Right coaction M -> M (x) C or left coaction M -> C (x) M.
class ComoduleCoaction {
public:
  ComoduleCoaction() = default;
  ComoduleCoaction(Space comodule, Coalgebra coalgebra, const LinearMap &coaction, Side side);

  const Space &comodule() const { return comodule_; }
  const Coalgebra &coalgebra() const { return coalgebra_; }
  const LinearMap &coaction() const { return coaction_; }
  Side side() const { return side_; }

private:
  Space comodule_;
  Coalgebra coalgebra_;
  LinearMap coaction_;
  Side side_ = Side::right;
};

Report check_algebra(const Algebra &a);
Report check_coalgebra(const Coalgebra &c);
/// Algebra and coalgebra axioms plus the four compatibility identities.
Report check_bialgebra(const Bialgebra &h);
Report check_module(const ModuleAction &m);
Report check_comodule(const ComoduleCoaction &c);

/// f o m_A = m_B o (f (x) f) and f(1_A) = 1_B.
Report check_algebra_morphism(const LinearMap &f, const Algebra &source, const Algebra &target);
/// Right H-comodule algebra: the coaction A -> A (x) H is an algebra map.
Report check_comodule_algebra(const Algebra &a, const ComoduleCoaction &coaction, const Bialgebra &h);
/// Right H-module algebra: (bb').h = (b.h1)(b'.h2) and 1.h = eps(h) 1.
Report check_module_algebra(const Algebra &b, const ModuleAction &action, const Bialgebra &h);

/// Dual coalgebra on A* (structure matrices transposed).
Coalgebra dualize_algebra(const Algebra &a);
/// Convolution algebra on C*.
Algebra convolution_algebra(const Coalgebra &c);
Bialgebra dualize_bialgebra(const Bialgebra &h);

/// A acting on itself by right multiplication.
ModuleAction regular_module(const Algebra &a);
/// The right H-comodule H given by its comultiplication.
ComoduleCoaction regular_comodule(const Coalgebra &c, Side side = Side::right);

/// ax = xa = eps(a) x for all a, Delta(x) = x (x) x, eps(x) = 1.
Report is_grouplike_bilateral_integral(const Bialgebra &h, const Vector &x);

/// delta(ab) = delta(a) b + a delta(b) and delta(1) = 0.
Report check_derivation(const Algebra &a, const LinearMap &delta);

} // namespace semient
