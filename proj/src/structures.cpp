#include "semient/structures.hpp"

namespace semient {
namespace {

LinearMap id(const Space &s, const Field &k) { return LinearMap::identity(s, k); }

void require_dims(const LinearMap &f, std::size_t rows, std::size_t cols, const std::string &what) {
  if (f.rows() != rows || f.cols() != cols)
    throw ShapeError(what + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                     std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
}

} // namespace

Algebra::Algebra(Space space, const LinearMap &mult, Vector unit) : space_(std::move(space)), unit_(std::move(unit)) {
  const std::size_t n = space_.dim();
  require_dims(mult, n, n * n, "algebra multiplication");
  if (unit_.size() != n)
    throw ShapeError("algebra unit has length " + std::to_string(unit_.size()) + ", expected " + std::to_string(n));
  mult_ = mult.reshaped(tensor(space_, space_), space_);
}

Vector Algebra::multiply(const Vector &a, const Vector &b) const {
  Vector ab(dim() * dim(), field().zero());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      ab[i * dim() + j] = a.at(i) * b.at(j);
  return mult_.apply(ab);
}

Algebra Algebra::opposite() const { return Algebra(space_, mult_ * twist(space_, space_, field()), unit_); }

bool Algebra::is_commutative() const { return mult_ == mult_ * twist(space_, space_, field()); }

Coalgebra::Coalgebra(Space space, const LinearMap &comult, Vector counit)
    : space_(std::move(space)), counit_(std::move(counit)) {
  const std::size_t n = space_.dim();
  require_dims(comult, n * n, n, "coalgebra comultiplication");
  if (counit_.size() != n)
    throw ShapeError("counit has length " + std::to_string(counit_.size()) + ", expected " + std::to_string(n));
  comult_ = comult.reshaped(space_, tensor(space_, space_));
}

Bialgebra::Bialgebra(Algebra algebra, const Coalgebra &coalgebra) : algebra_(std::move(algebra)) {
  if (!same_shape(algebra_.space(), coalgebra.space()))
    throw ShapeError("bialgebra: algebra and coalgebra live on different spaces");
  coalgebra_ = Coalgebra(algebra_.space(), coalgebra.comult(), coalgebra.counit());
}

ModuleAction::ModuleAction(Space module, Algebra algebra, const LinearMap &action)
    : module_(std::move(module)), algebra_(std::move(algebra)) {
  require_dims(action, module_.dim(), module_.dim() * algebra_.dim(), "module action");
  action_ = action.reshaped(tensor(module_, algebra_.space()), module_);
}

ComoduleCoaction::ComoduleCoaction(Space comodule, Coalgebra coalgebra, const LinearMap &coaction, Side side)
    : comodule_(std::move(comodule)), coalgebra_(std::move(coalgebra)), side_(side) {
  require_dims(coaction, comodule_.dim() * coalgebra_.dim(), comodule_.dim(), "coaction");
  const Space target =
      side_ == Side::right ? tensor(comodule_, coalgebra_.space()) : tensor(coalgebra_.space(), comodule_);
  coaction_ = coaction.reshaped(comodule_, target);
}

Report check_algebra(const Algebra &a) {
  Report r("algebra");
  const LinearMap &m = a.mult();
  const LinearMap i = a.identity();
  const LinearMap u = a.unit_map();
  r.expect_equal("associativity", m * kron(m, i), m * kron(i, m));
  r.expect_equal("unit-left", squeeze_ground(m * kron(u, i)), i);
  r.expect_equal("unit-right", squeeze_ground(m * kron(i, u)), i);
  return r;
}

Report check_coalgebra(const Coalgebra &c) {
  Report r("coalgebra");
  const LinearMap &d = c.comult();
  const LinearMap i = c.identity();
  const LinearMap e = c.counit_map();
  r.expect_equal("coassociativity", kron(d, i) * d, kron(i, d) * d);
  r.expect_equal("counit-left", squeeze_ground(kron(e, i) * d), i);
  r.expect_equal("counit-right", squeeze_ground(kron(i, e) * d), i);
  return r;
}

Report check_bialgebra(const Bialgebra &h) {
  Report r("bialgebra");
  r.absorb(check_algebra(h.algebra()));
  r.absorb(check_coalgebra(h.coalgebra()));
  const Field &k = h.field();
  const Space &s = h.space();
  const LinearMap &m = h.algebra().mult();
  const LinearMap u = h.algebra().unit_map();
  const LinearMap &d = h.coalgebra().comult();
  const LinearMap e = h.coalgebra().counit_map();
  const LinearMap i = id(s, k);
  const LinearMap middle_swap = kron(i, twist(s, s, k), i);
  r.expect_equal("comult-multiplicative", d * m, kron(m, m) * middle_swap * kron(d, d));
  r.expect_equal("comult-unit", squeeze_ground(d * u), squeeze_ground(kron(u, u)));
  r.expect_equal("counit-multiplicative", squeeze_ground(e * m), squeeze_ground(kron(e, e)));
  r.expect_equal("counit-unit", e * u, id(Space::ground(), k));
  return r;
}

Report check_module(const ModuleAction &mod) {
  Report r("module");
  const Algebra &a = mod.algebra();
  const LinearMap &act = mod.action();
  const LinearMap im = id(mod.module(), a.field());
  const LinearMap ia = a.identity();
  r.expect_equal("module-associativity", act * kron(act, ia), act * kron(im, a.mult()));
  r.expect_equal("module-unit", squeeze_ground(act * kron(im, a.unit_map())), im);
  return r;
}

Report check_comodule(const ComoduleCoaction &com) {
  Report r("comodule");
  const Coalgebra &c = com.coalgebra();
  const LinearMap &rho = com.coaction();
  const LinearMap im = id(com.comodule(), c.field());
  const LinearMap ic = c.identity();
  if (com.side() == Side::right) {
    r.expect_equal("comodule-coassociativity", kron(rho, ic) * rho, kron(im, c.comult()) * rho);
    r.expect_equal("comodule-counit", squeeze_ground(kron(im, c.counit_map()) * rho), im);
  } else {
    r.expect_equal("comodule-coassociativity", kron(ic, rho) * rho, kron(c.comult(), im) * rho);
    r.expect_equal("comodule-counit", squeeze_ground(kron(c.counit_map(), im) * rho), im);
  }
  return r;
}

Report check_algebra_morphism(const LinearMap &f, const Algebra &source, const Algebra &target) {
  if (!same_shape(f.domain(), source.space()) || !same_shape(f.codomain(), target.space()))
    throw ShapeError("algebra morphism has the wrong shape");
  Report r("algebra-morphism");
  const LinearMap g = f.reshaped(source.space(), target.space());
  r.expect_equal("morphism-multiplicative", g * source.mult(), target.mult() * kron(g, g));
  r.expect_equal("morphism-unit", g * source.unit_map(), target.unit_map());
  return r;
}

Report check_comodule_algebra(const Algebra &a, const ComoduleCoaction &coaction, const Bialgebra &h) {
  if (coaction.side() != Side::right || !same_shape(coaction.comodule(), a.space()) ||
      !same_shape(coaction.coalgebra().space(), h.space()))
    throw StructureError("comodule algebra needs a right H-coaction on the algebra");
  Report r("comodule-algebra");
  r.absorb(check_comodule(ComoduleCoaction(a.space(), h.coalgebra(), coaction.coaction(), Side::right)));
  const Field &k = a.field();
  const LinearMap rho = coaction.coaction().reshaped(a.space(), tensor(a.space(), h.space()));
  const LinearMap swap_mid = kron(a.identity(), twist(h.space(), a.space(), k), h.algebra().identity());
  r.expect_equal("coaction-multiplicative", rho * a.mult(), kron(a.mult(), h.algebra().mult()) * swap_mid * kron(rho, rho));
  r.expect_equal("coaction-unit", squeeze_ground(rho * a.unit_map()), squeeze_ground(kron(a.unit_map(), h.algebra().unit_map())));
  return r;
}

Report check_module_algebra(const Algebra &b, const ModuleAction &action, const Bialgebra &h) {
  if (!same_shape(action.module(), b.space()) || !same_shape(action.algebra().space(), h.space()))
    throw StructureError("module algebra needs a right H-action on the algebra");
  Report r("module-algebra");
  r.absorb(check_module(ModuleAction(b.space(), h.algebra(), action.action())));
  const Field &k = b.field();
  const LinearMap act = action.action().reshaped(tensor(b.space(), h.space()), b.space());
  const LinearMap ib = b.identity();
  const LinearMap ih = h.algebra().identity();
  const LinearMap rhs =
      b.mult() * kron(act, act) * kron(ib, twist(b.space(), h.space(), k), ih) * kron(kron(ib, ib), h.coalgebra().comult());
  r.expect_equal("action-multiplicative", act * kron(b.mult(), ih), rhs);
  r.expect_equal("action-unit", squeeze_ground(act * kron(b.unit_map(), ih)), b.unit_map() * h.coalgebra().counit_map());
  return r;
}

Coalgebra dualize_algebra(const Algebra &a) {
  return Coalgebra(dual(a.space()), a.mult().transposed(), a.unit());
}

Algebra convolution_algebra(const Coalgebra &c) {
  return Algebra(dual(c.space()), c.comult().transposed(), c.counit());
}

Bialgebra dualize_bialgebra(const Bialgebra &h) {
  return Bialgebra(convolution_algebra(h.coalgebra()), dualize_algebra(h.algebra()));
}

ModuleAction regular_module(const Algebra &a) { return ModuleAction(a.space(), a, a.mult()); }

ComoduleCoaction regular_comodule(const Coalgebra &c, Side side) {
  return ComoduleCoaction(c.space(), c, c.comult(), side);
}

Report is_grouplike_bilateral_integral(const Bialgebra &h, const Vector &x) {
  if (x.size() != h.space().dim())
    throw ShapeError("integral candidate has length " + std::to_string(x.size()) + ", expected " +
                     std::to_string(h.space().dim()));
  Report r("grouplike-integral");
  const Algebra &a = h.algebra();
  const LinearMap xp = LinearMap::point(a.space(), x);
  const LinearMap e = h.coalgebra().counit_map();
  const LinearMap i = a.identity();
  // a |-> eps(a) x
  const LinearMap scaled = xp * e;
  r.expect_equal("integral-left", squeeze_ground(a.mult() * kron(i, xp)), scaled);
  r.expect_equal("integral-right", squeeze_ground(a.mult() * kron(xp, i)), scaled);
  r.expect_equal("grouplike-comult", squeeze_ground(h.coalgebra().comult() * xp), squeeze_ground(kron(xp, xp)));
  r.expect_equal("grouplike-counit", e * xp, id(Space::ground(), a.field()));
  return r;
}

Report check_derivation(const Algebra &a, const LinearMap &delta) {
  if (delta.rows() != a.dim() || delta.cols() != a.dim())
    throw ShapeError("derivation must be an endomorphism of the algebra");
  Report r("derivation");
  const LinearMap d = delta.reshaped(a.space(), a.space());
  const LinearMap i = a.identity();
  r.expect_equal("leibniz", d * a.mult(), a.mult() * kron(d, i) + a.mult() * kron(i, d));
  r.expect_zero("derivation-unit", d * a.unit_map());
  return r;
}

} // namespace semient
