#include "semient/entwine.hpp"

#include <array>
#include <utility>

namespace semient {
namespace {

LinearMap id(const Space &s, const Field &k) { return LinearMap::identity(s, k); }

/// v |-> 1 (x) v on A (x) V.
LinearMap unit_before(const Algebra &a, const Space &v) {
  return squeeze_ground(kron(a.unit_map(), id(v, a.field())));
}

/// v |-> v (x) 1 on V (x) A.
LinearMap unit_after(const Space &v, const Algebra &a) {
  return squeeze_ground(kron(id(v, a.field()), a.unit_map()));
}

constexpr std::array<std::pair<EntwiningKind, const char *>, 6> kKindNames{{
    {EntwiningKind::semi, "semi"},
    {EntwiningKind::cosemi, "cosemi"},
    {EntwiningKind::factorization, "factorization"},
    {EntwiningKind::cofactorization, "cofactorization"},
    {EntwiningKind::entwining_ll, "entwining-ll"},
    {EntwiningKind::entwining_rr, "entwining-rr"},
}};

constexpr std::array<std::pair<MeasuredVariant, const char *>, 4> kVariantNames{{
    {MeasuredVariant::semi_module, "semi-entwined-module"},
    {MeasuredVariant::semi_comodule, "semi-entwined-comodule"},
    {MeasuredVariant::cosemi_module, "cosemi-entwined-module"},
    {MeasuredVariant::cosemi_comodule, "cosemi-entwined-comodule"},
}};

void semi_axioms(Report &r, const EntwiningData &e) {
  const Algebra &a = e.right().require_algebra("right leg");
  const Space &b = e.left().space;
  const Field &k = e.field();
  const LinearMap &psi = e.psi();
  const LinearMap ia = a.identity();
  const LinearMap ib = id(b, k);
  r.expect_equal("semi-unit", squeeze_ground(psi * kron(ib, a.unit_map())), squeeze_ground(kron(a.unit_map(), ib)));
  r.expect_equal("semi-multiplicative", psi * kron(ib, a.mult()), kron(a.mult(), ib) * kron(ia, psi) * kron(psi, ia));
}

void cosemi_axioms(Report &r, const EntwiningData &e) {
  const Coalgebra &c = e.right().require_coalgebra("right leg");
  const Space &d = e.left().space;
  const Field &k = e.field();
  const LinearMap &psi = e.psi();
  const LinearMap ic = c.identity();
  const LinearMap id_d = id(d, k);
  r.expect_equal("cosemi-counit", squeeze_ground(kron(c.counit_map(), id_d) * psi),
                 squeeze_ground(kron(id_d, c.counit_map())));
  r.expect_equal("cosemi-comultiplicative", kron(c.comult(), id_d) * psi,
                 kron(ic, psi) * kron(psi, ic) * kron(id_d, c.comult()));
}

} // namespace

std::string to_string(EntwiningKind kind) {
  for (const auto &[k, name] : kKindNames)
    if (k == kind)
      return name;
  return "?";
}

EntwiningKind parse_entwining_kind(const std::string &text) {
  for (const auto &[k, name] : kKindNames)
    if (text == name)
      return k;
  throw std::invalid_argument("unknown entwining kind '" + text + "'");
}

bool is_algebra_side_kind(EntwiningKind kind) {
  return kind == EntwiningKind::semi || kind == EntwiningKind::factorization || kind == EntwiningKind::entwining_ll;
}

Carrier Carrier::plain(Space space) { return Carrier{std::move(space), std::nullopt, std::nullopt}; }
Carrier Carrier::of(const Algebra &a) { return Carrier{a.space(), a, std::nullopt}; }
Carrier Carrier::of(const Coalgebra &c) { return Carrier{c.space(), std::nullopt, c}; }
Carrier Carrier::of(const Bialgebra &h) { return Carrier{h.space(), h.algebra(), h.coalgebra()}; }

const Algebra &Carrier::require_algebra(const std::string &role) const {
  if (!algebra)
    throw StructureError(role + " carries no algebra structure");
  return *algebra;
}

const Coalgebra &Carrier::require_coalgebra(const std::string &role) const {
  if (!coalgebra)
    throw StructureError(role + " carries no coalgebra structure");
  return *coalgebra;
}

EntwiningData::EntwiningData(Carrier left, Carrier right, const LinearMap &psi, EntwiningKind kind)
    : left_(std::move(left)), right_(std::move(right)), kind_(kind) {
  if ((left_.algebra && !same_shape(left_.algebra->space(), left_.space)) ||
      (left_.coalgebra && !same_shape(left_.coalgebra->space(), left_.space)) ||
      (right_.algebra && !same_shape(right_.algebra->space(), right_.space)) ||
      (right_.coalgebra && !same_shape(right_.coalgebra->space(), right_.space)))
    throw ShapeError("entwining carrier structure does not live on its space");
  const std::size_t n = left_.space.dim() * right_.space.dim();
  if (psi.rows() != n || psi.cols() != n)
    throw ShapeError("psi must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  psi_ = psi.reshaped(tensor(left_.space, right_.space), tensor(right_.space, left_.space));
}

Report check_semi_entwining(const EntwiningData &e) {
  Report r("semi-entwining");
  semi_axioms(r, e);
  return r;
}

Report check_algebra_factorization(const EntwiningData &e) {
  Report r("algebra-factorization");
  semi_axioms(r, e);
  const Algebra &a = e.right().require_algebra("right leg");
  const Algebra &b = e.left().require_algebra("left leg");
  const LinearMap &psi = e.psi();
  const LinearMap ib = b.identity();
  r.expect_equal("factorization-unit", squeeze_ground(psi * kron(b.unit_map(), a.identity())),
                 squeeze_ground(kron(a.identity(), b.unit_map())));
  r.expect_equal("factorization-multiplicative", psi * kron(b.mult(), a.identity()),
                 kron(a.identity(), b.mult()) * kron(psi, ib) * kron(ib, psi));
  return r;
}

Report check_entwining_ll(const EntwiningData &e) {
  Report r("entwining-ll");
  semi_axioms(r, e);
  const Algebra &a = e.right().require_algebra("right leg");
  const Coalgebra &b = e.left().require_coalgebra("left leg");
  const LinearMap &psi = e.psi();
  const LinearMap ib = b.identity();
  r.expect_equal("entwining-counit", squeeze_ground(kron(a.identity(), b.counit_map()) * psi),
                 squeeze_ground(kron(b.counit_map(), a.identity())));
  r.expect_equal("entwining-comultiplicative", kron(a.identity(), b.comult()) * psi,
                 kron(psi, ib) * kron(ib, psi) * kron(b.comult(), a.identity()));
  return r;
}

Report check_cosemi_entwining(const EntwiningData &e) {
  Report r("cosemi-entwining");
  cosemi_axioms(r, e);
  return r;
}

Report check_coalgebra_factorization(const EntwiningData &e) {
  Report r("coalgebra-factorization");
  cosemi_axioms(r, e);
  const Coalgebra &c = e.right().require_coalgebra("right leg");
  const Coalgebra &d = e.left().require_coalgebra("left leg");
  const LinearMap &psi = e.psi();
  const LinearMap id_d = d.identity();
  r.expect_equal("cofactorization-counit", squeeze_ground(kron(c.identity(), d.counit_map()) * psi),
                 squeeze_ground(kron(d.counit_map(), c.identity())));
  r.expect_equal("cofactorization-comultiplicative", kron(c.identity(), d.comult()) * psi,
                 kron(psi, id_d) * kron(id_d, psi) * kron(d.comult(), c.identity()));
  return r;
}

Report check_entwining_rr(const EntwiningData &e) {
  Report r("entwining-rr");
  cosemi_axioms(r, e);
  const Coalgebra &c = e.right().require_coalgebra("right leg");
  const Algebra &d = e.left().require_algebra("left leg");
  const LinearMap &psi = e.psi();
  const LinearMap id_d = d.identity();
  r.expect_equal("rr-unit", squeeze_ground(psi * kron(d.unit_map(), c.identity())),
                 squeeze_ground(kron(c.identity(), d.unit_map())));
  r.expect_equal("rr-multiplicative", psi * kron(d.mult(), c.identity()),
                 kron(c.identity(), d.mult()) * kron(psi, id_d) * kron(id_d, psi));
  return r;
}

Report check_declared(const EntwiningData &e) {
  switch (e.kind()) {
  case EntwiningKind::semi:
    return check_semi_entwining(e);
  case EntwiningKind::cosemi:
    return check_cosemi_entwining(e);
  case EntwiningKind::factorization:
    return check_algebra_factorization(e);
  case EntwiningKind::cofactorization:
    return check_coalgebra_factorization(e);
  case EntwiningKind::entwining_ll:
    return check_entwining_ll(e);
  case EntwiningKind::entwining_rr:
    return check_entwining_rr(e);
  }
  throw std::logic_error("unhandled entwining kind");
}

EntwiningData make_gamma_q(const Algebra &a, const Scalar &q) {
  const LinearMap &m = a.mult();
  const LinearMap psi = unit_before(a, a.space()) * m + q * (unit_after(a.space(), a) * m) -
                        q * LinearMap::identity(tensor(a.space(), a.space()), a.field());
  return EntwiningData(Carrier::of(a), Carrier::of(a), psi, EntwiningKind::semi);
}

EntwiningData make_eta_q(const Algebra &a, const Scalar &q) {
  const LinearMap tau = twist(a.space(), a.space(), a.field());
  const LinearMap commutator = a.mult() - a.mult() * tau;
  const LinearMap psi = q * (unit_after(a.space(), a) * commutator) + tau;
  return EntwiningData(Carrier::of(a), Carrier::of(a), psi, EntwiningKind::semi);
}

EntwiningData make_module_semi(const ModuleAction &m) {
  const LinearMap psi = unit_before(m.algebra(), m.module()) * m.action();
  return EntwiningData(Carrier::plain(m.module()), Carrier::of(m.algebra()), psi, EntwiningKind::semi);
}

EntwiningData make_twist(Carrier left, Carrier right, EntwiningKind kind) {
  const Field k = left.algebra ? left.algebra->field()
                  : left.coalgebra ? left.coalgebra->field()
                  : right.algebra  ? right.algebra->field()
                                   : right.coalgebra->field();
  const LinearMap tau = twist(left.space, right.space, k);
  return EntwiningData(std::move(left), std::move(right), tau, kind);
}

EntwiningData make_doi_koppinen(const Bialgebra &h, const Algebra &a, const ComoduleCoaction &coaction,
                                const ModuleAction &b, const std::optional<Algebra> &b_algebra) {
  Report pre("doi-koppinen-prerequisites");
  pre.absorb(check_bialgebra(h), "bialgebra");
  pre.absorb(check_algebra(a), "algebra");
  pre.absorb(check_comodule_algebra(a, coaction, h), "comodule-algebra");
  const ModuleAction b_over_h(b.module(), h.algebra(), b.action());
  pre.absorb(check_module(b_over_h), "module");
  require(pre, "Doi-Koppinen prerequisites fail");

  const Field &k = h.field();
  const Space &bs = b.module();
  const LinearMap rho = coaction.coaction().reshaped(a.space(), tensor(a.space(), h.space()));
  const LinearMap psi =
      kron(a.identity(), b_over_h.action()) * kron(twist(bs, a.space(), k), id(h.space(), k)) * kron(id(bs, k), rho);

  if (b_algebra) {
    Report alg("doi-koppinen-module-algebra");
    alg.absorb(check_algebra(*b_algebra), "algebra");
    alg.absorb(check_module_algebra(*b_algebra, b_over_h, h), "module-algebra");
    require(alg, "B is not an H-module algebra");
    return EntwiningData(Carrier::of(*b_algebra), Carrier::of(a), psi, EntwiningKind::factorization);
  }
  return EntwiningData(Carrier::plain(bs), Carrier::of(a), psi, EntwiningKind::semi);
}

Report check_comodule_coalgebra(const Coalgebra &c, const ComoduleCoaction &coaction, const Bialgebra &h) {
  if (coaction.side() != Side::right || !same_shape(coaction.comodule(), c.space()) ||
      !same_shape(coaction.coalgebra().space(), h.space()))
    throw StructureError("comodule coalgebra needs a right H-coaction on the coalgebra");
  Report r("comodule-coalgebra");
  r.absorb(check_comodule(ComoduleCoaction(c.space(), h.coalgebra(), coaction.coaction(), Side::right)));
  const Field &k = c.field();
  const LinearMap rho = coaction.coaction().reshaped(c.space(), tensor(c.space(), h.space()));
  const LinearMap ic = c.identity();
  const LinearMap rhs =
      kron(kron(ic, ic), h.algebra().mult()) * kron(ic, twist(h.space(), c.space(), k), id(h.space(), k)) *
      kron(rho, rho) * c.comult();
  r.expect_equal("comult-colinear", kron(c.comult(), id(h.space(), k)) * rho, rhs);
  r.expect_equal("counit-colinear", squeeze_ground(kron(c.counit_map(), id(h.space(), k)) * rho),
                 h.algebra().unit_map() * c.counit_map());
  return r;
}

EntwiningData make_alt_doi_koppinen(const Bialgebra &h, const Coalgebra &c, const ComoduleCoaction &coaction,
                                    const ModuleAction &d) {
  Report pre("alt-doi-koppinen-prerequisites");
  pre.absorb(check_bialgebra(h), "bialgebra");
  pre.absorb(check_coalgebra(c), "coalgebra");
  pre.absorb(check_comodule_coalgebra(c, coaction, h), "comodule-coalgebra");
  const ModuleAction d_over_h(d.module(), h.algebra(), d.action());
  pre.absorb(check_module(d_over_h), "module");
  require(pre, "alternative Doi-Koppinen prerequisites fail");

  const Field &k = h.field();
  const Space &ds = d.module();
  const LinearMap rho = coaction.coaction().reshaped(c.space(), tensor(c.space(), h.space()));
  const LinearMap psi =
      kron(c.identity(), d_over_h.action()) * kron(twist(ds, c.space(), k), id(h.space(), k)) * kron(id(ds, k), rho);
  return EntwiningData(Carrier::plain(ds), Carrier::of(c), psi, EntwiningKind::cosemi);
}

ModuleAction induced_AtensorB_module(const EntwiningData &e) {
  require(check_semi_entwining(e), "induced A(x)B module needs a semi-entwining");
  const Algebra &a = e.right().require_algebra("right leg");
  const Space &b = e.left().space;
  const LinearMap action = kron(a.mult(), id(b, e.field())) * kron(a.identity(), e.psi());
  return ModuleAction(tensor(a.space(), b), a, action);
}

FactorizationProduct factorization_product(const EntwiningData &e) {
  const Algebra &a = e.right().require_algebra("right leg");
  const Algebra &b = e.left().require_algebra("left leg");
  const LinearMap product = kron(a.mult(), b.mult()) * kron(a.identity(), e.psi(), b.identity());
  Vector unit;
  unit.reserve(a.dim() * b.dim());
  for (const auto &x : a.unit())
    for (const auto &y : b.unit())
      unit.push_back(x * y);
  Algebra ab(tensor(a.space(), b.space()), product, std::move(unit));
  Report alg = check_algebra(ab);
  Report fact = check_algebra_factorization(e);
  return FactorizationProduct{std::move(ab), std::move(alg), std::move(fact)};
}

CofactorizationCoproduct cofactorization_coproduct(const EntwiningData &e) {
  const Coalgebra &c = e.right().require_coalgebra("right leg");
  const Coalgebra &d = e.left().require_coalgebra("left leg");
  const LinearMap coproduct = kron(d.identity(), e.psi(), c.identity()) * kron(d.comult(), c.comult());
  Vector counit;
  counit.reserve(c.dim() * d.dim());
  for (const auto &x : d.counit())
    for (const auto &y : c.counit())
      counit.push_back(x * y);
  Coalgebra dc(tensor(d.space(), c.space()), coproduct, std::move(counit));
  Report coalg = check_coalgebra(dc);
  Report fact = check_coalgebra_factorization(e);
  return CofactorizationCoproduct{std::move(dc), std::move(coalg), std::move(fact)};
}

EntwiningData dualize_cosemi(const EntwiningData &e) {
  require(check_cosemi_entwining(e), "dualization needs a cosemi-entwining");
  const Coalgebra &c = e.right().require_coalgebra("right leg");
  const Algebra dual_algebra = convolution_algebra(c);
  const std::size_t n = c.dim();
  const std::size_t m = e.left().space.dim();
  const LinearMap &psi = e.psi();
  LinearMap out(tensor(e.left().space, dual_algebra.space()), tensor(dual_algebra.space(), e.left().space),
                e.field());
  // psi^{*C}(d (x) c_j^*) = sum_i c_i^* (x) c_j^*(c_i^alpha) d_alpha
  for (std::size_t d = 0; d < m; ++d)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d2 = 0; d2 < m; ++d2)
          out.at(i * m + d2, d * n + j) = psi.at(j * m + d2, d * n + i);
  Carrier left = e.left();
  return EntwiningData(std::move(left), Carrier::of(dual_algebra), out, EntwiningKind::semi);
}

bool Biproduct::passed() const {
  return bimodule.passed() && algebra_report.passed() && comodule_report.passed() &&
         (!integral_comodule_algebra || integral_comodule_algebra->passed());
}

Biproduct biproduct_BplusA(const EntwiningData &e, const Bialgebra &h, const std::optional<Vector> &x) {
  Report pre("biproduct-prerequisites");
  pre.absorb(check_bialgebra(h), "bialgebra");
  if (!same_shape(e.right().space, h.space()))
    throw ShapeError("entwining's algebra leg is not the bialgebra's space");
  const EntwiningData eh(e.left(), Carrier::of(h), e.psi(), e.kind());
  pre.absorb(check_semi_entwining(eh), "semi-entwining");
  if (x)
    pre.absorb(is_grouplike_bilateral_integral(h, *x), "grouplike-integral");
  require(pre, "B(+)A prerequisites fail");

  const Field &k = h.field();
  const Algebra &a = h.algebra();
  const Space &bs = e.left().space;
  const Space &as = a.space();
  const LinearMap ib = id(bs, k);
  const LinearMap ia = a.identity();
  const LinearMap eps_b = squeeze_ground(kron(h.coalgebra().counit_map(), ib)); // A (x) B -> B
  const LinearMap circ = eps_b;                                                 // a o b = eps(a) b
  const LinearMap star = eps_b * eh.psi();                                      // b * a = eps(a_alpha) b^alpha

  Biproduct out;
  out.bimodule = Report("bimodule");
  out.bimodule.expect_equal("left-action-associativity", circ * kron(a.mult(), ib), circ * kron(ia, circ));
  out.bimodule.expect_equal("left-action-unit", squeeze_ground(circ * kron(a.unit_map(), ib)), ib);
  out.bimodule.expect_equal("right-action-associativity", star * kron(star, ia), star * kron(ib, a.mult()));
  out.bimodule.expect_equal("right-action-unit", squeeze_ground(star * kron(ib, a.unit_map())), ib);
  out.bimodule.expect_equal("bimodule-compatibility", star * kron(circ, ia), circ * kron(ia, star));

  const DirectSum s = direct_sum_maps(bs, as, k, "b", "a");
  const LinearMap product = s.in_left * star * kron(s.out_left, s.out_right) +
                            s.in_left * circ * kron(s.out_right, s.out_left) +
                            s.in_right * a.mult() * kron(s.out_right, s.out_right);
  out.algebra = Algebra(s.sum, product, (s.in_right * a.unit_map()).apply({k.one()}));
  out.algebra_report = check_algebra(out.algebra);

  const auto coaction_with = [&](const Vector &grouplike) {
    const LinearMap tag = squeeze_ground(kron(ib, LinearMap::point(as, grouplike))); // b |-> b (x) g
    const LinearMap rho = kron(s.in_left, ia) * tag * s.out_left + kron(s.in_right, ia) * h.coalgebra().comult() * s.out_right;
    return ComoduleCoaction(s.sum, h.coalgebra(), rho, Side::right);
  };
  out.unit_coaction = coaction_with(a.unit());
  out.comodule_report = check_comodule(out.unit_coaction);
  if (x) {
    out.integral_coaction = coaction_with(*x);
    out.integral_comodule_algebra = check_comodule_algebra(out.algebra, *out.integral_coaction, h);
  }
  return out;
}

std::string to_string(MeasuredVariant v) {
  for (const auto &[k, name] : kVariantNames)
    if (k == v)
      return name;
  return "?";
}

MeasuredVariant parse_measured_variant(const std::string &text) {
  for (const auto &[k, name] : kVariantNames)
    if (text == name)
      return k;
  throw std::invalid_argument("unknown measured-module variant '" + text + "'");
}

MeasuredModule MeasuredModule::semi_module(ModuleAction m, Space v, const LinearMap &measuring) {
  MeasuredModule out;
  out.variant = MeasuredVariant::semi_module;
  out.measuring = measuring.reshaped(tensor(m.module(), v), m.module());
  out.action = std::move(m);
  out.vee = std::move(v);
  return out;
}

MeasuredModule MeasuredModule::semi_comodule(ModuleAction m, Space v, const LinearMap &comeasuring) {
  MeasuredModule out;
  out.variant = MeasuredVariant::semi_comodule;
  out.measuring = comeasuring.reshaped(m.module(), tensor(m.module(), v));
  out.action = std::move(m);
  out.vee = std::move(v);
  return out;
}

MeasuredModule MeasuredModule::cosemi_module(ComoduleCoaction m, Space v, const LinearMap &measuring) {
  if (m.side() != Side::left)
    throw StructureError("cosemi-entwined modules need a left comodule");
  MeasuredModule out;
  out.variant = MeasuredVariant::cosemi_module;
  out.measuring = measuring.reshaped(tensor(v, m.comodule()), m.comodule());
  out.coaction = std::move(m);
  out.vee = std::move(v);
  return out;
}

MeasuredModule MeasuredModule::cosemi_comodule(ComoduleCoaction m, Space v, const LinearMap &comeasuring) {
  if (m.side() != Side::left)
    throw StructureError("cosemi-entwined comodules need a left comodule");
  MeasuredModule out;
  out.variant = MeasuredVariant::cosemi_comodule;
  out.measuring = comeasuring.reshaped(m.comodule(), tensor(v, m.comodule()));
  out.coaction = std::move(m);
  out.vee = std::move(v);
  return out;
}

const Space &MeasuredModule::carrier() const { return action ? action->module() : coaction->comodule(); }

Report check_entwined_variant(const MeasuredModule &mm, const EntwiningData &e) {
  const bool semi_variant =
      mm.variant == MeasuredVariant::semi_module || mm.variant == MeasuredVariant::semi_comodule;
  if (semi_variant != is_algebra_side_kind(e.kind()))
    throw StructureError(to_string(mm.variant) + " does not fit a " + to_string(e.kind()) + " map");
  if (!same_shape(mm.vee, e.left().space))
    throw StructureError("measuring space does not match the entwining's left leg");
  const Field &k = e.field();
  const LinearMap &psi = e.psi();
  Report r(to_string(mm.variant));

  if (semi_variant) {
    const ModuleAction &m = *mm.action;
    if (!same_shape(m.algebra().space(), e.right().space))
      throw StructureError("module algebra does not match the entwining's algebra");
    const LinearMap &act = m.action();
    const LinearMap im = id(m.module(), k);
    const LinearMap iv = id(mm.vee, k);
    const LinearMap ia = m.algebra().identity();
    if (mm.variant == MeasuredVariant::semi_module) {
      // m a_alpha <| v^alpha = (m <| v) a
      r.expect_equal("semi-entwined-module", mm.measuring * kron(act, iv) * kron(im, psi),
                     act * kron(mm.measuring, ia));
    } else {
      // rho(ma) = m_(0) psi(m_(1) (x) a)
      r.expect_equal("semi-entwined-comodule", mm.measuring * act,
                     kron(act, iv) * kron(im, psi) * kron(mm.measuring, ia));
    }
    return r;
  }

  const ComoduleCoaction &m = *mm.coaction;
  if (!same_shape(m.coalgebra().space(), e.right().space))
    throw StructureError("comodule coalgebra does not match the entwining's coalgebra");
  const LinearMap &rho = m.coaction();
  const LinearMap im = id(m.comodule(), k);
  const LinearMap iv = id(mm.vee, k);
  const LinearMap ic = m.coalgebra().identity();
  if (mm.variant == MeasuredVariant::cosemi_module) {
    // rho(v |> m) = m_(-1)^alpha (x) v_alpha |> m_(0)
    r.expect_equal("cosemi-entwined-module", rho * mm.measuring,
                   kron(ic, mm.measuring) * kron(psi, im) * kron(iv, rho));
  } else {
    r.expect_equal("cosemi-entwined-comodule", kron(ic, mm.measuring) * rho,
                   kron(psi, im) * kron(iv, rho) * mm.measuring);
  }
  return r;
}

ModuleAction assemble_AtensorB_action(const EntwiningData &e, const ModuleAction &m, const LinearMap &b_action) {
  const Algebra &b = e.left().require_algebra("left leg");
  const LinearMap meas = b_action.reshaped(tensor(m.module(), b.space()), m.module());
  const FactorizationProduct fp = factorization_product(e);
  const LinearMap action = meas * kron(m.action(), b.identity());
  return ModuleAction(m.module(), fp.product, action);
}

Report entwined_roundtrip(const EntwiningData &e, const ModuleAction &m, const LinearMap &b_action) {
  const Algebra &a = e.right().require_algebra("right leg");
  const Algebra &b = e.left().require_algebra("left leg");
  const Field &k = e.field();
  const ModuleAction b_module(m.module(), b, b_action);
  Report pre("roundtrip-prerequisites");
  pre.absorb(check_algebra_factorization(e), "factorization");
  pre.absorb(check_module(m), "A-module");
  pre.absorb(check_module(b_module), "B-module");
  require(pre, "A(x)B module round trip prerequisites fail");

  Report r("entwined-roundtrip");
  r.absorb(check_entwined_variant(MeasuredModule::semi_module(m, b.space(), b_action), e));
  const ModuleAction ab = assemble_AtensorB_action(e, m, b_action);
  r.absorb(check_module(ab), "assembled");

  // Converse: restrict the A (x) B action and reassemble it.
  const LinearMap im = id(m.module(), k);
  const LinearMap restrict_a = squeeze_ground(ab.action() * kron(kron(im, a.identity()), b.unit_map()));
  const LinearMap restrict_b = squeeze_ground(ab.action() * kron(kron(im, a.unit_map()), b.identity()));
  const ModuleAction ra(m.module(), a, restrict_a);
  r.absorb(check_module(ra), "restricted-A");
  r.absorb(check_module(ModuleAction(m.module(), b, restrict_b)), "restricted-B");
  r.absorb(check_entwined_variant(MeasuredModule::semi_module(ra, b.space(), restrict_b), e), "restricted");
  r.expect_equal("reassembly", assemble_AtensorB_action(e, ra, restrict_b).action(), ab.action());
  return r;
}

Report check_intertwining(const EntwiningData &e) {
  const Algebra &a = e.right().require_algebra("right leg");
  const Space &b = e.left().space;
  const Field &k = e.field();
  Report r("intertwining");
  const LinearMap rho = kron(id(b, k), a.mult());
  const ModuleAction trivial(tensor(b, a.space()), a, rho);
  const ModuleAction induced(tensor(a.space(), b), a, kron(a.mult(), id(b, k)) * kron(a.identity(), e.psi()));
  r.absorb(check_module(trivial), "rho");
  r.absorb(check_module(induced), "rho'");
  r.expect_equal("intertwining", e.psi() * trivial.action(), induced.action() * kron(e.psi(), a.identity()));
  return r;
}

ModuleAction lift_module(const EntwiningData &e, const ModuleAction &m) {
  const Algebra &a = e.right().require_algebra("right leg");
  const Space &b = e.left().space;
  const LinearMap action = kron(m.action(), id(b, e.field())) * kron(id(m.module(), e.field()), e.psi());
  return ModuleAction(tensor(m.module(), b), a, action);
}

Report check_lifted_morphism(const EntwiningData &e, const ModuleAction &m, const ModuleAction &m2,
                             const LinearMap &f) {
  Report r("lifted-morphism");
  const Algebra &a = e.right().require_algebra("right leg");
  const LinearMap g = f.reshaped(m.module(), m2.module());
  r.expect_equal("module-map", g * m.action(), m2.action() * kron(g, a.identity()));
  const ModuleAction lm = lift_module(e, m);
  const ModuleAction lm2 = lift_module(e, m2);
  const LinearMap gb = kron(g, id(e.left().space, e.field()));
  r.expect_equal("lifted-module-map", gb * lm.action(), lm2.action() * kron(gb, a.identity()));
  return r;
}

EntwiningData semi_from_lifted(const ModuleAction &on_ab, const Carrier &left, const Algebra &a) {
  const Space &b = left.space;
  if (on_ab.module().dim() != a.dim() * b.dim())
    throw ShapeError("lifted action must live on A (x) B");
  const LinearMap act = on_ab.action().reshaped(tensor(tensor(a.space(), b), a.space()), tensor(a.space(), b));
  const LinearMap psi = squeeze_ground(act * kron(kron(a.unit_map(), id(b, a.field())), a.identity()));
  return EntwiningData(left, Carrier::of(a), psi, EntwiningKind::semi);
}

} // namespace semient
