#include "semient/tambara.hpp"

namespace semient {
namespace {

std::string gen_name(const std::string &kind, const Space &base, std::size_t i, std::size_t j) {
  return kind + "[" + base.label(i) + "*," + base.label(j) + "]";
}

/// rho(i, j)[b'][b] = psi[(i, b')][(b, j)].
std::vector<LinearMap> slice(const EntwiningData &e) {
  const Space &left = e.left().space;
  const std::size_t n = e.right().space.dim();
  const std::size_t m = left.dim();
  std::vector<LinearMap> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearMap r(left, left, e.field());
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t b2 = 0; b2 < m; ++b2)
          r.at(b2, b) = e.psi().at(i * m + b2, b * n + j);
      out.push_back(std::move(r));
    }
  return out;
}

LinearMap assemble(const GeneratorAction &g) {
  const Space &left = g.carrier().space;
  const Space &right = g.base().space;
  const std::size_t n = right.dim();
  const std::size_t m = left.dim();
  LinearMap psi(tensor(left, right), tensor(right, left), g.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t b2 = 0; b2 < m; ++b2)
          psi.at(i * m + b2, b * n + j) = g.rho(i, j).at(b2, b);
  return psi;
}

/// sum_k (rho_ik (x) rho_kj).
LinearMap coproduct_action(const GeneratorAction &g, std::size_t i, std::size_t j) {
  const Space &b = g.carrier().space;
  LinearMap out(tensor(b, b), tensor(b, b), g.field());
  for (std::size_t k = 0; k < g.rank(); ++k)
    out += kron(g.rho(i, k), g.rho(k, j));
  return out;
}

Report compare(const std::string &suite, const GeneratorAction &a, const GeneratorAction &b) {
  Report r(suite);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      r.expect_equal(gen_name("generator", a.base().space, i, j), a.rho(i, j), b.rho(i, j));
  return r;
}

} // namespace

GeneratorAction::GeneratorAction(Carrier base, Carrier carrier, std::vector<LinearMap> rho)
    : base_(std::move(base)), carrier_(std::move(carrier)) {
  const std::size_t n = base_.space.dim();
  if (rho.size() != n * n)
    throw ShapeError("generator action needs " + std::to_string(n * n) + " matrices");
  for (auto &r : rho)
    rho_.push_back(r.reshaped(carrier_.space, carrier_.space));
}

const Field &GeneratorAction::field() const { return rho_.front().field(); }

LinearMap GeneratorAction::act(const Vector &functional, const Vector &element) const {
  LinearMap out(carrier_.space, carrier_.space, field());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      const Scalar c = functional.at(i) * element.at(j);
      if (!c.is_zero())
        out += c * rho(i, j);
    }
  return out;
}

GeneratorAction GeneratorAction::with_rho(std::size_t i, std::size_t j, const LinearMap &m) const {
  GeneratorAction out = *this;
  out.rho_.at(i * rank() + j) = m.reshaped(carrier_.space, carrier_.space);
  return out;
}

bool operator==(const GeneratorAction &a, const GeneratorAction &b) {
  if (a.rank() != b.rank() || !same_shape(a.carrier_.space, b.carrier_.space))
    return false;
  for (std::size_t i = 0; i < a.rho_.size(); ++i)
    if (!(a.rho_[i] == b.rho_[i]))
      return false;
  return true;
}

GeneratorAction slice_generators(const EntwiningData &e) { return GeneratorAction(e.right(), e.left(), slice(e)); }

GeneratorAction action_from_semi(const EntwiningData &e) {
  require(check_semi_entwining(e), "Tambara action needs a semi-entwining");
  return GeneratorAction(e.right(), e.left(), slice(e));
}

Report check_tambara_relations(const GeneratorAction &g) {
  const Algebra &a = g.base().require_algebra("base");
  const Space &base = a.space();
  const std::size_t n = g.rank();
  const LinearMap ib = LinearMap::identity(g.carrier().space, g.field());
  const LinearMap &m = a.mult();
  Report r("tambara-relations");
  // a_i*(1) id = rho(a_i*, 1)
  for (std::size_t i = 0; i < n; ++i)
    r.expect_equal("unit-relation[" + base.label(i) + "*]", g.act(basis_vector(base, i, g.field()), a.unit()),
                   a.unit()[i] * ib);
  // rho(a_i*, a_j a_l) = sum_{k,t} m^i_{kt} rho(t, l) o rho(k, j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vector prod(n, g.field().zero());
        for (std::size_t t = 0; t < n; ++t)
          prod[t] = m.at(t, j * n + l);
        LinearMap rhs(g.carrier().space, g.carrier().space, g.field());
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t t = 0; t < n; ++t) {
            const Scalar &c = m.at(i, k * n + t);
            if (!c.is_zero())
              rhs += c * (g.rho(t, l) * g.rho(k, j));
          }
        r.expect_equal("product-relation[" + base.label(i) + "*;" + base.label(j) + "," + base.label(l) + "]",
                       g.act(basis_vector(base, i, g.field()), prod), rhs);
      }
  return r;
}

EntwiningData semi_from_action(const GeneratorAction &g) {
  require(check_tambara_relations(g), "generator action violates the Tambara relations");
  return EntwiningData(g.carrier(), g.base(), assemble(g), EntwiningKind::semi);
}

Report tambara_roundtrip(const EntwiningData &e) {
  Report r("tambara-roundtrip");
  const GeneratorAction g = action_from_semi(e);
  const EntwiningData back = semi_from_action(g);
  r.expect_equal("psi-recovered", back.psi(), e.psi());
  r.absorb(compare("action-recovered", action_from_semi(back), g));
  return r;
}

Report check_module_algebra_refinement(const GeneratorAction &g) {
  const Algebra &b = g.carrier().require_algebra("carrier");
  const Space &base = g.base().space;
  Report r("module-algebra-refinement");
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) {
      r.expect_equal(gen_name("multiplicative", base, i, j), g.rho(i, j) * b.mult(), b.mult() * coproduct_action(g, i, j));
      const Scalar eps = i == j ? g.field().one() : g.field().zero();
      r.expect_equal(gen_name("unital", base, i, j), g.rho(i, j) * b.unit_map(), eps * b.unit_map());
    }
  return r;
}

GeneratorAction cotambara_action(const EntwiningData &e) {
  require(check_cosemi_entwining(e), "co-Tambara action needs a cosemi-entwining");
  return GeneratorAction(e.right(), e.left(), slice(e));
}

Report check_cotambara_relations(const GeneratorAction &g) {
  const Coalgebra &c = g.base().require_coalgebra("base");
  const Space &base = c.space();
  const std::size_t n = g.rank();
  const LinearMap id = LinearMap::identity(g.carrier().space, g.field());
  const LinearMap &d = c.comult();
  Report r("cotambara-relations");
  // rho(eps, c_j) = eps(c_j) id
  for (std::size_t j = 0; j < n; ++j)
    r.expect_equal("counit-relation[" + base.label(j) + "]", g.act(c.counit(), basis_vector(base, j, g.field())),
                   c.counit()[j] * id);
  // rho(c_k* * c_l*, c_j) = sum_{a,b} Delta^j_{ab} rho(l, b) o rho(k, a)
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) {
        Vector conv(n, g.field().zero());
        for (std::size_t i = 0; i < n; ++i)
          conv[i] = d.at(k * n + l, i);
        LinearMap rhs(g.carrier().space, g.carrier().space, g.field());
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar &coef = d.at(a * n + b, j);
            if (!coef.is_zero())
              rhs += coef * (g.rho(l, b) * g.rho(k, a));
          }
        r.expect_equal("convolution-relation[" + base.label(k) + "*," + base.label(l) + "*;" + base.label(j) + "]",
                       g.act(conv, basis_vector(base, j, g.field())), rhs);
      }
  return r;
}

EntwiningData cosemi_from_action(const GeneratorAction &g) {
  require(check_cotambara_relations(g), "generator action violates the co-Tambara relations");
  return EntwiningData(g.carrier(), g.base(), assemble(g), EntwiningKind::cosemi);
}

Report cotambara_roundtrip(const EntwiningData &e) {
  Report r("cotambara-roundtrip");
  const GeneratorAction g = cotambara_action(e);
  const EntwiningData back = cosemi_from_action(g);
  r.expect_equal("psi-recovered", back.psi(), e.psi());
  r.absorb(compare("action-recovered", cotambara_action(back), g));
  return r;
}

Report check_module_coalgebra_refinement(const GeneratorAction &g) {
  const Coalgebra &d = g.carrier().require_coalgebra("carrier");
  const Space &base = g.base().space;
  Report r("module-coalgebra-refinement");
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) {
      r.expect_equal(gen_name("comultiplicative", base, i, j), d.comult() * g.rho(i, j),
                     coproduct_action(g, i, j) * d.comult());
      const Scalar eps = i == j ? g.field().one() : g.field().zero();
      r.expect_equal(gen_name("counital", base, i, j), d.counit_map() * g.rho(i, j), eps * d.counit_map());
    }
  return r;
}

Report check_dual_consistency(const EntwiningData &cosemi) {
  const GeneratorAction co = cotambara_action(cosemi);
  const GeneratorAction dual = action_from_semi(dualize_cosemi(cosemi));
  Report r("dual-consistency");
  for (std::size_t i = 0; i < co.rank(); ++i)
    for (std::size_t j = 0; j < co.rank(); ++j)
      r.expect_equal(gen_name("transposed", co.base().space, i, j), dual.rho(i, j), co.rho(j, i));
  return r;
}

} // namespace semient
