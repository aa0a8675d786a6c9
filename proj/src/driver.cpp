#include "semient/driver.hpp"

#include <functional>

#include "semient/yangbaxter.hpp"

namespace semient {
namespace {

using Builder = std::function<std::vector<std::pair<std::string, Object>>(const StructureFile &, const Expression &)>;

const std::string &arg(const Expression &e, std::size_t i) {
  if (i >= e.positional.size())
    throw InputError(e.name + " needs " + std::to_string(i + 1) + " object argument(s)");
  return e.positional[i];
}

Scalar scalar_arg(const StructureFile &f, const Expression &e, const std::string &key,
                  const std::optional<std::string> &fallback = std::nullopt) {
  const auto it = e.keyed.find(key);
  if (it == e.keyed.end() && !fallback)
    throw InputError(e.name + " needs " + key + "=<scalar>");
  try {
    return f.field().parse_scalar(it == e.keyed.end() ? *fallback : it->second);
  } catch (const std::invalid_argument &ex) {
    throw InputError(key + ": " + ex.what());
  }
}

bool flag_arg(const Expression &e, const std::string &key) {
  const auto it = e.keyed.find(key);
  if (it == e.keyed.end())
    return false;
  if (it->second == "1" || it->second == "true")
    return true;
  if (it->second == "0" || it->second == "false")
    return false;
  throw InputError(key + " is a flag: 0 or 1");
}

Object object_arg(const StructureFile &f, const Expression &e, std::size_t i) { return f.object(arg(e, i)); }

template <class T> T as(const Object &o, const std::string &what) {
  if (const T *p = std::get_if<T>(&o))
    return *p;
  throw InputError("expected " + what + ", found " + type_name(o));
}

Algebra algebra_arg(const StructureFile &f, const Expression &e, std::size_t i) {
  const Object o = object_arg(f, e, i);
  if (const Bialgebra *h = std::get_if<Bialgebra>(&o))
    return h->algebra();
  return as<Algebra>(o, "an algebra");
}

Bialgebra bialgebra_of(const StructureFile &f, const std::string &name) {
  return as<Bialgebra>(f.object(name), "a bialgebra");
}

EntwiningData entwining_arg(const StructureFile &f, const Expression &e, std::size_t i) {
  return as<EntwiningData>(object_arg(f, e, i), "an entwining");
}

GeneratorAction generator_arg(const StructureFile &f, const Expression &e, std::size_t i) {
  return as<GeneratorObject>(object_arg(f, e, i), "a generator action").action;
}

std::vector<std::pair<std::string, Object>> one(Object o) { return {{"", std::move(o)}}; }

const std::map<std::string, Builder> &builders() {
  static const std::map<std::string, Builder> table = {
      {"gamma_q", [](const StructureFile &f, const Expression &e) {
         return one(make_gamma_q(algebra_arg(f, e, 0), scalar_arg(f, e, "q")));
       }},
      {"eta_q", [](const StructureFile &f, const Expression &e) {
         return one(make_eta_q(algebra_arg(f, e, 0), scalar_arg(f, e, "q")));
       }},
      {"module_semi", [](const StructureFile &f, const Expression &e) {
         return one(make_module_semi(as<ModuleAction>(object_arg(f, e, 0), "a module")));
       }},
      {"twist", [](const StructureFile &f, const Expression &e) {
         const auto k = e.keyed.find("kind");
         EntwiningKind kind = EntwiningKind::semi;
         if (k != e.keyed.end()) {
           try {
             kind = parse_entwining_kind(k->second);
           } catch (const std::invalid_argument &ex) {
             throw InputError(ex.what());
           }
         }
         return one(make_twist(f.carrier(arg(e, 0)), f.carrier(arg(e, 1)), kind));
       }},
      {"quadratic", [](const StructureFile &f, const Expression &e) {
         return one(make_quadratic_factorization(algebra_arg(f, e, 0), scalar_arg(f, e, "q")));
       }},
      {"psi_A", [](const StructureFile &f, const Expression &e) {
         const Algebra a = algebra_arg(f, e, 0);
         return one(BraidedObject{a, make_psi_A(a)});
       }},
      {"R_rs", [](const StructureFile &f, const Expression &e) {
         return one(make_R_rs(algebra_arg(f, e, 0), scalar_arg(f, e, "r"), scalar_arg(f, e, "s")));
       }},
      {"np2", [](const StructureFile &f, const Expression &e) {
         return one(make_np2_map(algebra_arg(f, e, 0), scalar_arg(f, e, "lambda")));
       }},
      {"type2_np2", [](const StructureFile &f, const Expression &e) {
         const TypeIISystem s = make_type2_np2(algebra_arg(f, e, 0), scalar_arg(f, e, "lambda"),
                                               scalar_arg(f, e, "lambda2"), flag_arg(e, "noncommutative"));
         return one(SystemObject{"type2", {{"A", s.a}, {"B", s.b}, {"C", s.c}, {"D", s.d}}});
       }},
      {"factorization_product", [](const StructureFile &f, const Expression &e) {
         const FactorizationProduct p = factorization_product(entwining_arg(f, e, 0));
         require(p.algebra_report, "the twisted product is not an algebra");
         return one(p.product);
       }},
      {"cofactorization_coproduct", [](const StructureFile &f, const Expression &e) {
         const CofactorizationCoproduct p = cofactorization_coproduct(entwining_arg(f, e, 0));
         require(p.coalgebra_report, "the twisted coproduct is not a coalgebra");
         return one(p.coproduct);
       }},
      {"biproduct", [](const StructureFile &f, const Expression &e) {
         const EntwiningData ent = entwining_arg(f, e, 0);
         const auto h = e.keyed.find("bialgebra");
         if (h == e.keyed.end())
           throw InputError("biproduct needs bialgebra=<name>");
         const Bialgebra bi = bialgebra_of(f, h->second);
         std::optional<Vector> x;
         if (const auto xi = e.keyed.find("x"); xi != e.keyed.end()) {
           const Object xo = f.object(xi->second);
           x = as<IntegralObject>(xo, "an integral candidate").element;
         }
         const Biproduct b = biproduct_BplusA(ent, bi, x);
         Report all("biproduct");
         all.absorb(b.bimodule, "bimodule");
         all.absorb(b.algebra_report, "algebra");
         all.absorb(b.comodule_report, "comodule");
         if (b.integral_comodule_algebra)
           all.absorb(*b.integral_comodule_algebra, "integral-comodule-algebra");
         require(all, "the biproduct construction failed");
         std::vector<std::pair<std::string, Object>> out{{"", b.algebra}, {"unit-coaction", b.unit_coaction}};
         if (b.integral_coaction)
           out.emplace_back("integral-coaction", *b.integral_coaction);
         return out;
       }},
      {"dualize_cosemi", [](const StructureFile &f, const Expression &e) {
         return one(dualize_cosemi(entwining_arg(f, e, 0)));
       }},
      {"action_from_semi", [](const StructureFile &f, const Expression &e) {
         return one(GeneratorObject{false, action_from_semi(entwining_arg(f, e, 0))});
       }},
      {"semi_from_action", [](const StructureFile &f, const Expression &e) {
         return one(semi_from_action(generator_arg(f, e, 0)));
       }},
      {"cotambara_action", [](const StructureFile &f, const Expression &e) {
         return one(GeneratorObject{true, cotambara_action(entwining_arg(f, e, 0))});
       }},
      {"cosemi_from_action", [](const StructureFile &f, const Expression &e) {
         return one(cosemi_from_action(generator_arg(f, e, 0)));
       }},
      {"opposite", [](const StructureFile &f, const Expression &e) { return one(algebra_arg(f, e, 0).opposite()); }},
      {"dual", [](const StructureFile &f, const Expression &e) {
         const Object o = object_arg(f, e, 0);
         if (const Coalgebra *c = std::get_if<Coalgebra>(&o))
           return one(convolution_algebra(*c));
         if (const Bialgebra *h = std::get_if<Bialgebra>(&o))
           return one(dualize_bialgebra(*h));
         return one(dualize_algebra(as<Algebra>(o, "an algebra, coalgebra or bialgebra")));
       }},
  };
  return table;
}

std::vector<std::pair<std::string, Object>> build(const StructureFile &file, const std::string &text) {
  const Expression e = parse_expression(text);
  const auto it = builders().find(e.name);
  if (it == builders().end())
    throw InputError("unknown construction '" + e.name + "'");
  try {
    return it->second(file, e);
  } catch (const StructureError &ex) {
    throw InputError(e.name + ": " + ex.what());
  } catch (const ShapeError &ex) {
    throw InputError(e.name + ": " + ex.what());
  }
}

// ---- checks ---------------------------------------------------------------

using Check = std::function<Report()>;
using CheckTable = std::vector<std::pair<std::string, Check>>;

Report agreement(const std::string &suite, const Report &first, const Report &second) {
  Report r = Agreement{first, second}.summary(suite);
  r.absorb(first, first.suite());
  r.absorb(second, second.suite());
  return r;
}

CheckTable checks_of(const Space &) { return {}; }

CheckTable checks_of(const Algebra &a) {
  return {{"algebra", [a] { return check_algebra(a); }},
          {"commutative", [a] {
             Report r("commutative");
             r.expect_equal("commutative", a.mult() * twist(a.space(), a.space(), a.field()), a.mult());
             return r;
           }}};
}

CheckTable checks_of(const Coalgebra &c) { return {{"coalgebra", [c] { return check_coalgebra(c); }}}; }

CheckTable checks_of(const Bialgebra &h) {
  return {{"bialgebra", [h] { return check_bialgebra(h); }},
          {"algebra", [h] { return check_algebra(h.algebra()); }},
          {"coalgebra", [h] { return check_coalgebra(h.coalgebra()); }}};
}

Report braid_only(const LinearMap &f) { return check_yb_operator(f).subset("braid", {"braid"}); }

CheckTable checks_of(const LinearMap &f) {
  return {{"braid", [f] { return braid_only(f); }},
          {"invertible", [f] {
             Report r("invertible");
             r.expect("invertible", is_invertible(f), "det = " + determinant(f).to_string());
             return r;
           }},
          {"yb-operator", [f] { return check_yb_operator(f); }},
          {"qybe", [f] { return check_qybe(f); }}};
}

CheckTable checks_of(const ModuleAction &m) { return {{"module", [m] { return check_module(m); }}}; }
CheckTable checks_of(const ComoduleCoaction &c) { return {{"comodule", [c] { return check_comodule(c); }}}; }

CheckTable checks_of(const EntwiningData &e) {
  return {
      {"declared", [e] { return check_declared(e); }},
      {"semi-entwining", [e] { return check_semi_entwining(e); }},
      {"algebra-factorization", [e] { return check_algebra_factorization(e); }},
      {"entwining-ll", [e] { return check_entwining_ll(e); }},
      {"cosemi-entwining", [e] { return check_cosemi_entwining(e); }},
      {"coalgebra-factorization", [e] { return check_coalgebra_factorization(e); }},
      {"entwining-rr", [e] { return check_entwining_rr(e); }},
      {"factorization-product", [e] {
         const FactorizationProduct p = factorization_product(e);
         return agreement("factorization-product", p.algebra_report, p.factorization_report);
       }},
      {"cofactorization-coproduct", [e] {
         const CofactorizationCoproduct p = cofactorization_coproduct(e);
         return agreement("cofactorization-coproduct", p.coalgebra_report, p.cofactorization_report);
       }},
      {"intertwining", [e] { return check_intertwining(e); }},
      {"tambara-relations", [e] { return check_tambara_relations(slice_generators(e)); }},
      {"tambara-roundtrip", [e] { return tambara_roundtrip(e); }},
      {"module-algebra-refinement", [e] { return check_module_algebra_refinement(slice_generators(e)); }},
      {"cotambara-relations", [e] { return check_cotambara_relations(slice_generators(e)); }},
      {"cotambara-roundtrip", [e] { return cotambara_roundtrip(e); }},
      {"module-coalgebra-refinement", [e] { return check_module_coalgebra_refinement(slice_generators(e)); }},
      {"dual-consistency", [e] { return check_dual_consistency(e); }},
      {"yb-operator", [e] { return check_yb_operator(e.psi()); }},
      {"braid", [e] { return braid_only(e.psi()); }},
      {"opposite-factorization", [e] {
         const Agreement a = opposite_factorization_equivalence(e.right().require_algebra("right"), e.psi());
         return agreement("opposite-factorization", a.first, a.second);
       }},
  };
}

CheckTable checks_of(const SystemObject &s) {
  return {{"semi-system", [s] { return check_semi_yb_system(s.at("W"), s.at("X")); }},
          {"wxz", [s] { return check_wxz(s.at("W"), s.at("X"), s.at("Z")); }},
          {"type2", [s] { return check_type2(TypeIISystem{s.at("A"), s.at("B"), s.at("C"), s.at("D")}); }},
          {"type1", [s] {
             return check_type1_from_type2(TypeIISystem{s.at("A"), s.at("B"), s.at("C"), s.at("D")});
           }}};
}

CheckTable checks_of(const MeasuredObject &m) {
  return {{"entwined-variant", [m] {
             if (!m.entwining)
               throw InputError("the measured object names no entwining");
             return check_entwined_variant(m.module, *m.entwining);
           }},
          {"base", [m] { return m.module.action ? check_module(*m.module.action) : check_comodule(*m.module.coaction); }}};
}

CheckTable checks_of(const DerivationObject &d) {
  return {{"derivation", [d] { return check_derivation(d.algebra, d.delta); }},
          {"derivation-morphism", [d] { return derivation_morphism_check(d.algebra, d.delta); }}};
}

CheckTable checks_of(const IntegralObject &x) {
  return {{"grouplike-integral", [x] { return is_grouplike_bilateral_integral(x.bialgebra, x.element); }}};
}

CheckTable checks_of(const BraidedObject &b) {
  return {{"braided-algebra", [b] { return check_braided_algebra(b.algebra, b.psi); }},
          {"r-commutative", [b] { return check_r_commutative(b.algebra, b.psi); }},
          {"yb-operator", [b] { return check_yb_operator(b.psi); }},
          {"involutive", [b] {
             Report r("involutive");
             r.expect_equal("involutive", b.psi * b.psi, LinearMap::identity(b.psi.domain(), b.psi.field()));
             return r;
           }}};
}

CheckTable checks_of(const GeneratorObject &g) {
  if (g.co)
    return {{"cotambara-relations", [g] { return check_cotambara_relations(g.action); }},
            {"module-coalgebra-refinement", [g] { return check_module_coalgebra_refinement(g.action); }}};
  return {{"tambara-relations", [g] { return check_tambara_relations(g.action); }},
          {"module-algebra-refinement", [g] { return check_module_algebra_refinement(g.action); }}};
}

CheckTable table_of(const Object &o) {
  return std::visit([](const auto &x) { return checks_of(x); }, o);
}

} // namespace

Expression parse_expression(const std::string &text) {
  const auto at = text.find('@');
  if (at == std::string::npos || at == 0 || at + 1 == text.size())
    throw InputError("expected name@arguments, got '" + text + "'");
  Expression e;
  e.name = text.substr(0, at);
  std::size_t start = at + 1;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.empty())
      throw InputError("empty argument in '" + text + "'");
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      if (!e.keyed.empty())
        throw InputError("object arguments come before key=value pairs in '" + text + "'");
      e.positional.push_back(part);
    } else if (!e.keyed.emplace(part.substr(0, eq), part.substr(eq + 1)).second) {
      throw InputError("repeated key '" + part.substr(0, eq) + "'");
    }
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return e;
}

bool is_expression(const std::string &text) { return text.find('@') != std::string::npos; }

std::vector<std::string> construction_names() {
  std::vector<std::string> out;
  for (const auto &[name, b] : builders())
    out.push_back(name);
  return out;
}

Object resolve_object(const StructureFile &file, const std::string &ref) {
  if (file.contains(ref) || !is_expression(ref))
    return file.object(ref);
  return build(file, ref).front().second;
}

std::vector<std::pair<std::string, Object>> construct(const StructureFile &file, const std::string &expr,
                                                      const std::string &name) {
  auto parts = build(file, expr);
  for (auto &[role, obj] : parts)
    role = role.empty() ? name : name + "/" + role;
  return parts;
}

std::vector<std::string> check_names(const Object &o) {
  std::vector<std::string> out;
  for (const auto &[name, c] : table_of(o))
    out.push_back(name);
  return out;
}

Report run_check(const Object &o, const std::string &check) {
  for (const auto &[name, run] : table_of(o)) {
    if (name != check)
      continue;
    try {
      return run();
    } catch (const PreconditionError &e) {
      Report r(check);
      r.expect("precondition", false, e.what());
      r.absorb(e.report(), "precondition");
      return r;
    } catch (const StructureError &e) {
      throw InputError(check + ": " + e.what());
    } catch (const ShapeError &e) {
      throw InputError(check + ": " + e.what());
    }
  }
  throw InputError("unknown check '" + check + "' for object type " + type_name(o));
}

} // namespace semient
