#include "semient/suite.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "semient/yangbaxter.hpp"

namespace semient {
namespace {

// ---- parameter access -------------------------------------------------------

const Json &param(const RowContext &c, const char *key) {
  if (!c.params.contains(key))
    throw InputError(std::string("grid parameter '") + key + "' is missing");
  return c.params.at(key);
}

std::vector<std::string> strings(const RowContext &c, const char *key) {
  const Json &j = param(c, key);
  if (!j.is_array())
    throw InputError(std::string("grid parameter '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto &s : j) {
    if (!s.is_string())
      throw InputError(std::string("grid parameter '") + key + "' holds strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

struct Named {
  std::string text;
  Scalar value;
};

std::vector<Named> scalars(const RowContext &c, const char *key) {
  std::vector<Named> out;
  for (const auto &s : strings(c, key)) {
    try {
      out.push_back({s, c.registry.field().parse_scalar(s)});
    } catch (const std::invalid_argument &e) {
      throw InputError(std::string("grid parameter '") + key + "': " + e.what());
    }
  }
  return out;
}

/// Pairs of scalars such as [["1","2"], ...].
std::vector<std::pair<Named, Named>> scalar_pairs(const RowContext &c, const char *key) {
  const Json &j = param(c, key);
  std::vector<std::pair<Named, Named>> out;
  const Field &k = c.registry.field();
  for (const auto &p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError(std::string("grid parameter '") + key + "' holds pairs of scalar strings");
    const std::string a = p[0].get<std::string>();
    const std::string b = p[1].get<std::string>();
    out.push_back({{a, k.parse_scalar(a)}, {b, k.parse_scalar(b)}});
  }
  return out;
}

long long integer(const RowContext &c, const char *key) {
  const Json &j = param(c, key);
  if (!j.is_number_integer())
    throw InputError(std::string("grid parameter '") + key + "' must be an integer");
  return j.get<long long>();
}

std::string text(const RowContext &c, const char *key) {
  const Json &j = param(c, key);
  if (!j.is_string())
    throw InputError(std::string("grid parameter '") + key + "' must be a string");
  return j.get<std::string>();
}

Algebra algebra_named(const StructureFile &reg, const std::string &name) {
  const Object o = reg.object(name);
  if (const auto *a = std::get_if<Algebra>(&o))
    return *a;
  if (const auto *h = std::get_if<Bialgebra>(&o))
    return h->algebra();
  throw InputError("'" + name + "' is not an algebra");
}

Coalgebra coalgebra_named(const StructureFile &reg, const std::string &name) {
  const Object o = reg.object(name);
  if (const auto *c = std::get_if<Coalgebra>(&o))
    return *c;
  if (const auto *h = std::get_if<Bialgebra>(&o))
    return h->coalgebra();
  throw InputError("'" + name + "' is not a coalgebra");
}

template <class T> T get_named(const StructureFile &reg, const std::string &name, const char *what) {
  const Object o = reg.object(name);
  if (const auto *x = std::get_if<T>(&o))
    return *x;
  throw InputError("'" + name + "' is not " + what);
}

// ---- report helpers ---------------------------------------------------------

std::string verdict(const Report &r) {
  if (r.passed())
    return "pass";
  return "fail at " + r.first_failure()->name;
}

/// Records whether `r` has the expected verdict; the note keeps the raw verdict.
bool expect_verdict(Report &row, const std::string &name, const Report &r, bool expected = true) {
  return row.expect(name, r.passed() == expected, verdict(r));
}

bool expect_agreement(Report &row, const std::string &name, const Report &first, const Report &second) {
  return row.expect(name, first.passed() == second.passed(),
                    first.suite() + " " + verdict(first) + "; " + second.suite() + " " + verdict(second));
}

/// Runs `f`; a PreconditionError becomes a failing entry instead of escaping.
template <class F> void guarded(Report &row, const std::string &name, F f) {
  try {
    f();
  } catch (const PreconditionError &e) {
    row.expect(name, false, std::string("precondition: ") + e.what() + " (" + verdict(e.report()) + ")");
  } catch (const StructureError &e) {
    row.expect(name, false, e.what());
  } catch (const ShapeError &e) {
    row.expect(name, false, e.what());
  }
}

/// Expects `f` to throw PreconditionError whose report fails at an entry
/// starting with `entry`.
template <class F> void expect_rejected(Report &row, const std::string &name, const std::string &entry, F f) {
  try {
    f();
    row.expect(name, false, "accepted");
  } catch (const PreconditionError &e) {
    const CheckResult *c = e.report().first_failure();
    const bool ok = c != nullptr && c->name.rfind(entry, 0) == 0;
    row.expect(name, ok, std::string("rejected: ") + (c ? c->name : "no failing entry"));
  }
}

std::string tag(const std::string &construction, const std::string &obj, const std::string &extra = {}) {
  return construction + "[" + obj + (extra.empty() ? "" : "," + extra) + "]";
}

// ---- random maps ------------------------------------------------------------

LinearMap random_map(std::mt19937 &rng, const Space &dom, const Space &cod, const Field &k) {
  LinearMap f(dom, cod, k);
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r)
      f.at(r, c) = k.from_int(static_cast<long long>(rng() % 3) - 1);
  return f;
}

/// Adds +1 or -1 at one position, restricted to columns in `cols`.
LinearMap perturb(LinearMap f, std::mt19937 &rng, const std::vector<std::size_t> &cols) {
  const std::size_t c = cols[rng() % cols.size()];
  const std::size_t r = rng() % f.rows();
  f.at(r, c) += f.field().from_int(rng() % 2 == 0 ? 1 : -1);
  return f;
}

std::vector<std::size_t> all_columns(const LinearMap &f) {
  std::vector<std::size_t> out(f.cols());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = i;
  return out;
}

/// Indices where the unit has a zero coordinate.
std::vector<std::size_t> off_unit(const Algebra &a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.unit()[i].is_zero())
      out.push_back(i);
  return out;
}

/// Columns (b, a) of a map on B (x) A with neither index touching a unit.
std::vector<std::size_t> interior_columns(const Algebra &b, const Algebra &a) {
  std::vector<std::size_t> out;
  for (std::size_t i : off_unit(b))
    for (std::size_t j : off_unit(a))
      out.push_back(i * a.dim() + j);
  return out;
}

/// Columns (b, a) with a off the unit of A.
std::vector<std::size_t> right_interior_columns(std::size_t dim_b, const Algebra &a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_b; ++i)
    for (std::size_t j : off_unit(a))
      out.push_back(i * a.dim() + j);
  return out;
}

std::mt19937 seeded(const RowContext &c, std::size_t salt) {
  std::seed_seq seq{static_cast<unsigned>(integer(c, "seed")), static_cast<unsigned>(salt)};
  return std::mt19937(seq);
}

/// Calls f(i) for i < n on up to `jobs` threads.
template <class F> void parallel_for(std::size_t n, unsigned jobs, F f) {
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++)
      f(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads == 1)
    return worker();
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
}

// ---- criterion 1: semi-entwining examples -----------------------------------

Report row_semi_examples(const RowContext &c) {
  Report row("semi-entwining examples");
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    for (const auto &q : scalars(c, "q")) {
      const EntwiningData g = make_gamma_q(a, q.value);
      const EntwiningData h = make_eta_q(a, q.value);
      expect_verdict(row, tag("gamma_q", name, "q=" + q.text) + "/semi-entwining", check_semi_entwining(g));
      expect_verdict(row, tag("eta_q", name, "q=" + q.text) + "/semi-entwining", check_semi_entwining(h));
      if (!q.value.is_zero())
        expect_verdict(row, tag("gamma_q", name, "q=" + q.text) + "/yb-operator", check_yb_operator(g.psi()));
      expect_verdict(row, tag("eta_q", name, "q=" + q.text) + "/yb-operator", check_yb_operator(h.psi()));
    }
  }
  for (const auto &name : strings(c, "modules")) {
    const ModuleAction m = get_named<ModuleAction>(c.registry, name, "a module");
    expect_verdict(row, tag("module_semi", name) + "/semi-entwining", check_semi_entwining(make_module_semi(m)));
  }
  return row;
}

// ---- criterion 2: twisted products ------------------------------------------

void record_product(Report &row, const std::string &name, const EntwiningData &e, int &failures) {
  const FactorizationProduct p = factorization_product(e);
  if (!p.factorization_report.passed())
    ++failures;
  expect_agreement(row, name, p.algebra_report, p.factorization_report);
  // Every factorization is in particular a semi-entwining.
  if (p.factorization_report.passed())
    expect_verdict(row, name + "/semi-subset", check_semi_entwining(e));
}

Report row_factorization_iff(const RowContext &c) {
  Report row("factorization iff");
  const auto names = strings(c, "algebras");
  const long long per_pair = integer(c, "random_per_pair");
  int failures = 0;
  int random_failures = 0;
  int random_passes = 0;
  std::size_t pair_index = 0;
  for (const auto &bn : names)
    for (const auto &an : names) {
      const Algebra b = algebra_named(c.registry, bn);
      const Algebra a = algebra_named(c.registry, an);
      const std::string pair = bn + "," + an;
      const EntwiningData twist_e = make_twist(Carrier::of(b), Carrier::of(a), EntwiningKind::factorization);
      record_product(row, tag("twist", pair), twist_e, failures);
      std::mt19937 rng = seeded(c, pair_index++);
      for (long long i = 0; i < per_pair; ++i) {
        // Even draws are unstructured; odd draws are one-entry corruptions of the flip.
        const LinearMap psi = i % 2 == 0
                                  ? random_map(rng, twist_e.psi().domain(), twist_e.psi().codomain(), a.field())
                                  : perturb(twist_e.psi(), rng, all_columns(twist_e.psi()));
        int dummy = 0;
        const EntwiningData e = twist_e.with_psi(psi);
        record_product(row, tag("random", pair, "#" + std::to_string(i)), e, dummy);
        (check_algebra_factorization(e).passed() ? random_passes : random_failures)++;
      }
    }
  for (const auto &an : names) {
    const Algebra a = algebra_named(c.registry, an);
    for (const auto &q : scalars(c, "q")) {
      record_product(row, tag("gamma_q", an, "q=" + q.text),
                     make_gamma_q(a, q.value).with_kind(EntwiningKind::factorization), failures);
      record_product(row, tag("eta_q", an, "q=" + q.text),
                     make_eta_q(a, q.value).with_kind(EntwiningKind::factorization), failures);
    }
  }
  for (const auto &[an, q] : [&] {
         std::vector<std::pair<std::string, Named>> out;
         for (const auto &p : param(c, "quadratic"))
           out.push_back({p[0].get<std::string>(), {p[1].get<std::string>(),
                                                    c.registry.field().parse_scalar(p[1].get<std::string>())}});
         return out;
       }())
    record_product(row, tag("quadratic", an, "q=" + q.text),
                   make_quadratic_factorization(algebra_named(c.registry, an), q.value), failures);
  for (const auto &name : c.registry.names())
    if (c.registry.type_of(name) == "entwining") {
      const EntwiningData e = c.registry.entwining(name);
      if (e.kind() == EntwiningKind::factorization)
        record_product(row, tag("registry", name), e, failures);
    }
  row.expect("random-genuine-failures", random_failures >= integer(c, "min_failures"),
             std::to_string(random_failures) + " failing, " + std::to_string(random_passes) + " passing");
  return row;
}

// ---- criterion 3: biproduct -------------------------------------------------

Report row_biproduct(const RowContext &c) {
  Report row("biproduct");
  const Bialgebra group = get_named<Bialgebra>(c.registry, text(c, "group"), "a bialgebra");
  const Bialgebra monoid = get_named<Bialgebra>(c.registry, text(c, "monoid"), "a bialgebra");
  const Field &k = c.registry.field();

  guarded(row, "group-gamma_1", [&] {
    const EntwiningData e = make_gamma_q(group.algebra(), k.one());
    const Biproduct b = biproduct_BplusA(e, group);
    expect_verdict(row, "group-gamma_1/bimodule", b.bimodule);
    expect_verdict(row, "group-gamma_1/algebra", b.algebra_report);
    expect_verdict(row, "group-gamma_1/comodule", b.comodule_report);
  });
  guarded(row, "monoid-twist", [&] {
    const EntwiningData e =
        make_twist(c.registry.carrier(text(c, "monoid_left")), Carrier::of(monoid.algebra()), EntwiningKind::semi);
    const IntegralObject x = get_named<IntegralObject>(c.registry, text(c, "integral"), "an integral");
    const Biproduct b = biproduct_BplusA(e, monoid, x.element);
    expect_verdict(row, "monoid-twist/bimodule", b.bimodule);
    expect_verdict(row, "monoid-twist/algebra", b.algebra_report);
    expect_verdict(row, "monoid-twist/comodule", b.comodule_report);
    row.expect("monoid-twist/integral-coaction-present", b.integral_comodule_algebra.has_value());
    if (b.integral_comodule_algebra)
      expect_verdict(row, "monoid-twist/integral-comodule-algebra", *b.integral_comodule_algebra);
  });
  const IntegralObject bad = get_named<IntegralObject>(c.registry, text(c, "rejected_integral"), "an integral");
  expect_verdict(row, "rejected-integral/grouplike-integral", is_grouplike_bilateral_integral(bad.bialgebra, bad.element),
                 false);
  expect_rejected(row, "rejected-integral/biproduct", "", [&] {
    biproduct_BplusA(make_gamma_q(bad.bialgebra.algebra(), k.one()), bad.bialgebra, bad.element);
  });
  return row;
}

// ---- criterion 4: cosemi-entwinings -----------------------------------------

void record_coproduct(Report &row, const std::string &name, const EntwiningData &e) {
  const CofactorizationCoproduct p = cofactorization_coproduct(e);
  expect_agreement(row, name, p.coalgebra_report, p.cofactorization_report);
  const Report cosemi = check_cosemi_entwining(e);
  if (cosemi.passed())
    expect_verdict(row, name + "/dual-semi", check_semi_entwining(dualize_cosemi(e)));
}

Report row_cosemi(const RowContext &c) {
  Report row("cosemi iff and duals");
  const auto names = strings(c, "coalgebras");
  const long long per_pair = integer(c, "random_per_pair");
  std::size_t pair_index = 0;
  int failures = 0;
  for (const auto &dn : names)
    for (const auto &cn : names) {
      const Coalgebra d = coalgebra_named(c.registry, dn);
      const Coalgebra cc = coalgebra_named(c.registry, cn);
      const std::string pair = dn + "," + cn;
      const EntwiningData twist_e = make_twist(Carrier::of(d), Carrier::of(cc), EntwiningKind::cofactorization);
      record_coproduct(row, tag("twist", pair), twist_e);
      std::mt19937 rng = seeded(c, 1000 + pair_index++);
      for (long long i = 0; i < per_pair; ++i) {
        const LinearMap psi = i % 2 == 0
                                  ? random_map(rng, twist_e.psi().domain(), twist_e.psi().codomain(), d.field())
                                  : perturb(twist_e.psi(), rng, all_columns(twist_e.psi()));
        const EntwiningData e = twist_e.with_psi(psi);
        if (!check_coalgebra_factorization(e).passed())
          ++failures;
        record_coproduct(row, tag("random", pair, "#" + std::to_string(i)), e);
      }
    }
  // Transposes of the algebra-side examples: psi^T : A* (x) A* -> A* (x) A*.
  for (const auto &an : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, an);
    const Coalgebra dual = coalgebra_named(c.registry, an + "*");
    for (const auto &q : scalars(c, "q"))
      for (const auto &[label, e] : {std::pair{"gamma_q", make_gamma_q(a, q.value)}, {"eta_q", make_eta_q(a, q.value)}}) {
        const LinearMap t = e.psi().transposed();
        const EntwiningData ce(Carrier::of(dual), Carrier::of(dual),
                               t.reshaped(tensor(dual.space(), dual.space()), tensor(dual.space(), dual.space())),
                               EntwiningKind::cofactorization);
        const std::string name = tag(std::string(label) + "^T", an, "q=" + q.text);
        record_coproduct(row, name, ce);
        expect_agreement(row, name + "/transpose-duality", check_algebra_factorization(e.with_kind(EntwiningKind::factorization)),
                         check_coalgebra_factorization(ce));
      }
  }
  row.expect("random-genuine-failures", failures >= integer(c, "min_failures"), std::to_string(failures) + " failing");

  // Graded alternative Doi-Koppinen map and the ungraded negative example.
  const Bialgebra h = get_named<Bialgebra>(c.registry, text(c, "bialgebra"), "a bialgebra");
  const ModuleAction dmod = get_named<ModuleAction>(c.registry, text(c, "module"), "a module");
  const ComoduleCoaction graded = get_named<ComoduleCoaction>(c.registry, text(c, "comodule_coalgebra"), "a comodule");
  guarded(row, "alt-doi-koppinen", [&] {
    const EntwiningData e = make_alt_doi_koppinen(h, coalgebra_named(c.registry, text(c, "coalgebra")), graded, dmod);
    expect_verdict(row, "alt-doi-koppinen/cosemi-entwining", check_cosemi_entwining(e));
    expect_verdict(row, "alt-doi-koppinen/dual-semi", check_semi_entwining(dualize_cosemi(e)));
  });
  const ComoduleCoaction plain = get_named<ComoduleCoaction>(c.registry, text(c, "not_comodule_coalgebra"), "a comodule");
  expect_rejected(row, "alt-doi-koppinen/ungraded-rejected", "", [&] {
    make_alt_doi_koppinen(h, plain.coalgebra(), plain, dmod);
  });
  return row;
}

// ---- criterion 5: entwined modules ------------------------------------------

LinearMap unit_comeasuring(const Algebra &a) {
  // m |-> m (x) 1
  return kron(a.identity(), a.unit_map()).reshaped(a.space(), tensor(a.space(), a.space()));
}

Report row_entwined_modules(const RowContext &c) {
  Report row("entwined modules");
  const Field &k = c.registry.field();
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    const ModuleAction m = regular_module(a);
    const LinearMap act = a.mult();
    for (const auto &q : scalars(c, "q")) {
      const MeasuredModule mm = MeasuredModule::semi_module(m, a.space(), act);
      expect_verdict(row, tag("regular-measuring/gamma_q", name, "q=" + q.text),
                     check_entwined_variant(mm, make_gamma_q(a, q.value)));
      const MeasuredModule co = MeasuredModule::semi_comodule(m, a.space(), unit_comeasuring(a));
      expect_verdict(row, tag("unit-comeasuring/eta_q", name, "q=" + q.text),
                     check_entwined_variant(co, make_eta_q(a, q.value)));
    }
    expect_verdict(row, tag("regular-measuring/eta_1", name),
                   check_entwined_variant(MeasuredModule::semi_module(m, a.space(), act), make_eta_q(a, k.one())));
    expect_verdict(row, tag("unit-comeasuring/gamma_1", name),
                   check_entwined_variant(MeasuredModule::semi_comodule(m, a.space(), unit_comeasuring(a)),
                                          make_gamma_q(a, k.one())));
    // A measuring off by one entry breaks the identity.
    LinearMap broken = act;
    broken.at(0, 0) += k.one();
    expect_verdict(row, tag("corrupted-measuring/gamma_1", name),
                   check_entwined_variant(MeasuredModule::semi_module(m, a.space(), broken), make_gamma_q(a, k.one())),
                   false);

    // Reassembly over A (x) A^op with <| the left multiplication.
    const Algebra op = a.opposite();
    const LinearMap left_mult = a.mult() * twist(a.space(), a.space(), k);
    guarded(row, tag("roundtrip/twist", name), [&] {
      const EntwiningData e = make_twist(Carrier::of(op), Carrier::of(a), EntwiningKind::factorization);
      expect_verdict(row, tag("roundtrip/twist", name), entwined_roundtrip(e, m, left_mult));
    });
  }
  for (const auto &p : param(c, "quadratic")) {
    const std::string an = p[0].get<std::string>();
    const Algebra a = algebra_named(c.registry, an);
    const Scalar q = k.parse_scalar(p[1].get<std::string>());
    const LinearMap left_mult = a.mult() * twist(a.space(), a.space(), k);
    guarded(row, tag("roundtrip/quadratic", an, "q=" + p[1].get<std::string>()), [&] {
      expect_verdict(row, tag("roundtrip/quadratic", an, "q=" + p[1].get<std::string>()),
                     entwined_roundtrip(make_quadratic_factorization(a, q), regular_module(a), left_mult));
    });
  }
  return row;
}

// ---- criterion 6: intertwining ----------------------------------------------

Report row_intertwining(const RowContext &c) {
  Report row("intertwining");
  std::vector<std::pair<std::string, EntwiningData>> cases;
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    for (const auto &q : scalars(c, "q")) {
      cases.emplace_back(tag("gamma_q", name, "q=" + q.text), make_gamma_q(a, q.value));
      cases.emplace_back(tag("eta_q", name, "q=" + q.text), make_eta_q(a, q.value));
    }
    cases.emplace_back(tag("twist", name), make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::semi));
    cases.emplace_back(tag("module_semi/regular", name), make_module_semi(regular_module(a)));
  }
  for (const auto &name : strings(c, "modules"))
    cases.emplace_back(tag("module_semi", name),
                       make_module_semi(get_named<ModuleAction>(c.registry, name, "a module")));
  for (const auto &name : c.registry.names())
    if (c.registry.type_of(name) == "entwining") {
      const EntwiningData e = c.registry.entwining(name);
      if (is_algebra_side_kind(e.kind()))
        cases.emplace_back(tag("registry", name), e);
    }
  int passing = 0;
  for (const auto &[name, e] : cases) {
    if (!check_semi_entwining(e).passed())
      continue;
    ++passing;
    expect_verdict(row, name + "/intertwining", check_intertwining(e));
  }
  row.expect("passing-instances", passing > 0, std::to_string(passing) + " semi-entwinings checked");
  return row;
}

// ---- criterion 7: braided algebras ------------------------------------------

Report row_braided(const RowContext &c) {
  Report row("braided algebras");
  const Field &k = c.registry.field();
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    const LinearMap psi = make_psi_A(a);
    expect_verdict(row, tag("psi_A", name) + "/braided-algebra", check_braided_algebra(a, psi));
    expect_verdict(row, tag("psi_A", name) + "/r-commutative", check_r_commutative(a, psi));
    Report inv("involutive");
    inv.expect_equal("psi-psi", psi * psi, LinearMap::identity(psi.domain(), k));
    expect_verdict(row, tag("psi_A", name) + "/involutive", inv);
  }
  for (const auto &name : strings(c, "noncommutative")) {
    const Algebra a = algebra_named(c.registry, name);
    expect_verdict(row, tag("twist", name) + "/r-commutative",
                   check_r_commutative(a, twist(a.space(), a.space(), k)), false);
  }
  const Json &mor = param(c, "morphism");
  const Algebra src = algebra_named(c.registry, mor.at("source").get<std::string>());
  const Algebra dst = algebra_named(c.registry, mor.at("target").get<std::string>());
  LinearMap f(src.space(), dst.space(), k);
  const Json &img = mor.at("matrix");
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t col = 0; col < f.cols(); ++col)
      f.at(r, col) = k.parse_scalar(img.at(r).at(col).get<std::string>());
  expect_verdict(row, "morphism/braided-morphism", check_braided_morphism(f, src, make_psi_A(src), dst, make_psi_A(dst)));

  const DerivationObject d = get_named<DerivationObject>(c.registry, text(c, "derivation"), "a derivation");
  guarded(row, "derivation", [&] {
    expect_verdict(row, "derivation/derivation-morphism", derivation_morphism_check(d.algebra, d.delta));
  });
  const DerivationObject nd = get_named<DerivationObject>(c.registry, text(c, "non_derivation"), "a derivation");
  expect_rejected(row, "non-derivation/rejected", "", [&] { derivation_morphism_check(nd.algebra, nd.delta); });
  return row;
}

// ---- criterion 8: Tambara correspondence ------------------------------------

/// rho(i, j) from a column formula b |-> formula(i, j, b).
template <class F> GeneratorAction action_from_formula(const Algebra &a, const Carrier &base, const Carrier &on, F formula) {
  std::vector<LinearMap> mats;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::vector<Vector> cols;
      for (std::size_t b = 0; b < on.space.dim(); ++b)
        cols.push_back(formula(i, j, b));
      mats.push_back(LinearMap::from_columns(on.space, on.space, cols));
    }
  return GeneratorAction(base, on, std::move(mats));
}

Vector axpy(Vector y, const Scalar &s, const Vector &x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] += s * x[i];
  return y;
}

Report compare_actions(const std::string &suite, const GeneratorAction &got, const GeneratorAction &want) {
  Report r(suite);
  for (std::size_t i = 0; i < got.rank(); ++i)
    for (std::size_t j = 0; j < got.rank(); ++j)
      r.expect_equal("rho[" + std::to_string(i) + "," + std::to_string(j) + "]", got.rho(i, j), want.rho(i, j));
  return r;
}

Report row_tambara(const RowContext &c) {
  Report row("tambara");
  const Field &k = c.registry.field();
  const long long corruptions = integer(c, "corruptions");
  std::size_t salt = 0;
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    const Carrier ca = Carrier::of(a);
    const std::size_t n = a.dim();
    auto e_vec = [&](std::size_t i) { return basis_vector(a.space(), i, k); };
    for (const auto &q : scalars(c, "q")) {
      for (const auto &[label, base] :
           {std::pair{"gamma_q", make_gamma_q(a, q.value)}, std::pair{"eta_q", make_eta_q(a, q.value)}}) {
        std::mt19937 rng = seeded(c, 5000 + salt++);
        std::vector<std::pair<std::string, EntwiningData>> variants{{"", base}};
        for (long long t = 0; t < corruptions; ++t)
          variants.emplace_back("#corrupt" + std::to_string(t), base.with_psi(perturb(base.psi(), rng, all_columns(base.psi()))));
        for (const auto &[suffix, e] : variants) {
          const std::string id = tag(label, name, "q=" + q.text) + suffix;
          const Report semi = check_semi_entwining(e);
          const GeneratorAction g = slice_generators(e);
          expect_agreement(row, id + "/relations", check_tambara_relations(g), semi);
          Report refined("relations-and-refinement");
          refined.absorb(check_tambara_relations(g), "relations");
          refined.absorb(check_module_algebra_refinement(g), "refinement");
          expect_agreement(row, id + "/refinement", refined,
                           check_algebra_factorization(e.with_kind(EntwiningKind::factorization)));
          if (semi.passed())
            guarded(row, id + "/roundtrip", [&] { expect_verdict(row, id + "/roundtrip", tambara_roundtrip(e)); });
        }
      }
      // b [a_i* (x) a_j] = a_i*(1) b a_j + q a_i*(b a_j) 1 - q a_i*(b) a_j
      const GeneratorAction gamma_want = action_from_formula(a, ca, ca, [&](std::size_t i, std::size_t j, std::size_t b) {
        const Vector ba = a.multiply(e_vec(b), e_vec(j));
        Vector v = axpy(zero_vector(n, k), a.unit()[i], ba);
        v = axpy(v, q.value * ba[i], a.unit());
        return axpy(v, -(q.value * (i == b ? k.one() : k.zero())), e_vec(j));
      });
      guarded(row, tag("formula/gamma_q", name, "q=" + q.text), [&] {
        expect_verdict(row, tag("formula/gamma_q", name, "q=" + q.text),
                       compare_actions("gamma-formula", action_from_semi(make_gamma_q(a, q.value)), gamma_want));
      });
      // b [a_i* (x) a_j] = q a_i*(b a_j - a_j b) 1 + a_i*(a_j) b
      const auto eta_formula = [&](const Scalar &second) {
        return action_from_formula(a, ca, ca, [&, second](std::size_t i, std::size_t j, std::size_t b) {
          const Vector comm = axpy(a.multiply(e_vec(b), e_vec(j)), -k.one(), a.multiply(e_vec(j), e_vec(b)));
          Vector v = axpy(zero_vector(n, k), q.value * comm[i], a.unit());
          return axpy(v, i == j ? second : k.zero(), e_vec(b));
        });
      };
      guarded(row, tag("formula/eta_q", name, "q=" + q.text), [&] {
        const GeneratorAction got = action_from_semi(make_eta_q(a, q.value));
        expect_verdict(row, tag("formula/eta_q", name, "q=" + q.text), compare_actions("eta-formula", got, eta_formula(k.one())));
        // The printed variant carries a factor q on the second term as well; it agrees at q = 1.
        if (q.value == k.one())
          expect_verdict(row, tag("formula/eta_q-printed", name, "q=1"),
                         compare_actions("eta-formula-printed", got, eta_formula(q.value)));
      });
    }
    // m [a_i* (x) a_j] = a_i*(1) m a_j
    std::vector<ModuleAction> modules{regular_module(a)};
    for (const auto &mn : strings(c, "modules")) {
      const ModuleAction m = get_named<ModuleAction>(c.registry, mn, "a module");
      if (same_shape(m.algebra().space(), a.space()) && m.algebra().mult() == a.mult())
        modules.push_back(m);
    }
    for (const auto &m : modules) {
      const Carrier cm = Carrier::plain(m.module());
      const GeneratorAction want = action_from_formula(a, ca, cm, [&](std::size_t i, std::size_t j, std::size_t b) {
        const auto col = m.action().column(b * n + j);
        const Vector mb(col.begin(), col.end());
        Vector v = zero_vector(m.module().dim(), k);
        return axpy(v, a.unit()[i], mb);
      });
      const std::string id = tag("formula/module_semi", name, m.module().label(0));
      guarded(row, id, [&] { expect_verdict(row, id, compare_actions("module-formula", action_from_semi(make_module_semi(m)), want)); });
    }
  }

  // Co-Tambara side over the dual coalgebras.
  for (const auto &name : strings(c, "coalgebras")) {
    const Coalgebra cc = coalgebra_named(c.registry, name);
    const EntwiningData tw = make_twist(Carrier::of(cc), Carrier::of(cc), EntwiningKind::cosemi);
    std::mt19937 rng = seeded(c, 9000 + salt++);
    std::vector<std::pair<std::string, EntwiningData>> variants{{"", tw}};
    for (long long t = 0; t < corruptions; ++t)
      variants.emplace_back("#corrupt" + std::to_string(t), tw.with_psi(perturb(tw.psi(), rng, all_columns(tw.psi()))));
    for (const auto &[suffix, e] : variants) {
      const std::string id = tag("twist", name) + suffix;
      const Report cosemi = check_cosemi_entwining(e);
      const GeneratorAction g = slice_generators(e);
      expect_agreement(row, id + "/co-relations", check_cotambara_relations(g), cosemi);
      Report refined("relations-and-refinement");
      refined.absorb(check_cotambara_relations(g), "relations");
      refined.absorb(check_module_coalgebra_refinement(g), "refinement");
      expect_agreement(row, id + "/co-refinement", refined,
                       check_coalgebra_factorization(e.with_kind(EntwiningKind::cofactorization)));
      if (cosemi.passed()) {
        guarded(row, id + "/co-roundtrip", [&] { expect_verdict(row, id + "/co-roundtrip", cotambara_roundtrip(e)); });
        guarded(row, id + "/dual-consistency",
                [&] { expect_verdict(row, id + "/dual-consistency", check_dual_consistency(e)); });
      }
    }
  }
  const Bialgebra h = get_named<Bialgebra>(c.registry, text(c, "bialgebra"), "a bialgebra");
  const ModuleAction dmod = get_named<ModuleAction>(c.registry, text(c, "module"), "a module");
  const ComoduleCoaction graded = get_named<ComoduleCoaction>(c.registry, text(c, "comodule_coalgebra"), "a comodule");
  guarded(row, "alt-doi-koppinen", [&] {
    const EntwiningData e = make_alt_doi_koppinen(h, coalgebra_named(c.registry, text(c, "coalgebra")), graded, dmod);
    expect_verdict(row, "alt-doi-koppinen/co-relations", check_cotambara_relations(slice_generators(e)));
    expect_verdict(row, "alt-doi-koppinen/co-roundtrip", cotambara_roundtrip(e));
    expect_verdict(row, "alt-doi-koppinen/dual-consistency", check_dual_consistency(e));
  });
  return row;
}

// ---- criterion 9: Yang-Baxter systems ---------------------------------------

Report row_commutator(const RowContext &c) {
  Report row("constant commutator of R_rs");
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    for (const auto &r : scalars(c, "r"))
      for (const auto &s : scalars(c, "s")) {
        const LinearMap w = make_R_rs(a, r.value, s.value);
        Report rep("commutator");
        rep.expect_zero("[W,W,W]", yb_commutator(w, w, w));
        expect_verdict(row, tag("R_rs", name, "r=" + r.text + ",s=" + s.text), rep);
      }
  }
  return row;
}

std::vector<std::pair<std::string, EntwiningData>> semi_instances(const RowContext &c, const Algebra &a,
                                                                  const std::string &name) {
  std::vector<std::pair<std::string, EntwiningData>> out;
  for (const auto &q : scalars(c, "q")) {
    out.emplace_back(tag("gamma_q", name, "q=" + q.text), make_gamma_q(a, q.value));
    out.emplace_back(tag("eta_q", name, "q=" + q.text), make_eta_q(a, q.value));
  }
  out.emplace_back(tag("twist", name), make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::semi));
  return out;
}

Report row_semi_system(const RowContext &c) {
  Report row("semi system iff semi-entwining");
  std::size_t salt = 0;
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    auto cases = semi_instances(c, a, name);
    std::mt19937 rng = seeded(c, 20000 + salt++);
    const auto cols = right_interior_columns(a.dim(), a);
    if (!cols.empty())
      for (long long t = 0; t < integer(c, "corruptions"); ++t) {
        const auto &[base_name, base] = cases[t % cases.size()];
        cases.emplace_back(base_name + "#corrupt" + std::to_string(t), base.with_psi(perturb(base.psi(), rng, cols)));
      }
    for (const auto &[id, e] : cases)
      for (const auto &[r, s] : scalar_pairs(c, "rs")) {
        const std::string full = id + "/r=" + r.text + ",s=" + s.text;
        guarded(row, full, [&] {
          const Agreement ag = semi_system_equivalence(a, e.left(), x_from_psi(e), r.value, s.value);
          expect_agreement(row, full, ag.first, ag.second);
        });
      }
  }
  return row;
}

Report row_wxz(const RowContext &c) {
  Report row("WXZ system iff factorization");
  const Field &k = c.registry.field();
  std::size_t salt = 0;
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    std::vector<std::pair<std::string, EntwiningData>> cases;
    for (const auto &q : scalars(c, "q"))
      cases.emplace_back(tag("gamma_q", name, "q=" + q.text), make_gamma_q(a, q.value).with_kind(EntwiningKind::factorization));
    cases.emplace_back(tag("twist", name), make_twist(Carrier::of(a), Carrier::of(a), EntwiningKind::factorization));
    std::mt19937 rng = seeded(c, 30000 + salt++);
    const auto cols = interior_columns(a, a);
    if (!cols.empty())
      for (long long t = 0; t < integer(c, "corruptions"); ++t) {
        const auto &[base_name, base] = cases[t % cases.size()];
        cases.emplace_back(base_name + "#corrupt" + std::to_string(t), base.with_psi(perturb(base.psi(), rng, cols)));
      }
    for (const auto &[id, e] : cases)
      for (const auto &[r, s] : scalar_pairs(c, "rs")) {
        const std::string full = id + "/r=" + r.text + ",s=" + s.text + ",p=" + r.text + ",q=" + s.text;
        // An X that moves a unit cannot come from a factorization, whose unit
        // axioms force psi(1 (x) a) = a (x) 1 and psi(b (x) 1) = 1 (x) b.
        try {
          const Agreement ag = wxz_factorization_equivalence(a, e.left().require_algebra("left"), x_from_psi(e), r.value,
                                                             s.value, r.value, s.value);
          expect_agreement(row, full, ag.first, ag.second);
        } catch (const PreconditionError &) {
          expect_verdict(row, full + "/unnormalized", check_algebra_factorization(e), false);
        }
      }
  }
  for (const auto &p : param(c, "quadratic")) {
    const std::string an = p[0].get<std::string>();
    const Algebra a = algebra_named(c.registry, an);
    const EntwiningData e = make_quadratic_factorization(a, k.parse_scalar(p[1].get<std::string>()));
    const std::string full = tag("quadratic", an, "q=" + p[1].get<std::string>()) + "/r=1,s=1,p=1,q=1";
    guarded(row, full, [&] {
      const Agreement ag =
          wxz_factorization_equivalence(a, e.left().require_algebra("left"), x_from_psi(e), k.one(), k.one(), k.one(), k.one());
      expect_agreement(row, full, ag.first, ag.second);
      expect_verdict(row, full + "/factorization", ag.second);
    });
  }
  return row;
}

Report row_type2(const RowContext &c) {
  Report row("type II systems");
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    if (!a.is_commutative())
      continue;
    for (const auto &[l1, l2] : scalar_pairs(c, "lambdas"))
      expect_verdict(row, tag("type2_np2", name, "lambda=" + l1.text + ",lambda2=" + l2.text),
                     check_type2(make_type2_np2(a, l1.value, l2.value)));
  }
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    if (a.is_commutative())
      continue;
    try {
      make_type2_np2(a, a.field().one(), a.field().one());
      row.expect(tag("type2_np2", name) + "/commutativity-enforced", false, "accepted");
    } catch (const StructureError &) {
      row.expect(tag("type2_np2", name) + "/commutativity-enforced", true, "rejected");
    }
  }
  return row;
}

Report row_type1(const RowContext &c) {
  Report row("type I from type II");
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    const bool nc = !a.is_commutative();
    for (const auto &[l1, l2] : scalar_pairs(c, "lambdas"))
      expect_verdict(row,
                     tag("type1", name, "lambda=" + l1.text + ",lambda2=" + l2.text + (nc ? ",noncommutative" : "")),
                     check_type1_from_type2(make_type2_np2(a, l1.value, l2.value, nc)));
  }
  return row;
}

Report row_type2_from_semi(const RowContext &c) {
  Report row("type II from a semi-entwining");
  int instances = 0;
  int skipped = 0;
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    const LinearMap t = twist(a.space(), a.space(), a.field());
    for (const auto &[id, e] : semi_instances(c, a, name)) {
      const LinearMap flipped = t * e.psi() * t;
      if (!check_semi_entwining(e).passed() || !check_semi_entwining(e.with_psi(flipped)).passed()) {
        ++skipped;
        continue;
      }
      for (const auto &[r, s] : scalar_pairs(c, "rs")) {
        ++instances;
        expect_verdict(row, id + "/r=" + r.text + ",s=" + s.text,
                       check_type2(make_type2_from_semi(a, e.psi(), flipped, r.value, s.value, r.value, s.value)));
      }
    }
  }
  row.expect("hypothesis-instances", instances > 0,
             std::to_string(instances) + " checked, " + std::to_string(skipped) + " without a semi flip");
  return row;
}

Report row_opposite(const RowContext &c) {
  Report row("flipped semi-entwining iff factorization over the opposite");
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    for (const auto &[id, e] : semi_instances(c, a, name))
      guarded(row, id, [&] {
        const Agreement ag = opposite_factorization_equivalence(a, e.psi());
        expect_agreement(row, id, ag.first, ag.second);
      });
  }
  for (const auto &p : param(c, "quadratic")) {
    const std::string an = p[0].get<std::string>();
    const Algebra a = algebra_named(c.registry, an);
    const EntwiningData e = make_quadratic_factorization(a, c.registry.field().parse_scalar(p[1].get<std::string>()));
    const std::string id = tag("quadratic", an, "q=" + p[1].get<std::string>());
    guarded(row, id, [&] {
      const Agreement ag = opposite_factorization_equivalence(a, e.psi());
      expect_agreement(row, id, ag.first, ag.second);
      expect_verdict(row, id + "/factorization", ag.second);
    });
  }
  return row;
}

Report row_quadratic(const RowContext &c) {
  Report row("quadratic factorization table");
  const Field &k = c.registry.field();
  for (const auto &p : param(c, "table")) {
    const std::string an = p[0].get<std::string>();
    const Algebra a = algebra_named(c.registry, an);
    const std::string qt = p[1].get<std::string>();
    const Scalar q = k.parse_scalar(qt);
    const EntwiningData e = make_quadratic_factorization(a, q);
    const std::string id = tag("quadratic", an, "q=" + qt);
    expect_verdict(row, id + "/factorization", check_algebra_factorization(e));
    // Stated images, entrywise: 1(x)1 -> 1(x)1, 1(x)x -> x(x)1, x(x)1 -> 1(x)x, x(x)x -> q 1(x)1 - x(x)x.
    const std::vector<std::vector<long long>> images{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}};
    Report table("table");
    for (std::size_t col = 0; col < 4; ++col) {
      Vector want(4, k.zero());
      for (std::size_t r = 0; r < 4; ++r)
        want[r] = k.from_int(images[col][r]);
      if (col == 3)
        want[0] = q;
      LinearMap diff(Space::ground(), e.psi().codomain(), k);
      for (std::size_t r = 0; r < 4; ++r)
        diff.at(r, 0) = e.psi().at(r, col) - want[r];
      table.expect_zero("image[" + e.psi().domain().label(col) + "]", diff);
    }
    expect_verdict(row, id + "/table", table);
    // x^2 = p, read from the structure constants.
    const Scalar pp = a.mult().at(0, 3);
    Report same("psi_A");
    same.expect_equal("equal", e.psi(), make_psi_A(a).reshaped(e.psi().domain(), e.psi().codomain()));
    expect_verdict(row, id + "/equals-psi_A", same, q == k.from_int(2) * pp);
  }
  const EntwiningData stored = c.registry.entwining(text(c, "registry_table"));
  const Algebra a1 = stored.right().require_algebra("right");
  Report eq("registry-table");
  eq.expect_equal("entries", stored.psi(), make_quadratic_factorization(a1, k.from_int(2)).psi());
  expect_verdict(row, "registry-table/entries", eq);
  return row;
}

Report row_measured(const RowContext &c) {
  Report row("measured commutator");
  const Field &k = c.registry.field();
  for (const auto &name : strings(c, "algebras")) {
    const Algebra a = algebra_named(c.registry, name);
    const MeasuredModule mm = MeasuredModule::semi_module(regular_module(a), a.space(), a.mult());
    std::vector<std::pair<std::string, Vector>> zs;
    for (std::size_t i = 0; i < a.dim(); ++i)
      zs.emplace_back(a.space().label(i), basis_vector(a.space(), i, k));
    zs.emplace_back("ones", Vector(a.dim(), k.one()));
    for (const auto &q : scalars(c, "q")) {
      const EntwiningData e = make_gamma_q(a, q.value);
      for (const auto &[zn, z] : zs) {
        const std::string id = tag("gamma_q", name, "q=" + q.text + ",z=" + zn);
        guarded(row, id, [&] { expect_verdict(row, id, measured_commutator_check(e, mm, z)); });
      }
    }
  }
  return row;
}

// ---- criterion 10: field independence ---------------------------------------

Report row_field_independence(const RowContext &c);

const std::vector<RowSpec> rows_table = {
    {"c1", 1, {"semi", "examples"}, "semi-entwining examples and Yang-Baxter operators", row_semi_examples},
    {"c2", 2, {"factorization", "iff"}, "twisted product is an algebra iff factorization", row_factorization_iff},
    {"c3", 3, {"biproduct"}, "B (+) A algebra, comodule and integral coaction", row_biproduct},
    {"c4", 4, {"cosemi", "iff", "duality"}, "twisted coproduct iff cofactorization; duals", row_cosemi},
    {"c5", 5, {"modules"}, "entwined module variants and A (x) B reassembly", row_entwined_modules},
    {"c6", 6, {"intertwining"}, "psi intertwines the two module structures", row_intertwining},
    {"c7", 7, {"braided"}, "psi^A braided, involutive; morphism and derivation", row_braided},
    {"c8", 8, {"tambara"}, "Tambara and co-Tambara correspondences", row_tambara},
    {"c9-commutator", 9, {"yb-systems"}, "[W,W,W] = 0 for R_rs", row_commutator},
    {"c9-semi-system", 9, {"yb-systems"}, "semi system iff semi-entwining", row_semi_system},
    {"c9-wxz", 9, {"yb-systems"}, "WXZ system iff factorization", row_wxz},
    {"c9-type2", 9, {"yb-systems", "type2"}, "type II systems from a commutative algebra", row_type2},
    {"c9-type1", 9, {"yb-systems", "type2"}, "type I systems from type II data", row_type1},
    {"c9-type2-from-semi", 9, {"yb-systems", "type2"}, "type II systems from a semi-entwining and its flip",
     row_type2_from_semi},
    {"c9-opposite", 9, {"yb-systems"}, "flipped semi-entwining iff factorization over A^op", row_opposite},
    {"c9-quadratic", 9, {"yb-systems"}, "quadratic factorization table", row_quadratic},
    {"c9-measured", 9, {"yb-systems"}, "measured commutator vanishes", row_measured},
    {"c10", 10, {"fields"}, "identical verdicts over the rationals and a prime field", row_field_independence},
};

Report run_row(const RowSpec &spec, const StructureFile &reg, const Grid &grid, const std::filesystem::path &dir,
               unsigned jobs) {
  const RowContext ctx{reg, grid.params(spec.id), grid, dir, jobs};
  return spec.run(ctx);
}

Report row_field_independence(const RowContext &c) {
  Report row("field independence");
  std::vector<Field> fields;
  for (const auto &spec_text : strings(c, "fields")) {
    try {
      fields.push_back(Field::parse(spec_text));
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
  }
  std::vector<StructureFile> registries;
  for (const auto &f : fields)
    registries.push_back(StructureFile::load_directory(c.registry_dir, f));
  std::vector<const RowSpec *> inner;
  for (const auto &spec : suite_rows())
    if (spec.criterion < 10)
      inner.push_back(&spec);
  std::vector<Report> flat(fields.size() * inner.size());
  parallel_for(flat.size(), c.jobs, [&](std::size_t i) {
    flat[i] = run_row(*inner[i % inner.size()], registries[i / inner.size()], c.grid, c.registry_dir, 1);
  });
  std::vector<std::pair<std::string, std::vector<Report>>> runs;
  for (std::size_t f = 0; f < fields.size(); ++f)
    runs.emplace_back(fields[f].name(), std::vector<Report>(flat.begin() + f * inner.size(),
                                                            flat.begin() + (f + 1) * inner.size()));
  if (runs.size() < 2)
    throw InputError("field independence needs at least two fields");
  const auto &[base_name, base] = runs.front();
  for (std::size_t i = 1; i < runs.size(); ++i) {
    const auto &[other_name, other] = runs[i];
    std::size_t index = 0;
    for (const auto &spec : suite_rows()) {
      if (spec.criterion >= 10)
        continue;
      const Report &x = base[index];
      const Report &y = other[index];
      ++index;
      std::string first_diff;
      bool same = x.checks().size() == y.checks().size();
      for (std::size_t k = 0; same && k < x.checks().size(); ++k) {
        const CheckResult &a = x.checks()[k];
        const CheckResult &b = y.checks()[k];
        if (a.name != b.name || a.passed != b.passed || a.note != b.note) {
          same = false;
          first_diff = a.name + ": " + a.note + " vs " + b.note;
        }
      }
      if (same)
        first_diff = std::to_string(x.checks().size()) + " verdicts";
      else if (first_diff.empty())
        first_diff = "different number of verdicts";
      row.expect(spec.id + "/" + base_name + "=" + other_name, same, first_diff);
    }
  }
  return row;
}

} // namespace

// ---- Grid -------------------------------------------------------------------

Grid Grid::parse(const std::string &text) {
  Grid g;
  try {
    g.doc_ = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InputError(std::string("invalid grid JSON: ") + e.what());
  }
  if (!g.doc_.is_object() || !g.doc_.contains("format") || g.doc_.at("format") != 1)
    throw InputError("a grid is an object with \"format\": 1");
  for (const char *key : {"rows", "tags"})
    if (g.doc_.contains(key)) {
      const Json &list = g.doc_.at(key);
      if (!list.is_array() || !std::all_of(list.begin(), list.end(), [](const Json &x) { return x.is_string(); }))
        throw InputError(std::string("grid '") + key + "' is an array of strings");
    }
  if (g.doc_.contains("rows"))
    for (const auto &id : g.doc_.at("rows")) {
      const auto &all = suite_rows();
      if (std::none_of(all.begin(), all.end(), [&](const RowSpec &s) { return s.id == id.get<std::string>(); }))
        throw InputError("grid names unknown row '" + id.get<std::string>() + "'");
    }
  if (!g.doc_.contains("params") || !g.doc_.at("params").is_object())
    throw InputError("a grid needs a \"params\" object");
  return g;
}

Grid Grid::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read grid " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool Grid::selects(const std::string &row_id, const std::vector<std::string> &row_tags) const {
  if (doc_.contains("rows")) {
    const Json &rows = doc_.at("rows");
    if (std::find(rows.begin(), rows.end(), row_id) == rows.end())
      return false;
  }
  if (doc_.contains("tags")) {
    const Json &tags = doc_.at("tags");
    return std::any_of(row_tags.begin(), row_tags.end(),
                       [&](const std::string &t) { return std::find(tags.begin(), tags.end(), t) != tags.end(); });
  }
  return true;
}

const Json &Grid::params(const std::string &row_id) const {
  const Json &p = doc_.at("params");
  if (!p.contains(row_id))
    throw InputError("grid has no parameters for row " + row_id);
  return p.at(row_id);
}

const std::vector<RowSpec> &suite_rows() { return rows_table; }

// ---- running ----------------------------------------------------------------

bool SuiteResult::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowResult &r) { return r.report.passed(); });
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  std::size_t rows_ok = 0;
  std::size_t checks = 0;
  std::size_t checks_failed = 0;
  os << "suite over " << field.name() << "\n";
  for (const auto &r : rows) {
    const std::size_t n = r.report.checks().size();
    const auto failed = r.report.failed_names();
    checks += n;
    checks_failed += failed.size();
    rows_ok += failed.empty();
    os << (failed.empty() ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title << " (" << n - failed.size() << "/" << n
       << ")\n";
    for (const auto &c : r.report.checks())
      if (!c.passed)
        os << "    failed: " << c.name << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
  }
  os << "rows: " << rows_ok << " passed, " << rows.size() - rows_ok << " failed; checks: " << checks - checks_failed
     << " passed, " << checks_failed << " failed\n";
  return os.str();
}

Json SuiteResult::to_json() const {
  Json out{{"field", field.name()}, {"passed", passed()}};
  Json rs = Json::array();
  for (const auto &r : rows) {
    Json j = report_to_json(r.report);
    j["id"] = r.id;
    j["criterion"] = r.criterion;
    j["title"] = r.title;
    rs.push_back(std::move(j));
  }
  out["rows"] = std::move(rs);
  return out;
}

SuiteResult run_suite(const Grid &grid, const std::filesystem::path &registry_dir, const Field &field, unsigned jobs) {
  const StructureFile reg = StructureFile::load_directory(registry_dir, field);
  reg.validate();
  std::vector<const RowSpec *> selected;
  for (const auto &spec : suite_rows())
    if (grid.selects(spec.id, spec.tags))
      selected.push_back(&spec);
  // Parameters are resolved up front so a malformed grid fails before any work.
  for (const RowSpec *s : selected)
    (void)grid.params(s->id);

  std::vector<Report> reports(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  parallel_for(selected.size(), jobs, [&](std::size_t i) {
    try {
      reports[i] = run_row(*selected[i], reg, grid, registry_dir, jobs);
    } catch (const InputError &) {
      errors[i] = std::current_exception();
    } catch (const std::exception &e) {
      Report r(selected[i]->title);
      r.expect("unexpected-error", false, e.what());
      reports[i] = r;
    }
  });
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  SuiteResult out{field, {}};
  for (std::size_t i = 0; i < selected.size(); ++i)
    out.rows.push_back({selected[i]->id, selected[i]->criterion, selected[i]->title, reports[i]});
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char *env = std::getenv("SEMIENT_DATA_DIR"))
    return env;
  return SEMIENT_DATA_DIR;
}

} // namespace semient
