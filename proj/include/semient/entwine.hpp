#pragma once

#include <optional>
#include <string>

#include "semient/structures.hpp"

namespace semient {

enum class EntwiningKind { semi, cosemi, factorization, cofactorization, entwining_ll, entwining_rr };

std::string to_string(EntwiningKind kind);
/// Accepts the names produced by to_string; throws std::invalid_argument.
EntwiningKind parse_entwining_kind(const std::string &text);
/// semi, factorization and entwining-ll have an algebra on the right leg.
bool is_algebra_side_kind(EntwiningKind kind);

/// One leg of an entwining: a space, optionally carrying an algebra and/or a
/// coalgebra on that same space.
struct Carrier {
  Space space;
  std::optional<Algebra> algebra;
  std::optional<Coalgebra> coalgebra;

  static Carrier plain(Space space);
  static Carrier of(const Algebra &a);
  static Carrier of(const Coalgebra &c);
  static Carrier of(const Bialgebra &h);

  const Algebra &require_algebra(const std::string &role) const;
  const Coalgebra &require_coalgebra(const std::string &role) const;
};

/// psi : left (x) right -> right (x) left together with its declared kind.
///
/// For algebra-side kinds left = B and right = A; for coalgebra-side kinds
/// left = D and right = C. The declared kind is a tag; nothing is assumed
/// until one of the checks below has run.
class EntwiningData {
public:
  EntwiningData() = default;
  EntwiningData(Carrier left, Carrier right, const LinearMap &psi, EntwiningKind kind);

  const Carrier &left() const { return left_; }
  const Carrier &right() const { return right_; }
  const LinearMap &psi() const { return psi_; }
  EntwiningKind kind() const { return kind_; }
  const Field &field() const { return psi_.field(); }

  EntwiningData with_psi(const LinearMap &psi) const { return {left_, right_, psi, kind_}; }
  EntwiningData with_kind(EntwiningKind kind) const { return {left_, right_, psi_, kind}; }
  EntwiningData with_left(Carrier left) const { return {std::move(left), right_, psi_, kind_}; }

private:
  Carrier left_;
  Carrier right_;
  LinearMap psi_;
  EntwiningKind kind_ = EntwiningKind::semi;
};

// Axiom checks. Every identity is compiled into a single map equality.

Report check_semi_entwining(const EntwiningData &e);
/// Semi-entwining axioms plus the two axioms on the algebra B.
Report check_algebra_factorization(const EntwiningData &e);
/// Semi-entwining axioms plus the counit/comultiplication axioms on the coalgebra B.
Report check_entwining_ll(const EntwiningData &e);
Report check_cosemi_entwining(const EntwiningData &e);
Report check_coalgebra_factorization(const EntwiningData &e);
/// Cosemi axioms plus the unit/multiplication axioms on the algebra D.
Report check_entwining_rr(const EntwiningData &e);
/// Dispatches on the declared kind.
Report check_declared(const EntwiningData &e);

// Constructions of semi-entwinings.

/// b (x) a |-> 1 (x) ba + q ba (x) 1 - q b (x) a on A (x) A.
EntwiningData make_gamma_q(const Algebra &a, const Scalar &q);
/// b (x) a |-> q (ba - ab) (x) 1 + a (x) b.
EntwiningData make_eta_q(const Algebra &a, const Scalar &q);
/// m (x) a |-> 1 (x) ma for a right A-module M.
EntwiningData make_module_semi(const ModuleAction &m);
/// The flip left (x) right -> right (x) left.
EntwiningData make_twist(Carrier left, Carrier right, EntwiningKind kind);

/// psi_H(b (x) a) = a_(0) (x) b a_(1) for a right H-comodule algebra A and a right
/// H-module B. When `b_algebra` is given and B is a verified H-module algebra,
/// the result is tagged as an algebra factorization. Throws PreconditionError.
EntwiningData make_doi_koppinen(const Bialgebra &h, const Algebra &a, const ComoduleCoaction &coaction,
                                const ModuleAction &b, const std::optional<Algebra> &b_algebra = std::nullopt);

/// Right H-comodule coalgebra: Delta_C and eps_C are H-colinear.
Report check_comodule_coalgebra(const Coalgebra &c, const ComoduleCoaction &coaction, const Bialgebra &h);
/// psi(d (x) c) = c_(0) (x) d c_(1) for a right H-comodule coalgebra C and a
/// right H-module D. Throws PreconditionError.
EntwiningData make_alt_doi_koppinen(const Bialgebra &h, const Coalgebra &c, const ComoduleCoaction &coaction,
                                    const ModuleAction &d);

// Induced structures.

/// Right A-action on A (x) B: (a (x) b) * a' = a a'_alpha (x) b^alpha.
ModuleAction induced_AtensorB_module(const EntwiningData &e);

struct FactorizationProduct {
  Algebra product;
  Report algebra_report;
  Report factorization_report;
  bool verdicts_agree() const { return algebra_report.passed() == factorization_report.passed(); }
};
/// (a (x) b)(a' (x) b') = a a'_alpha (x) b^alpha b' with unit 1 (x) 1, plus both verdicts.
FactorizationProduct factorization_product(const EntwiningData &e);

struct CofactorizationCoproduct {
  Coalgebra coproduct;
  Report coalgebra_report;
  Report cofactorization_report;
  bool verdicts_agree() const { return coalgebra_report.passed() == cofactorization_report.passed(); }
};
/// d (x) c |-> (d_(1) (x) c_(1)^alpha) (x) (d_(2)_alpha (x) c_(2)), plus both verdicts.
CofactorizationCoproduct cofactorization_coproduct(const EntwiningData &e);

/// Dual of a cosemi-entwining in the C-leg: a semi-entwining D (x) C* -> C* (x) D
/// over the convolution algebra. Throws PreconditionError.
EntwiningData dualize_cosemi(const EntwiningData &e);

struct Biproduct {
  Algebra algebra;                          // on B (+) A
  ComoduleCoaction unit_coaction;           // b (+) a |-> b (x) 1 + Delta(a)
  std::optional<ComoduleCoaction> integral_coaction; // b (x) x + Delta(a)
  Report bimodule;
  Report algebra_report;
  Report comodule_report;
  std::optional<Report> integral_comodule_algebra;
  bool passed() const;
};
/// B (+) A algebra and right A-coaction for a semi-entwining over a bialgebra.
/// Throws PreconditionError when psi, H or the integral candidate fail.
Biproduct biproduct_BplusA(const EntwiningData &e, const Bialgebra &h, const std::optional<Vector> &x = std::nullopt);

enum class MeasuredVariant { semi_module, semi_comodule, cosemi_module, cosemi_comodule };
std::string to_string(MeasuredVariant v);
MeasuredVariant parse_measured_variant(const std::string &text);

/// A module or comodule M with an extra (co)measuring by a space V.
///
///   semi_module      right A-module M,   M (x) V -> M
///   semi_comodule    right A-module M,   M -> M (x) V
///   cosemi_module    left C-comodule M,  V (x) M -> M
///   cosemi_comodule  left C-comodule M,  M -> V (x) M
struct MeasuredModule {
  MeasuredVariant variant = MeasuredVariant::semi_module;
  std::optional<ModuleAction> action;
  std::optional<ComoduleCoaction> coaction;
  Space vee;
  LinearMap measuring;

  static MeasuredModule semi_module(ModuleAction m, Space v, const LinearMap &measuring);
  static MeasuredModule semi_comodule(ModuleAction m, Space v, const LinearMap &comeasuring);
  static MeasuredModule cosemi_module(ComoduleCoaction m, Space v, const LinearMap &measuring);
  static MeasuredModule cosemi_comodule(ComoduleCoaction m, Space v, const LinearMap &comeasuring);

  const Space &carrier() const;
};

/// The compatibility identity of the variant. Throws StructureError when the
/// variant does not fit the entwining's kind or shapes.
Report check_entwined_variant(const MeasuredModule &m, const EntwiningData &e);

/// Both directions of the A (x) B-module correspondence for an algebra
/// factorization and a semi-entwined module whose measuring is a B-action.
Report entwined_roundtrip(const EntwiningData &e, const ModuleAction &m, const LinearMap &b_action);
/// A (x) B-module action m (a (x) b) = (ma) <| b.
ModuleAction assemble_AtensorB_action(const EntwiningData &e, const ModuleAction &m, const LinearMap &b_action);

/// psi o rho = rho' o (psi (x) id) for rho = id_B (x) m_A and rho' the induced action.
Report check_intertwining(const EntwiningData &e);

/// Lifted functor - (x) B on right A-modules: (m (x) b) a = m a_alpha (x) b^alpha.
ModuleAction lift_module(const EntwiningData &e, const ModuleAction &m);
/// f (x) id_B is A-linear for every A-linear f : M -> M'.
Report check_lifted_morphism(const EntwiningData &e, const ModuleAction &m, const ModuleAction &m2, const LinearMap &f);
/// Psi(b (x) a) = (1 (x) b) a recovered from a right A-action on A (x) B.
EntwiningData semi_from_lifted(const ModuleAction &on_ab, const Carrier &left, const Algebra &a);

} // namespace semient
