#pragma once

#include "semient/entwine.hpp"

namespace semient {

/// Maps R on V (x) V', S on V (x) V'', T on V' (x) V''.
struct TripleSystem {
  LinearMap r;
  LinearMap s;
  LinearMap t;
};

/// R_12 S_13 T_23 - T_23 S_13 R_12 on V (x) V' (x) V''.
LinearMap yb_commutator(const TripleSystem &t);
LinearMap yb_commutator(const LinearMap &r, const LinearMap &s, const LinearMap &t);

/// braid: phi_12 phi_23 phi_12 = phi_23 phi_12 phi_23; invertible.
Report check_yb_operator(const LinearMap &phi);
/// QYBE for phi o tau and tau o phi, and agreement of both with the braid verdict.
Report check_qybe(const LinearMap &phi);

/// [W,W,W] and [W,X,X].
Report check_semi_yb_system(const LinearMap &w, const LinearMap &x);
/// [W,W,W], [W,X,X], [Z,Z,Z], [X,X,Z].
Report check_wxz(const LinearMap &w, const LinearMap &x, const LinearMap &z);
/// Z = id (x) id on V' (x) V' completing a semi system.
LinearMap wxz_completion(const LinearMap &x);

struct TypeIISystem {
  LinearMap a;
  LinearMap b;
  LinearMap c;
  LinearMap d;
};
/// X+ = tau X tau.
LinearMap plus(const LinearMap &x);
/// The eight commutator equations.
Report check_type2(const TypeIISystem &s);

/// a (x) b |-> s ba (x) 1 + r 1 (x) ba - s b (x) a.
LinearMap make_R_rs(const Algebra &a, const Scalar &r, const Scalar &s);
/// psi^A(a (x) b) = 1 (x) ab + ab (x) 1 - a (x) b.
LinearMap make_psi_A(const Algebra &a);
/// lambda 1 (x) ab + ab (x) 1 - b (x) a.
LinearMap make_np2_map(const Algebra &a, const Scalar &lambda);

/// A = lambda-map, B = C = 1-map, D = lambda'-map. Throws StructureError on a
/// noncommutative algebra unless `allow_noncommutative`.
TypeIISystem make_type2_np2(const Algebra &a, const Scalar &lambda, const Scalar &lambda2,
                            bool allow_noncommutative = false);
/// W = A, X = B = C, Z = D.
Report check_type1_from_type2(const TypeIISystem &s);

/// A = R_{r,s}, B = psi tau, C = psi' tau, D = R_{p,q}.
TypeIISystem make_type2_from_semi(const Algebra &a, const LinearMap &psi, const LinearMap &psi2, const Scalar &r,
                                  const Scalar &s, const Scalar &p, const Scalar &q);

/// first = semi system (R_{r,s}, X), second = semi-entwining psi = X o tau_{B,A}.
/// Throws PreconditionError unless X(1 (x) b) = 1 (x) b.
Agreement semi_system_equivalence(const Algebra &a, const Carrier &b, const LinearMap &x, const Scalar &r, const Scalar &s);
/// first = WXZ system (R_{r,s}, X, R^B_{p,q}), second = algebra factorization psi.
/// Throws PreconditionError unless X fixes 1 (x) b and a (x) 1.
Agreement wxz_factorization_equivalence(const Algebra &a, const Algebra &b, const LinearMap &x, const Scalar &r,
                                const Scalar &s, const Scalar &p, const Scalar &q);
/// X = psi o tau_{A,B} for a map psi : B (x) A -> A (x) B.
LinearMap x_from_psi(const EntwiningData &e);

/// first = semi-entwining of tau psi tau, second = factorization of psi over (A^op, A).
/// Throws PreconditionError unless psi is a semi-entwining over A.
Agreement opposite_factorization_equivalence(const Algebra &a, const LinearMap &psi);

/// [zeta, eta, X] = 0 on M (x) B (x) A, with X = tau_{A,B} o psi.
/// Throws PreconditionError for z = 0 or a failing semi-entwined module.
Report measured_commutator_check(const EntwiningData &e, const MeasuredModule &m, const Vector &z);

/// On A = K[x]/(x^2 - p) with basis {1, x}: 1(x)1, 1(x)x, x(x)1 map to 1(x)1,
/// x(x)1, 1(x)x and x(x)x |-> q 1(x)1 - x(x)x, as a map A^op (x) A -> A (x) A^op
/// tagged factorization. Throws StructureError unless A is two-dimensional with
/// unit e_0 and x^2 a multiple of 1.
EntwiningData make_quadratic_factorization(const Algebra &a, const Scalar &q);

/// yb-operator, unit-left, unit-right, product-left-leg, product-right-leg.
Report check_braided_algebra(const Algebra &a, const LinearMap &psi);
/// m o psi = m.
Report check_r_commutative(const Algebra &a, const LinearMap &psi);
/// Algebra morphism and (f (x) f) psi = psi' (f (x) f).
Report check_braided_morphism(const LinearMap &f, const Algebra &a, const LinearMap &psi_a, const Algebra &b,
                              const LinearMap &psi_b);

/// A (+) A with (a (+) b)(a' (+) b') = aa' (+) (ab' + ba') and unit 1 (+) 0.
Algebra square_zero_extension(const Algebra &a);
/// f(a) = a (+) delta(a) as a braided morphism (A, psi^A) -> (A (+) A, psi^{A(+)A}).
/// Throws PreconditionError when delta is not a derivation.
Report derivation_morphism_check(const Algebra &a, const LinearMap &delta);

} // namespace semient
