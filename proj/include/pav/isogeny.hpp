#pragma once

#include "pav/report.hpp"
#include "pav/torsion.hpp"

namespace pav {

// Ambient-linear map x -> x * matrix carrying the source lattice into the
// target lattice with finite index; degree = that index.
struct Isogeny {
  PolarizedLattice source, target;
  QMat matrix;
  Int degree;
};

// Validates the mapping and computes the degree. Throws NotFiniteIndex if the
// matrix is singular or does not carry source into target.
Isogeny make_isogeny(const PolarizedLattice& source, const PolarizedLattice& target,
                     const QMat& matrix);

Isogeny identity_isogeny(const PolarizedLattice& p);

// x -> m*x on P; degree m^{2g}.
Isogeny multiplication_isogeny(const PolarizedLattice& p, const Int& m);

// First f, then g; requires pol_equal(f.target, g.source).
Isogeny compose(const Isogeny& f, const Isogeny& g);

bool isogeny_equal(const Isogeny& f, const Isogeny& g);

// ker f = f^{-1}(Lambda_target)/Lambda_source; order = degree.
FiniteSubgroup isogeny_kernel(const Isogeny& f);

struct QuotientResult {
  PolarizedLattice quotient;
  Isogeny projection;  // identity on the ambient, kernel S
};

// Lambda' = Lambda + lifts of S; the descending form is E_Q (kernel context)
// or m*E_Q (torsion context; only the m-scaled form stays integral there).
// Throws NotIsotropic if S is not totally isotropic for the context pairing.
QuotientResult quotient_by_subgroup(const PolarizedLattice& p, const FiniteSubgroup& s,
                                    const PairContext& ctx);

// Source lattice carrying E'(x, y) = E_target(xM, yM); integral for isogenies.
PolarizedLattice pullback_polarization(const Isogeny& f);

// A^dual = (Lambda(E), (d1*dg) * E_Q); type is the reversed quotient chain.
PolarizedLattice dual_polarized(const PolarizedLattice& p);

// Identity-on-ambient projection P -> dual_polarized(P); degree (prod di)^2,
// kernel K(L).
Isogeny lambda_isogeny(const PolarizedLattice& p);

// Adjoint N = G_target * M^T * G_source^{-1} between the duals, direction
// reversed; deg(f^dual) = deg(f). For identity-on-ambient maps with
// G_target = c * G_source this is the scaling c * I.
Isogeny dual_isogeny(const Isogeny& f);

// The scaling x -> (d1*dg) * x from dual(dual(P)) onto P; a degree-1 polarized
// isomorphism (pullback of P's form is the double-dual form).
Isogeny double_dual_identification(const PolarizedLattice& p);

// ---- verifiers for the quotient/dual identities --------------------------

// A = (X, 2E)/H for principal X and isotropic H <= X_2; checks
// K(L_A) = image of H^perp in A (= H^perp/H) plus the order bookkeeping.
VerifyReport verify_lemma_ker(const PolarizedLattice& x, const FiniteSubgroup& h);

// dual_polarized(A) vs the quotient-by-complement construction
// (Lambda + lifts(H^perp) carrying 4*E_Q), compared as (lattice, form) pairs.
VerifyReport verify_dual_quotient_identity(const PolarizedLattice& x, const FiniteSubgroup& h);

// The three exact matrix identities:
//   (i)   f^dual o lambda_{L_A} o f        = 2 * lambda_Theta
//   (ii)  f o lambda_Theta^{-1} o f^dual   = lambda_{L_{A^dual}}  (into A via
//         the double-dual identification)
//   (iii) lambda^dual o lambda_{L_{A^dual}} o lambda = 2 * lambda_{L_A}
VerifyReport verify_pullback_lemmas(const PolarizedLattice& x, const FiniteSubgroup& h);

// Degrees of the composite f_C^dual o lambda_{L_A'} o f_D across the two
// sides: the D-side quotient kernel is H_D^perp, and A' is the D-side
// quotient-by-complement construction carrying 4*E_Q.
struct DegreeLedger {
  Int deg_f_d, deg_lambda, deg_f_c_dual, composite;
  PolType type_c, type_d;
  std::optional<Int> obstruction_m;  // m with m^{2g} = composite, if any
};
DegreeLedger degree_ledger(const PolarizedLattice& x_c, const FiniteSubgroup& h_c,
                           const PolarizedLattice& x_d, const FiniteSubgroup& h_d);
VerifyReport degree_ledger_report(const PolarizedLattice& x_c, const FiniteSubgroup& h_c,
                                  const PolarizedLattice& x_d, const FiniteSubgroup& h_d);

// m with m^{2g} = deg, if one exists.
std::optional<Int> multiplication_degree_obstruction(const Int& deg, int g);

}  // namespace pav
