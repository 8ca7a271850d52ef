#include "pav/isogeny.hpp"

#include <utility>

#include "pav/json_base.hpp"

namespace pav {

namespace {

QMat rational_identity(int n, const Rat& c = Rat(1)) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Int type_scale(const PolType& t) { return t.front() * t.back(); }

// Shared setup for the quotient-side verifications: X principal, H a totally
// isotropic subgroup of X_2 for the 2-torsion pairing.
struct QuotientSetup {
  PolarizedLattice x2;      // (Lambda, 2E)
  PolarizedLattice a;       // quotient A = (X, 2E)/H
  Isogeny f;                // X -> A, identity on the ambient
  FiniteSubgroup h_perp;    // H^perp inside X_2, owner X
};

QuotientSetup quotient_setup(const PolarizedLattice& x, const FiniteSubgroup& h,
                             const char* where) {
  for (const Int& d : x.type())
    if (d != 1) throw Error("UsageError", "principal polarized lattice expected", where);
  if (!pol_equal(h.owner(), x)) throw Error("OwnerMismatch", "subgroup does not live on X", where);
  PairContext ctx2 = PairContext::torsion(2);
  if (!is_totally_isotropic(x, h, ctx2))
    throw Error("NotIsotropic", "H is not e_2-isotropic", where);

  QuotientSetup s{rescale_form(x, 2), x, identity_isogeny(x),
                  orthogonal_complement(x, h, ctx2)};
  FiniteSubgroup h2(s.x2, h.lift());
  QuotientResult q = quotient_by_subgroup(s.x2, h2, PairContext::kernel());
  s.a = q.quotient;
  s.f = make_isogeny(x, s.a, rational_identity(x.n()));
  return s;
}

// Inverse of a degree-1 isogeny.
Isogeny invert_isomorphism(const Isogeny& f) {
  if (f.degree != 1) throw Error("Internal", "inverse of a non-isomorphism");
  return make_isogeny(f.target, f.source, inverse(f.matrix));
}

nlohmann::json isogeny_witness(const Isogeny& f) {
  return {{"matrix", json_qmat(f.matrix)}, {"degree", json_int(f.degree)}};
}

}  // namespace

Isogeny make_isogeny(const PolarizedLattice& source, const PolarizedLattice& target,
                     const QMat& matrix) {
  if (matrix.rows() != source.n() || matrix.cols() != target.n())
    throw Error("NotFiniteIndex", "matrix shape does not map source ambient to target ambient",
                "make_isogeny");
  if (source.n() != target.n() || det(matrix) == 0)
    throw Error("NotFiniteIndex", "matrix is not invertible", "make_isogeny");
  QMat carry = source.basis() * matrix * target.basis_inverse();
  auto ic = to_integral(carry);
  if (!ic)
    throw Error("NotFiniteIndex", "image of the source lattice is not inside the target lattice",
                "make_isogeny");
  Int d = det(*ic);
  if (d < 0) d = -d;
  return Isogeny{source, target, matrix, d};
}

Isogeny identity_isogeny(const PolarizedLattice& p) {
  return make_isogeny(p, p, rational_identity(p.n()));
}

Isogeny multiplication_isogeny(const PolarizedLattice& p, const Int& m) {
  return make_isogeny(p, p, rational_identity(p.n(), Rat(m)));
}

Isogeny compose(const Isogeny& f, const Isogeny& g) {
  if (!pol_equal(f.target, g.source))
    throw Error("CompositionMismatch", "target of the first map differs from source of the second",
                "compose");
  return make_isogeny(f.source, g.target, f.matrix * g.matrix);
}

bool isogeny_equal(const Isogeny& f, const Isogeny& g) {
  return pol_equal(f.source, g.source) && pol_equal(f.target, g.target) && f.matrix == g.matrix;
}

FiniteSubgroup isogeny_kernel(const Isogeny& f) {
  QMat lift = f.target.basis() * inverse(f.matrix) * f.source.basis_inverse();
  FiniteSubgroup k(f.source, Lattice(lift));
  if (k.order() != f.degree) throw Error("Internal", "kernel order differs from degree");
  return k;
}

QuotientResult quotient_by_subgroup(const PolarizedLattice& p, const FiniteSubgroup& s,
                                    const PairContext& ctx) {
  if (!pol_equal(s.owner(), p))
    throw Error("OwnerMismatch", "subgroup does not live on this lattice", "quotient_by_subgroup");
  if (!is_totally_isotropic(p, s, ctx))
    throw Error("NotIsotropic", "subgroup is not totally isotropic for the context pairing",
                "quotient_by_subgroup");
  Rat c = ctx.kernel_ctx ? Rat(1) : Rat(ctx.m);
  Lattice lq(s.lift().basis() * p.basis());
  const QMat& bq = lq.basis();
  auto eq = to_integral(bq * p.ambient_form().scaled(c) * bq.transposed());
  if (!eq) throw Error("Internal", "descended form is not integral");
  PolarizedLattice quot = PolarizedLattice::make(bq, *eq);
  Isogeny proj = make_isogeny(p, quot, rational_identity(p.n()));
  if (proj.degree != s.order()) throw Error("Internal", "projection degree differs from |S|");
  return QuotientResult{std::move(quot), std::move(proj)};
}

PolarizedLattice pullback_polarization(const Isogeny& f) {
  const QMat& b = f.source.basis();
  QMat e = b * f.matrix * f.target.ambient_form() * f.matrix.transposed() * b.transposed();
  auto ei = to_integral(e);
  if (!ei) throw Error("Internal", "pulled-back form is not integral on the source lattice");
  return PolarizedLattice::make(b, *ei);
}

PolarizedLattice dual_polarized(const PolarizedLattice& p) {
  const QMat& g = p.ambient_form();
  // x belongs to Lambda(E) iff x * (G * B^T) is integral; rows of the inverse
  // give a basis.
  Lattice dl(inverse(g * p.basis().transposed()));
  const QMat& bd = dl.basis();
  Rat s = Rat(type_scale(p.type()));
  auto ed = to_integral(bd * g.scaled(s) * bd.transposed());
  if (!ed) throw Error("Internal", "dual form is not integral");
  PolarizedLattice q = PolarizedLattice::make(bd, *ed);
  if (q.type() != dual_type(p.type())) throw Error("Internal", "dual type mismatch");
  return q;
}

Isogeny lambda_isogeny(const PolarizedLattice& p) {
  Isogeny f = make_isogeny(p, dual_polarized(p), rational_identity(p.n()));
  if (f.degree != p.degree()) throw Error("Internal", "lambda degree differs from det E");
  return f;
}

Isogeny dual_isogeny(const Isogeny& f) {
  // Adjoint for the ambient Riemann forms: <x N, y>_{G_s} = <x, y M>_{G_t}.
  // It always carries Lambda_t(E_t) into Lambda_s(E_s), and deg f^dual = deg f.
  const QMat& gs = f.source.ambient_form();
  const QMat& gt = f.target.ambient_form();
  QMat n = gt * f.matrix.transposed() * inverse(gs);
  Isogeny d = make_isogeny(dual_polarized(f.target), dual_polarized(f.source), n);
  if (d.degree != f.degree) throw Error("Internal", "dual degree differs from degree");
  return d;
}

Isogeny double_dual_identification(const PolarizedLattice& p) {
  PolarizedLattice dd = dual_polarized(dual_polarized(p));
  Rat s = Rat(type_scale(p.type()));
  Isogeny psi = make_isogeny(dd, p, rational_identity(p.n(), s));
  if (psi.degree != 1) throw Error("Internal", "double-dual identification is not degree 1");
  if (!pol_equal(pullback_polarization(psi), dd))
    throw Error("Internal", "double-dual identification is not polarized");
  return psi;
}

VerifyReport verify_lemma_ker(const PolarizedLattice& x, const FiniteSubgroup& h) {
  QuotientSetup s = quotient_setup(x, h, "verify_lemma_ker");
  FiniteSubgroup k = kernel_subgroup(s.a);
  FiniteSubgroup image = transport_subgroup(s.h_perp, s.a, rational_identity(x.n()));

  VerifyReport r{"lemma-ker", {}};
  bool eq = subgroup_equal(k, image);
  r.checks.push_back(
      {"K(L_A) equals the image of H^perp in A",
       eq,
       {{"order_K", json_int(k.order())},
        {"structure_K", json_ivec(k.structure())},
        {"order_image", json_int(image.order())},
        {"structure_image", json_ivec(image.structure())}}});

  Int fourg = int_pow(Int(2), 2 * static_cast<unsigned long>(x.g()));
  bool book = k.order() * h.order() * h.order() == fourg &&
              s.h_perp.order() * h.order() == fourg;
  r.checks.push_back({"order bookkeeping |K(L_A)| * |H|^2 = |H^perp| * |H| = 2^(2g)",
                      book,
                      {{"order_H", json_int(h.order())},
                       {"order_H_perp", json_int(s.h_perp.order())},
                       {"order_K", json_int(k.order())}}});

  PolType expected;
  Int two_k = h.order();
  for (int i = 0; i < x.g(); ++i) {
    bool ones = two_k > 1;
    expected.push_back(ones ? Int(1) : Int(2));
    if (ones) two_k /= 2;
  }
  // expected = (1^k, 2^(g-k)) for |H| = 2^k
  r.checks.push_back({"type of A is (1^k, 2^(g-k)) with 2^k = |H|",
                      s.a.type() == expected,
                      {{"type_A", json_ivec(s.a.type())}, {"expected", json_ivec(expected)}}});
  return r;
}

VerifyReport verify_dual_quotient_identity(const PolarizedLattice& x, const FiniteSubgroup& h) {
  QuotientSetup s = quotient_setup(x, h, "verify_dual_quotient_identity");
  PolarizedLattice dual = dual_polarized(s.a);

  Lattice direct_lat(s.h_perp.lift().basis() * x.basis());
  const QMat& bd = direct_lat.basis();
  auto ed = to_integral(bd * x.ambient_form().scaled(4) * bd.transposed());
  if (!ed) throw Error("Internal", "4E_Q is not integral on Lambda + lifts(H^perp)");
  PolarizedLattice direct = PolarizedLattice::make(bd, *ed);

  VerifyReport r{"dual-quotient", {}};
  bool lat_eq = dual.lattice() == direct.lattice();
  r.checks.push_back({"Lambda_(A^dual) = Lambda + lifts(H^perp)",
                      lat_eq,
                      {{"basis_dual", json_qmat(dual.lattice().basis())},
                       {"basis_direct", json_qmat(bd)}}});
  bool form_eq = dual.ambient_form() == direct.ambient_form();
  r.checks.push_back({"dual form equals 4 * E_Q",
                      form_eq,
                      {{"scale_dual", json_int(2 * type_scale(s.a.type()))},
                       {"type_A", json_ivec(s.a.type())}}});
  r.checks.push_back({"polarized equality of A^dual and the direct construction",
                      pol_equal(dual, direct),
                      {{"type_dual", json_ivec(dual.type())},
                       {"type_direct", json_ivec(direct.type())}}});
  return r;
}

VerifyReport verify_pullback_lemmas(const PolarizedLattice& x, const FiniteSubgroup& h) {
  QuotientSetup s = quotient_setup(x, h, "verify_pullback_lemmas");
  const Isogeny& f = s.f;
  Isogeny f_dual = dual_isogeny(f);
  Isogeny lam_a = lambda_isogeny(s.a);
  Isogeny lam_theta = lambda_isogeny(x);
  PolarizedLattice a_dual = dual_polarized(s.a);
  Isogeny lam_a_dual = lambda_isogeny(a_dual);
  Isogeny psi = double_dual_identification(s.a);

  VerifyReport r{"pullback", {}};

  Isogeny lhs1 = compose(compose(f, lam_a), f_dual);
  Isogeny rhs1 = make_isogeny(x, lam_theta.target, lam_theta.matrix.scaled(2));
  r.checks.push_back({"(i) f^dual o lambda_{L_A} o f = 2 * lambda_Theta",
                      isogeny_equal(lhs1, rhs1),
                      {{"lhs", isogeny_witness(lhs1)}, {"rhs", isogeny_witness(rhs1)}}});

  Isogeny lhs2 = compose(compose(f_dual, invert_isomorphism(lam_theta)), f);
  Isogeny rhs2 = compose(lam_a_dual, psi);
  r.checks.push_back({"(ii) f o lambda_Theta^{-1} o f^dual = lambda_{L_{A^dual}}",
                      isogeny_equal(lhs2, rhs2),
                      {{"lhs", isogeny_witness(lhs2)}, {"rhs", isogeny_witness(rhs2)}}});

  Isogeny lhs3 = compose(compose(lam_a, lam_a_dual), dual_isogeny(lam_a));
  Isogeny rhs3 = make_isogeny(s.a, lam_a.target, lam_a.matrix.scaled(2));
  r.checks.push_back({"(iii) lambda^dual o lambda_{L_{A^dual}} o lambda = 2 * lambda_{L_A}",
                      isogeny_equal(lhs3, rhs3),
                      {{"lhs", isogeny_witness(lhs3)}, {"rhs", isogeny_witness(rhs3)}}});
  return r;
}

DegreeLedger degree_ledger(const PolarizedLattice& x_c, const FiniteSubgroup& h_c,
                           const PolarizedLattice& x_d, const FiniteSubgroup& h_d) {
  if (x_c.g() != x_d.g())
    throw Error("GenusMismatch", "the two sides have different genus", "degree_ledger");

  QuotientSetup sc = quotient_setup(x_c, h_c, "degree_ledger");
  Isogeny f_c_dual = dual_isogeny(sc.f);

  QuotientSetup sd = quotient_setup(x_d, h_d, "degree_ledger");
  // D-side quotient by the complement, carrying 4E_Q.
  Lattice lat_d(sd.h_perp.lift().basis() * x_d.basis());
  const QMat& bd = lat_d.basis();
  auto ed = to_integral(bd * x_d.ambient_form().scaled(4) * bd.transposed());
  if (!ed) throw Error("Internal", "4E_Q is not integral on Lambda_D + lifts(H_D^perp)");
  PolarizedLattice a_prime = PolarizedLattice::make(bd, *ed);
  Isogeny f_d = make_isogeny(x_d, a_prime, rational_identity(x_d.n()));

  DegreeLedger ledger;
  ledger.deg_f_d = f_d.degree;
  ledger.deg_lambda = a_prime.degree();
  ledger.deg_f_c_dual = f_c_dual.degree;
  ledger.composite = ledger.deg_f_d * ledger.deg_lambda * ledger.deg_f_c_dual;
  ledger.type_c = sc.a.type();
  ledger.type_d = a_prime.type();
  ledger.obstruction_m = multiplication_degree_obstruction(ledger.composite, x_c.g());
  return ledger;
}

VerifyReport degree_ledger_report(const PolarizedLattice& x_c, const FiniteSubgroup& h_c,
                                  const PolarizedLattice& x_d, const FiniteSubgroup& h_d) {
  DegreeLedger l = degree_ledger(x_c, h_c, x_d, h_d);
  Int fourg = int_pow(Int(2), 2 * static_cast<unsigned long>(x_c.g()));

  VerifyReport r{"degree-ledger", {}};
  r.checks.push_back({"deg(f_D) = |H_D^perp| = 2^(2g) / |H_D|",
                      l.deg_f_d * h_d.order() == fourg,
                      {{"deg_f_d", json_int(l.deg_f_d)}, {"order_H_D", json_int(h_d.order())}}});
  r.checks.push_back({"deg(f_C^dual) = deg(f_C) = |H_C|",
                      l.deg_f_c_dual == h_c.order(),
                      {{"deg_f_c_dual", json_int(l.deg_f_c_dual)},
                       {"order_H_C", json_int(h_c.order())}}});
  nlohmann::json m = l.obstruction_m ? json_int(*l.obstruction_m) : nlohmann::json(nullptr);
  r.checks.push_back({"composite = deg(f_D) * deg(lambda) * deg(f_C^dual)",
                      l.composite == l.deg_f_d * l.deg_lambda * l.deg_f_c_dual,
                      {{"deg_f_d", json_int(l.deg_f_d)},
                       {"deg_lambda", json_int(l.deg_lambda)},
                       {"deg_f_c_dual", json_int(l.deg_f_c_dual)},
                       {"composite", json_int(l.composite)},
                       {"type_c", json_ivec(l.type_c)},
                       {"type_d", json_ivec(l.type_d)},
                       {"obstruction_m", m}}});
  return r;
}

std::optional<Int> multiplication_degree_obstruction(const Int& deg, int g) {
  if (deg < 1 || g < 1)
    throw Error("UsageError", "degree and genus must be positive",
                "multiplication_degree_obstruction");
  return exact_root(deg, 2 * static_cast<unsigned long>(g));
}

}  // namespace pav
