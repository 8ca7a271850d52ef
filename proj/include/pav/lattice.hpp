#pragma once

#include <string>
#include <vector>

#include "pav/matrix.hpp"

namespace pav {

// Full-rank lattice in Q^n. The stored basis is the canonical one: the rational
// row Hermite form, unique per lattice, so equality is matrix equality.
class Lattice {
 public:
  explicit Lattice(const QMat& basis);  // rows must be independent

  int n() const { return basis_.rows(); }
  const QMat& basis() const { return basis_; }
  const QMat& basis_inverse() const { return inv_; }

  bool contains(const QVec& x) const;
  bool contains(const Lattice& other) const;  // other subset of this
  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }

  Lattice sum(const Lattice& other) const;
  Lattice scaled(const Rat& s) const;

  // [super : this]; throws Error("NotSubgroup") if this is not inside super.
  Int index_in(const Lattice& super) const;

 private:
  QMat basis_, inv_;
};

// Divisor chain (d1,...,dg), di | d(i+1), all positive.
using PolType = IVec;

bool is_valid_type(const PolType& t);
std::string type_str(const PolType& t);

// (d1*dg/dg, ..., d1*dg/d1); ascending, again a divisor chain.
PolType dual_type(const PolType& t);

// [[0, D], [-D, 0]] for D = diag(t).
IMat standard_symplectic_form(const PolType& t);

struct FrobeniusResult {
  PolType type;
  IMat u;  // unimodular; u^T * e * u = standard_symplectic_form(type)
};

// Symplectic (Frobenius) normal form of an alternating nondegenerate integer
// matrix. Pivot rule: minimize |e(i,j)| over i < j, ties lexicographic.
// Deterministic. Throws OddDimension / DegenerateForm.
FrobeniusResult frobenius_normal_form(const IMat& e);

// Polarized abelian variety at the lattice level: rows of basis span Lambda
// inside the fixed ambient Q^{2g}; form is the alternating integer matrix of E
// in that basis. Immutable; derived data is computed at construction.
class PolarizedLattice {
 public:
  static PolarizedLattice make(const QMat& basis, const IMat& form);

  int g() const { return g_; }
  int n() const { return 2 * g_; }
  const QMat& basis() const { return basis_; }
  const IMat& form() const { return form_; }
  const QMat& basis_inverse() const { return basis_inv_; }
  const QMat& ambient_form() const { return ambient_form_; }  // B^{-1} E B^{-T}
  const PolType& type() const { return type_; }
  const IMat& frobenius_u() const { return frob_u_; }

  Lattice lattice() const { return Lattice(basis_); }

  // E_Q(x, y) for x, y in lattice coordinates.
  Rat form_q(const QVec& x, const QVec& y) const;

  Int degree() const;  // det E = (prod di)^2

 private:
  PolarizedLattice() = default;
  int g_ = 0;
  QMat basis_, basis_inv_, ambient_form_;
  IMat form_, frob_u_;
  PolType type_;
};

// Invariant violations as human-readable strings; empty means valid.
std::vector<std::string> validate(const QMat& basis, const IMat& form);

// Equality as polarized sublattices of the shared ambient: same lattice and
// same rational ambient form.
bool pol_equal(const PolarizedLattice& a, const PolarizedLattice& b);

PolarizedLattice standard_principal(int g);
PolarizedLattice standard_polarized(const PolType& t);  // basis I, form J_D

// Same lattice, form m*E.
PolarizedLattice rescale_form(const PolarizedLattice& p, const Int& m);

// Standard form of the requested type conjugated by a seeded random unimodular
// matrix; the result has exactly that type.
PolarizedLattice random_polarized(int g, const PolType& t, std::uint64_t seed);

}  // namespace pav
