#pragma once

#include "pav/lattice.hpp"

namespace pav {

// Point of V/Lambda in lattice coordinates, each entry reduced to [0, 1).
// The same coordinate vector read in the ambient is the canonical lift.
struct TorsionPoint {
  QVec coords;
  bool operator==(const TorsionPoint&) const = default;
};

TorsionPoint reduce_point(QVec coords);
TorsionPoint point_add(const TorsionPoint& a, const TorsionPoint& b);
bool is_zero_point(const TorsionPoint& p);
bool is_m_torsion(const TorsionPoint& p, const Int& m);

// Value exp(-2*pi*i*q); equals 1 iff q = 0.
struct PairingExponent {
  Rat q;  // in [0, 1)
  bool is_one() const { return q == 0; }
  bool operator==(const PairingExponent&) const = default;
};

// Which pairing a subgroup is measured against: the Riemann form on K(L), or
// the m-scaled pairing on the m-torsion X_m.
struct PairContext {
  bool kernel_ctx;
  Int m;  // meaningful for torsion contexts only
  static PairContext kernel() { return {true, Int(0)}; }
  static PairContext torsion(const Int& m) {
    if (m < 1) throw Error("UsageError", "torsion context needs m >= 1");
    return {false, m};
  }
};

// x in K(L), i.e. E(x, Lambda) integral.
bool in_kernel(const PolarizedLattice& p, const TorsionPoint& x);

// q = (-E_Q(x, y)) mod 1 on K(L). Throws NotInKernel.
PairingExponent riemann_pairing(const PolarizedLattice& p, const TorsionPoint& x,
                                const TorsionPoint& y);

// q = (-m * E_Q(x, y)) mod 1 on X_m. Throws NotTorsion.
PairingExponent torsion_pairing(const PolarizedLattice& p, const Int& m, const TorsionPoint& x,
                                const TorsionPoint& y);

PairingExponent pairing(const PolarizedLattice& p, const TorsionPoint& x, const TorsionPoint& y,
                        const PairContext& ctx);

// Finite subgroup of V/Lambda. Canonically represented by its lift lattice
// (the preimage in V, contains Lambda); generators are the reduced nonzero
// rows of the lift's canonical basis.
class FiniteSubgroup {
 public:
  FiniteSubgroup(PolarizedLattice owner, const Lattice& lift_in_lattice_coords);

  const PolarizedLattice& owner() const { return owner_; }
  const Lattice& lift() const { return lift_; }  // in lattice coordinates
  const std::vector<TorsionPoint>& generators() const { return gens_; }

  Int order() const;
  IVec structure() const;  // invariant factors > 1, ascending
  bool contains(const TorsionPoint& x) const;

  // All elements; throws UsageError if order exceeds the guard.
  std::vector<TorsionPoint> elements(const Int& guard = Int(1) << 22) const;

 private:
  PolarizedLattice owner_;
  Lattice lift_;
  std::vector<TorsionPoint> gens_;
};

FiniteSubgroup make_subgroup(const PolarizedLattice& p, const std::vector<TorsionPoint>& gens);
FiniteSubgroup trivial_subgroup(const PolarizedLattice& p);

// K(L) = Lambda(E)/Lambda; order (prod di)^2, structure (d1..dg, d1..dg).
FiniteSubgroup kernel_subgroup(const PolarizedLattice& p);

// Full m-torsion X_m = (1/m)Lambda / Lambda.
FiniteSubgroup full_torsion(const PolarizedLattice& p, const Int& m);

bool subgroup_equal(const FiniteSubgroup& a, const FiniteSubgroup& b);
FiniteSubgroup subgroup_sum(const FiniteSubgroup& a, const FiniteSubgroup& b);

// Image of S under the ambient-linear map into the target lattice; the map
// must carry the owner's lattice into the target's.
FiniteSubgroup transport_subgroup(const FiniteSubgroup& s, const PolarizedLattice& target,
                                  const QMat& ambient_map);

// True iff the context pairing is trivial on all generator pairs (bilinearity
// extends this to the whole subgroup). Throws ContextMismatch if S is not
// inside the context group.
bool is_totally_isotropic(const PolarizedLattice& p, const FiniteSubgroup& s,
                          const PairContext& ctx);

// {x in context group : pairing with every generator of S is trivial},
// computed by solving z*N = 0 (mod modulus) via Smith normal form.
FiniteSubgroup orthogonal_complement(const PolarizedLattice& p, const FiniteSubgroup& s,
                                     const PairContext& ctx);

// Independent oracle: brute scan of the whole context group.
FiniteSubgroup orthogonal_complement_scan(const PolarizedLattice& p, const FiniteSubgroup& s,
                                          const PairContext& ctx);

}  // namespace pav
