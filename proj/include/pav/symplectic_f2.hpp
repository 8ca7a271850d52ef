#pragma once

#include <cstdint>

#include "pav/torsion.hpp"

namespace pav {

// Vectors of F_2^{2n} are bit-packed words: bit i = coordinate i, n <= 32.
using F2Vec = std::uint64_t;

std::string f2_str(F2Vec v, int dim);
F2Vec f2_parse(const std::string& s, const std::string& loc = "");

// Isotropic plane in canonical form: the two reduced-row-echelon generators,
// a < b in pivot order.
struct PlaneF2 {
  F2Vec a = 0, b = 0;
  bool operator==(const PlaneF2&) const = default;
};

class SymplecticSpaceF2 {
 public:
  // Gram must be symmetric with zero diagonal and nondegenerate over F_2.
  SymplecticSpaceF2(int dim, std::vector<F2Vec> gram_rows);

  int dim() const { return dim_; }

  // <v, w> over F_2: parity of popcount of masked rows.
  int pair(F2Vec v, F2Vec w) const;

  bool is_isotropic_plane(F2Vec v, F2Vec w) const;

  // Every 2-dimensional totally isotropic subspace exactly once, sorted by the
  // concatenated bitstrings of the echelon generators. `jobs` > 1 partitions
  // the scan; the merged result is identical to the serial one.
  std::vector<PlaneF2> enumerate_isotropic_planes(int jobs = 1) const;

  // Independent count: ordered isotropic pairs of independent vectors divided
  // by |GL_2(F_2)| = 6. Separate code path from the enumerator.
  std::uint64_t count_isotropic_planes_oracle() const;

  // Canonical (echelon) basis of {x : <x, v> = 0 for all v in vs}.
  std::vector<F2Vec> perp(const std::vector<F2Vec>& vs) const;

  // perp of an isotropic plane; dimension 2n-2, contains the plane.
  std::vector<F2Vec> coisotropic_complement(const PlaneF2& plane) const;

  PlaneF2 random_isotropic_plane(std::uint64_t seed) const;

 private:
  int dim_;
  std::vector<F2Vec> gram_;
};

// Gram(i,j) = 2*q(b_i/2, b_j/2) mod 2 from the m=2 torsion pairing; throws
// DegeneratePairing when the pairing has a radical (e.g. non-unimodular E).
SymplecticSpaceF2 from_torsion(const PolarizedLattice& p);

// Half-integer lift: F_2 vectors to generators v/2 of a subgroup of X_2.
FiniteSubgroup lift_to_torsion(const PolarizedLattice& p, const std::vector<F2Vec>& vectors,
                               int dim);

// Seeded isotropic subgroup of X_2 of order 2^rank (rank in {1, 2}), used by
// the verification sweeps.
FiniteSubgroup random_isotropic_subgroup(const PolarizedLattice& p, int rank, std::uint64_t seed);

}  // namespace pav
