#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pav/lattice.hpp"
#include "pav/report.hpp"

namespace pav {

// Permutation of {1..d}, stored as 0-based images. Composition is
// left-to-right: (p * q)(x) = q(p(x)).
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int d);
  // Strict disjoint-cycle notation on points 1..d, e.g. "(1 2)(3 4)";
  // "()" denotes the identity.
  static Perm parse_cycles(const std::string& s, int d);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  int cycle_count() const;  // fixed points included
  std::string to_cycles() const;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

bool transitive(const std::vector<Perm>& gens, int d);

struct BranchPoint {
  std::string label;
  Perm perm;
};

// Branched cover of the line: ordered branch points, one permutation each,
// left-to-right product equal to the identity, transitive monodromy, no
// trivial branch permutation. make_cover throws InvalidMonodromy.
struct BranchedCover {
  int degree;
  std::vector<BranchPoint> branch;
};

BranchedCover make_cover(int degree, std::vector<BranchPoint> branch);

// Riemann-Hurwitz over the line: 2g - 2 = -2d + sum_b (d - #cycles(b)).
// Throws NegativeGenus when the data gives a negative or non-integral genus.
int genus(const BranchedCover& c);

// deg R = sum_b (d - #cycles(b)).
int ramification_degree(const BranchedCover& c);

// Degree-4 cover whose monodromy preserves the blocks {{1,2},{3,4}}, i.e.
// lies in <(12),(34),(13)(24)>; encodes the tower D -> C -> P^1 with
// iota = (12)(34).
struct TowerOf2Covers {
  BranchedCover cover;
};

TowerOf2Covers make_tower(std::vector<BranchPoint> branch);
TowerOf2Covers make_tower(const BranchedCover& c);

struct TowerReport {
  bool block_system = false;
  bool product_identity = false;
  bool transitive_d = false;
  bool transitive_c = false;
  bool generic = false;
  int pi_branch = 0;   // within-block transpositions (12), (34)
  int phi_branch = 0;  // block-swapping points
  std::optional<int> genus_d, genus_c;
  std::vector<std::string> issues;
  bool valid() const { return block_system && product_identity && transitive_d && transitive_c; }
};

// Diagnostic pass over any degree-4 cover data; never throws.
TowerReport validate_tower(const BranchedCover& c);

// C -> P^1: the induced action on the blocks; branch points acting trivially
// on blocks are dropped.
BranchedCover block_cover(const TowerOf2Covers& t);

// Generic: every branch permutation is one of (12), (34), (13)(24), (14)(23)
// and the branch labels are pairwise distinct.
bool is_generic(const TowerOf2Covers& t);

// Number of branch points of pi: D -> C (within-block transpositions).
int pi_ramification(const TowerOf2Covers& t);

// The bigonally related tower: the action on the block transversals
// {1,3} -> 1, {2,4} -> 2, {1,4} -> 3, {2,3} -> 4, so that the lifted
// involution iota~ is again (12)(34). Throws NotGeneric (this includes an
// unbranched pi, whose bigonal cover would be disconnected).
TowerOf2Covers bigonal(const TowerOf2Covers& t);

// One sigma in S_4 conjugating every branch permutation of a onto the
// corresponding one of b (same labels, same order).
bool simultaneously_conjugate(const BranchedCover& a, const BranchedCover& b);

// Uniform-ish rejection sampling over towers with genus(C) = g_c and
// pi_ramification = r; deterministic in seed.
TowerOf2Covers random_tower(int g_c, int r, std::uint64_t seed);

// The degree-4 tower over w1..w6 (block-swapping) and b1..b6 (within-block).
TowerOf2Covers paper_tower();

struct PrymNumerics {
  int dimension;
  PolType type;  // 1^(r/2 - 1) followed by 2^g
};

// dim P = g - 1 + r/2. Throws UnbranchedCover (r = 0), OddBranchCount.
PrymNumerics prym_numerics(int g_c, int r);

// Numerics of Pantazis duality: type(P(D,C)) dual to type(P(Gamma,Gamma_0)),
// equal dimensions, and Riemann-Hurwitz consistency of the bigonal tower.
VerifyReport prym_duality_check(const TowerOf2Covers& t);

struct ModuliDims {
  Int dim_abelian;   // g(g+1)/2
  int dim_towers;    // 3*g_curve - 3 + r
  int dim_jacobians; // 3*g_abelian - 3
};
ModuliDims moduli_dimensions(int g_abelian, int g_curve, int r);
VerifyReport moduli_report(int g_abelian, int g_curve, int r);

}  // namespace pav
