#include "pav/covers.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "pav/numeric.hpp"

namespace pav {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  int d = static_cast<int>(img_.size());
  if (d < 1) throw Error("UsageError", "empty permutation", "Perm");
  std::vector<bool> seen(d, false);
  for (int v : img_) {
    if (v < 0 || v >= d || seen[v]) throw Error("UsageError", "not a permutation", "Perm");
    seen[v] = true;
  }
}

Perm Perm::identity(int d) {
  std::vector<int> img(d);
  for (int i = 0; i < d; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::parse_cycles(const std::string& s, int d) {
  if (d < 1) throw Error("ParseError", "degree must be positive", "perm");
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  std::vector<int> img(d);
  for (int k = 0; k < d; ++k) img[k] = k;
  std::vector<bool> used(d, false);

  skip_ws();
  if (i >= s.size()) throw Error("ParseError", "empty permutation string", "perm");
  bool only_empty = false;
  int cycles = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw Error("ParseError", "expected '('", "perm");
    ++i;
    skip_ws();
    std::vector<int> cyc;
    while (i < s.size() && s[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error("ParseError", "expected a point 1..d", "perm");
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > d) throw Error("ParseError", "point out of range", "perm");
        ++i;
      }
      if (v < 1 || v > d) throw Error("ParseError", "point out of range", "perm");
      if (used[v - 1]) throw Error("ParseError", "cycles are not disjoint", "perm");
      used[v - 1] = true;
      cyc.push_back(v - 1);
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= s.size()) throw Error("ParseError", "unterminated cycle", "perm");
    ++i;  // ')'
    if (cyc.empty()) {
      only_empty = true;
    } else if (cyc.size() == 1) {
      throw Error("ParseError", "cycle of length one", "perm");
    } else {
      for (std::size_t j = 0; j < cyc.size(); ++j) img[cyc[j]] = cyc[(j + 1) % cyc.size()];
      ++cycles;
    }
    skip_ws();
  }
  if (only_empty && cycles > 0) throw Error("ParseError", "empty cycle", "perm");
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw Error("UsageError", "degree mismatch", "Perm");
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[x] = o.img_[img_[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

int Perm::cycle_count() const {
  int d = degree(), count = 0;
  std::vector<bool> seen(d, false);
  for (int x = 0; x < d; ++x) {
    if (seen[x]) continue;
    ++count;
    for (int y = x; !seen[y]; y = img_[y]) seen[y] = true;
  }
  return count;
}

std::string Perm::to_cycles() const {
  int d = degree();
  std::vector<bool> seen(d, false);
  std::string out;
  for (int x = 0; x < d; ++x) {
    if (seen[x] || img_[x] == x) continue;
    out += '(';
    bool first = true;
    for (int y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool transitive(const std::vector<Perm>& gens, int d) {
  if (d == 1) return true;
  if (gens.empty()) return false;
  std::vector<bool> reached(d, false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& p : gens) {
      int y = p.apply(x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == d;
}

BranchedCover make_cover(int degree, std::vector<BranchPoint> branch) {
  if (degree < 1) throw Error("InvalidMonodromy", "degree must be positive", "make_cover");
  std::vector<Perm> perms;
  Perm prod = Perm::identity(degree);
  for (const BranchPoint& b : branch) {
    if (b.perm.degree() != degree)
      throw Error("InvalidMonodromy", "permutation degree mismatch at " + b.label, "make_cover");
    if (b.perm.is_identity())
      throw Error("InvalidMonodromy", "trivial branch permutation at " + b.label, "make_cover");
    perms.push_back(b.perm);
    prod = prod * b.perm;
  }
  if (!prod.is_identity())
    throw Error("InvalidMonodromy", "ordered product of the branch permutations is not the identity",
                "make_cover");
  if (!transitive(perms, degree))
    throw Error("InvalidMonodromy", "monodromy group is not transitive", "make_cover");
  return BranchedCover{degree, std::move(branch)};
}

int genus(const BranchedCover& c) {
  int total = 0;
  for (const BranchPoint& b : c.branch) total += c.degree - b.perm.cycle_count();
  int two_g_minus_2 = -2 * c.degree + total;
  if ((two_g_minus_2 + 2) % 2 != 0 || two_g_minus_2 + 2 < 0)
    throw Error("NegativeGenus", "Riemann-Hurwitz gives a negative or non-integral genus", "genus");
  return (two_g_minus_2 + 2) / 2;
}

int ramification_degree(const BranchedCover& c) {
  int total = 0;
  for (const BranchPoint& b : c.branch) total += c.degree - b.perm.cycle_count();
  return total;
}

namespace {

// Blocks {1,2} and {3,4}, 0-based {0,1} / {2,3}.
int block_of(int x) { return x / 2; }

bool preserves_blocks(const Perm& p) {
  return block_of(p.apply(0)) == block_of(p.apply(1)) &&
         block_of(p.apply(2)) == block_of(p.apply(3));
}

Perm induced_block_perm(const Perm& p) {
  return Perm({block_of(p.apply(0)), block_of(p.apply(2))});
}

Perm p2(int a, int b, int c, int d) { return Perm({a - 1, b - 1, c - 1, d - 1}); }

const Perm& within_12() { static const Perm p = p2(2, 1, 3, 4); return p; }
const Perm& within_34() { static const Perm p = p2(1, 2, 4, 3); return p; }
const Perm& swap_a() { static const Perm p = p2(3, 4, 1, 2); return p; }   // (13)(24)
const Perm& swap_b() { static const Perm p = p2(4, 3, 2, 1); return p; }   // (14)(23)

bool is_within(const Perm& p) { return p == within_12() || p == within_34(); }
bool is_swap(const Perm& p) { return p == swap_a() || p == swap_b(); }

}  // namespace

TowerOf2Covers make_tower(std::vector<BranchPoint> branch) {
  return make_tower(make_cover(4, std::move(branch)));
}

TowerOf2Covers make_tower(const BranchedCover& c) {
  if (c.degree != 4) throw Error("NoBlockSystem", "tower cover must have degree 4", "make_tower");
  std::vector<Perm> blocks;
  for (const BranchPoint& b : c.branch) {
    if (!preserves_blocks(b.perm))
      throw Error("NoBlockSystem", "branch permutation at " + b.label + " mixes the blocks",
                  "make_tower");
    blocks.push_back(induced_block_perm(b.perm));
  }
  if (!transitive(blocks, 2))
    throw Error("InvalidMonodromy", "block action is not transitive (C disconnected)", "make_tower");
  return TowerOf2Covers{c};
}

TowerReport validate_tower(const BranchedCover& c) {
  TowerReport r;
  if (c.degree != 4) {
    r.issues.push_back("degree is not 4");
    return r;
  }
  r.block_system = true;
  r.generic = true;
  Perm prod = Perm::identity(4);
  std::vector<Perm> perms, blocks;
  std::set<std::string> labels;
  for (const BranchPoint& b : c.branch) {
    if (b.perm.degree() != 4) {
      r.issues.push_back("permutation degree mismatch at " + b.label);
      r.block_system = false;
      r.generic = false;
      continue;
    }
    perms.push_back(b.perm);
    prod = prod * b.perm;
    if (!preserves_blocks(b.perm)) {
      r.issues.push_back("NoBlockSystem: permutation at " + b.label + " mixes the blocks");
      r.block_system = false;
      r.generic = false;
      continue;
    }
    blocks.push_back(induced_block_perm(b.perm));
    if (is_within(b.perm)) {
      ++r.pi_branch;
    } else if (is_swap(b.perm)) {
      ++r.phi_branch;
    } else if (b.perm.is_identity()) {
      r.issues.push_back("trivial branch permutation at " + b.label);
      r.generic = false;
    } else if (induced_block_perm(b.perm).is_identity()) {
      r.issues.push_back("NotGeneric: pi ramified over both points of the phi-fiber at " + b.label);
      r.generic = false;
    } else {
      r.issues.push_back("NotGeneric: mixed local type at " + b.label);
      r.generic = false;
    }
    if (!labels.insert(b.label).second) {
      r.issues.push_back("NotGeneric: shared branch label " + b.label);
      r.generic = false;
    }
  }
  r.product_identity = prod.is_identity();
  if (!r.product_identity) r.issues.push_back("ordered product is not the identity");
  r.transitive_d = transitive(perms, 4);
  if (!r.transitive_d) r.issues.push_back("monodromy is not transitive (D disconnected)");
  r.transitive_c = r.block_system && transitive(blocks, 2);
  if (r.block_system && !r.transitive_c)
    r.issues.push_back("block action is not transitive (C disconnected)");
  if (!r.valid()) r.generic = false;
  if (r.valid()) {
    r.genus_d = genus(c);
    int swaps = 0;
    for (const Perm& b : blocks)
      if (!b.is_identity()) ++swaps;
    r.genus_c = (swaps - 2) / 2;
  }
  return r;
}

BranchedCover block_cover(const TowerOf2Covers& t) {
  std::vector<BranchPoint> branch;
  for (const BranchPoint& b : t.cover.branch) {
    Perm q = induced_block_perm(b.perm);
    if (!q.is_identity()) branch.push_back({b.label, q});
  }
  return make_cover(2, std::move(branch));
}

bool is_generic(const TowerOf2Covers& t) { return validate_tower(t.cover).generic; }

int pi_ramification(const TowerOf2Covers& t) {
  int count = 0;
  for (const BranchPoint& b : t.cover.branch)
    if (is_within(b.perm)) ++count;
  return count;
}

TowerOf2Covers bigonal(const TowerOf2Covers& t) {
  TowerReport rep = validate_tower(t.cover);
  if (!rep.valid() || !rep.generic)
    throw Error("NotGeneric", rep.issues.empty() ? "tower is not generic" : rep.issues.front(),
                "bigonal");
  if (rep.pi_branch == 0)
    throw Error("NotGeneric", "pi is unbranched; the bigonal cover is disconnected", "bigonal");

  // Transversal labels: {1,3} -> 1, {2,4} -> 2, {1,4} -> 3, {2,3} -> 4
  // (0-based point pairs below); iota~ = (12)(34) again.
  static const int trans[4][2] = {{0, 2}, {1, 3}, {0, 3}, {1, 2}};
  auto transversal_index = [](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int k = 0; k < 4; ++k)
      if (trans[k][0] == a && trans[k][1] == b) return k;
    throw Error("Internal", "not a transversal");
  };
  std::vector<BranchPoint> branch;
  for (const BranchPoint& b : t.cover.branch) {
    std::vector<int> img(4);
    for (int k = 0; k < 4; ++k)
      img[k] = transversal_index(b.perm.apply(trans[k][0]), b.perm.apply(trans[k][1]));
    branch.push_back({b.label, Perm(std::move(img))});
  }
  return make_tower(std::move(branch));
}

bool simultaneously_conjugate(const BranchedCover& a, const BranchedCover& b) {
  if (a.degree != b.degree || a.branch.size() != b.branch.size()) return false;
  for (std::size_t i = 0; i < a.branch.size(); ++i)
    if (a.branch[i].label != b.branch[i].label) return false;
  std::vector<int> img(a.degree);
  for (int i = 0; i < a.degree; ++i) img[i] = i;
  do {
    Perm sigma{std::vector<int>(img)};
    Perm sigma_inv = sigma.inverse();
    bool ok = true;
    for (std::size_t i = 0; i < a.branch.size() && ok; ++i)
      ok = (sigma_inv * a.branch[i].perm * sigma) == b.branch[i].perm;
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

TowerOf2Covers random_tower(int g_c, int r, std::uint64_t seed) {
  if (g_c < 0 || r < 0) throw Error("UsageError", "negative arguments", "random_tower");
  if (r == 0) throw Error("UnbranchedCover", "pi must be branched", "random_tower");
  if (r % 2 != 0) throw Error("OddBranchCount", "r must be even", "random_tower");
  int nphi = 2 * g_c + 2;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> slots(nphi + r);
    for (int i = 0; i < nphi + r; ++i) slots[i] = i < nphi ? 0 : 1;
    for (int i = static_cast<int>(slots.size()) - 1; i > 0; --i)
      std::swap(slots[i], slots[rng_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    std::vector<BranchPoint> branch;
    int wi = 0, bi = 0;
    Perm prod = Perm::identity(4);
    std::vector<Perm> perms;
    for (int s : slots) {
      bool coin = (rng() & 1) != 0;
      Perm p = s == 0 ? (coin ? swap_a() : swap_b()) : (coin ? within_12() : within_34());
      std::string label = s == 0 ? "w" + std::to_string(++wi) : "b" + std::to_string(++bi);
      prod = prod * p;
      perms.push_back(p);
      branch.push_back({label, std::move(p)});
    }
    if (!prod.is_identity() || !transitive(perms, 4)) continue;
    return make_tower(std::move(branch));
  }
  throw Error("Internal", "random_tower rejection sampling exhausted");
}

TowerOf2Covers paper_tower() {
  std::vector<BranchPoint> branch;
  for (int i = 1; i <= 6; ++i) branch.push_back({"w" + std::to_string(i), swap_a()});
  for (int i = 1; i <= 6; ++i) branch.push_back({"b" + std::to_string(i), within_12()});
  return make_tower(std::move(branch));
}

PrymNumerics prym_numerics(int g_c, int r) {
  if (g_c < 0 || r < 0) throw Error("UsageError", "negative arguments", "prym_numerics");
  if (r == 0)
    throw Error("UnbranchedCover", "unbranched pi: the norm kernel is disconnected",
                "prym_numerics");
  if (r % 2 != 0) throw Error("OddBranchCount", "branch count of pi must be even", "prym_numerics");
  PrymNumerics p;
  p.dimension = g_c - 1 + r / 2;
  for (int i = 0; i < r / 2 - 1; ++i) p.type.push_back(1);
  for (int i = 0; i < g_c; ++i) p.type.push_back(2);
  return p;
}

VerifyReport prym_duality_check(const TowerOf2Covers& t) {
  int g_c = genus(block_cover(t));
  int r = pi_ramification(t);
  PrymNumerics side_dc = prym_numerics(g_c, r);

  TowerOf2Covers bt = bigonal(t);
  int g_gamma0 = genus(block_cover(bt));
  int r_prime = pi_ramification(bt);
  PrymNumerics side_gg = prym_numerics(g_gamma0, r_prime);
  int g_gamma = genus(bt.cover);
  int g_d = genus(t.cover);

  VerifyReport rep{"prym-duality", {}};
  rep.checks.push_back({"dim P(D,C) = dim P(Gamma,Gamma_0)",
                        side_dc.dimension == side_gg.dimension,
                        {{"dim_dc", side_dc.dimension}, {"dim_gg", side_gg.dimension}}});
  nlohmann::json t1 = nlohmann::json::array(), t2 = nlohmann::json::array(),
                 td = nlohmann::json::array();
  for (const Int& d : side_dc.type) t1.push_back(static_cast<int>(d.get_si()));
  for (const Int& d : side_gg.type) t2.push_back(static_cast<int>(d.get_si()));
  for (const Int& d : dual_type(side_dc.type)) td.push_back(static_cast<int>(d.get_si()));
  rep.checks.push_back({"type P(Gamma,Gamma_0) is dual to type P(D,C)",
                        side_gg.type == dual_type(side_dc.type),
                        {{"type_dc", t1}, {"type_gg", t2}, {"dual_of_dc", td}}});
  rep.checks.push_back({"2g_Gamma - 2 = 2(2g_Gamma0 - 2) + deg R'",
                        2 * g_gamma - 2 == 2 * (2 * g_gamma0 - 2) + r_prime,
                        {{"genus_Gamma", g_gamma},
                         {"genus_Gamma0", g_gamma0},
                         {"deg_R_prime", r_prime}}});
  rep.checks.push_back({"genus bookkeeping g_D = 2g_C - 1 + r/2",
                        g_d == 2 * g_c - 1 + r / 2,
                        {{"genus_D", g_d}, {"genus_C", g_c}, {"r", r}}});
  return rep;
}

ModuliDims moduli_dimensions(int g_abelian, int g_curve, int r) {
  if (g_abelian < 0 || g_curve < 0 || r < 0)
    throw Error("UsageError", "negative arguments", "moduli_dimensions");
  ModuliDims d;
  d.dim_abelian = Int(g_abelian) * (g_abelian + 1) / 2;
  d.dim_towers = 3 * g_curve - 3 + r;
  d.dim_jacobians = 3 * g_abelian - 3;
  return d;
}

VerifyReport moduli_report(int g_abelian, int g_curve, int r) {
  ModuliDims d = moduli_dimensions(g_abelian, g_curve, r);
  VerifyReport rep{"moduli-dimensions", {}};
  nlohmann::json w = {{"dim_abelian", d.dim_abelian.get_str()},
                      {"dim_towers", d.dim_towers},
                      {"dim_jacobians", d.dim_jacobians}};
  rep.checks.push_back(
      {"the tower locus maps to a divisor: dim A - (3g_C - 3 + r) = 1",
       d.dim_abelian == Int(d.dim_towers) + 1, w});
  rep.checks.push_back(
      {"the Jacobian locus is a divisor: dim A - (3g - 3) = 1",
       d.dim_abelian == Int(d.dim_jacobians) + 1, w});
  return rep;
}

}  // namespace pav
