#include "pav/torsion.hpp"

namespace pav {

namespace {

void check_owner(const PolarizedLattice& p, const FiniteSubgroup& s) {
  if (!pol_equal(p, s.owner())) throw Error("OwnerMismatch", "subgroup belongs to a different lattice");
}

bool in_context(const PolarizedLattice& p, const TorsionPoint& x, const PairContext& ctx) {
  if (ctx.kernel_ctx) return in_kernel(p, x);
  return is_m_torsion(x, ctx.m);
}

void check_context(const PolarizedLattice& p, const FiniteSubgroup& s, const PairContext& ctx) {
  for (const TorsionPoint& g : s.generators())
    if (!in_context(p, g, ctx))
      throw Error("ContextMismatch", "subgroup is not contained in the context group");
}

// Solution lattice of z * n = 0 (mod modulus) over z in Z^dim, as rows.
IMat solve_mod(const IMat& n, const Int& modulus, int dim) {
  if (n.cols() == 0) return IMat::identity(dim);
  Snf sn = smith_normal_form(n);
  int k = std::min(n.rows(), n.cols());
  IMat basis(dim, dim);
  for (int i = 0; i < dim; ++i) {
    Int t(1);
    if (i < k && sn.s(i, i) != 0) t = modulus / gcd(sn.s(i, i), modulus);
    for (int j = 0; j < dim; ++j) basis(i, j) = t * sn.u(i, j);
  }
  return basis;
}

}  // namespace

TorsionPoint reduce_point(QVec coords) {
  for (Rat& c : coords) c = frac(c);
  return {std::move(coords)};
}

TorsionPoint point_add(const TorsionPoint& a, const TorsionPoint& b) {
  QVec c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce_point(std::move(c));
}

bool is_zero_point(const TorsionPoint& p) {
  for (const Rat& c : p.coords)
    if (c != 0) return false;
  return true;
}

bool is_m_torsion(const TorsionPoint& p, const Int& m) {
  for (const Rat& c : p.coords)
    if (!is_integral(c * Rat(m))) return false;
  return true;
}

bool in_kernel(const PolarizedLattice& p, const TorsionPoint& x) {
  QVec xe = mul_vec(x.coords, to_rational(p.form()));
  for (const Rat& v : xe)
    if (!is_integral(v)) return false;
  return true;
}

PairingExponent riemann_pairing(const PolarizedLattice& p, const TorsionPoint& x,
                                const TorsionPoint& y) {
  if (!in_kernel(p, x) || !in_kernel(p, y))
    throw Error("NotInKernel", "point is not in K(L)");
  return {frac(-p.form_q(x.coords, y.coords))};
}

PairingExponent torsion_pairing(const PolarizedLattice& p, const Int& m, const TorsionPoint& x,
                                const TorsionPoint& y) {
  if (m < 1) throw Error("UsageError", "torsion pairing needs m >= 1");
  if (!is_m_torsion(x, m) || !is_m_torsion(y, m))
    throw Error("NotTorsion", "point is not m-torsion");
  return {frac(-Rat(m) * p.form_q(x.coords, y.coords))};
}

PairingExponent pairing(const PolarizedLattice& p, const TorsionPoint& x, const TorsionPoint& y,
                        const PairContext& ctx) {
  return ctx.kernel_ctx ? riemann_pairing(p, x, y) : torsion_pairing(p, ctx.m, x, y);
}

FiniteSubgroup::FiniteSubgroup(PolarizedLattice owner, const Lattice& lift)
    : owner_(std::move(owner)), lift_(lift) {
  if (lift_.n() != owner_.n()) throw Error("UsageError", "lift dimension mismatch");
  if (!lift_.contains(Lattice(QMat::identity(owner_.n()))))
    throw Error("UsageError", "subgroup lift must contain the lattice");
  for (int i = 0; i < lift_.n(); ++i) {
    QVec row(lift_.n());
    for (int j = 0; j < lift_.n(); ++j) row[j] = lift_.basis()(i, j);
    TorsionPoint pt = reduce_point(std::move(row));
    if (!is_zero_point(pt)) gens_.push_back(std::move(pt));
  }
}

Int FiniteSubgroup::order() const {
  Rat d = det(lift_.basis());
  Rat idx = Rat(1) / d;
  if (idx < 0) idx = -idx;
  return idx.get_num();  // index [lift : Z^n] is integral
}

IVec FiniteSubgroup::structure() const {
  auto rel = to_integral(lift_.basis_inverse());
  return elementary_divisors(*rel);
}

bool FiniteSubgroup::contains(const TorsionPoint& x) const { return lift_.contains(x.coords); }

std::vector<TorsionPoint> FiniteSubgroup::elements(const Int& guard) const {
  if (order() > guard) throw Error("UsageError", "subgroup too large to enumerate");
  const int n = owner_.n();
  auto rel = to_integral(lift_.basis_inverse());
  Snf sn = smith_normal_form(*rel);  // group = Z^n / rowspan(rel)
  QMat vinv = inverse(to_rational(sn.v));
  QMat rep = vinv * lift_.basis();  // c'' -> c''*V^{-1}*A
  std::vector<TorsionPoint> out;
  IVec idx(n, Int(0));
  for (;;) {
    QVec coords(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (idx[i] == 0) continue;
      for (int j = 0; j < n; ++j) coords[j] += Rat(idx[i]) * rep(i, j);
    }
    out.push_back(reduce_point(std::move(coords)));
    int k = n - 1;
    while (k >= 0) {
      idx[k] += 1;
      if (idx[k] < sn.s(k, k)) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

FiniteSubgroup make_subgroup(const PolarizedLattice& p, const std::vector<TorsionPoint>& gens) {
  const int n = p.n();
  QMat stack(n + static_cast<int>(gens.size()), n);
  for (int i = 0; i < n; ++i) stack(i, i) = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (static_cast<int>(gens[k].coords.size()) != n)
      throw Error("UsageError", "generator dimension mismatch");
    for (int j = 0; j < n; ++j) stack(n + static_cast<int>(k), j) = frac(gens[k].coords[j]);
  }
  return FiniteSubgroup(p, Lattice(stack));
}

FiniteSubgroup trivial_subgroup(const PolarizedLattice& p) { return make_subgroup(p, {}); }

FiniteSubgroup kernel_subgroup(const PolarizedLattice& p) {
  return FiniteSubgroup(p, Lattice(inverse(to_rational(p.form()))));
}

FiniteSubgroup full_torsion(const PolarizedLattice& p, const Int& m) {
  if (m < 1) throw Error("UsageError", "torsion order must be positive");
  return FiniteSubgroup(p, Lattice(QMat::identity(p.n()).scaled(Rat(1) / Rat(m))));
}

bool subgroup_equal(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  check_owner(a.owner(), b);
  return a.lift() == b.lift();
}

FiniteSubgroup subgroup_sum(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  check_owner(a.owner(), b);
  return FiniteSubgroup(a.owner(), a.lift().sum(b.lift()));
}

FiniteSubgroup transport_subgroup(const FiniteSubgroup& s, const PolarizedLattice& target,
                                  const QMat& ambient_map) {
  QMat carry = s.owner().basis() * ambient_map * target.basis_inverse();
  if (!to_integral(carry))
    throw Error("NotFiniteIndex", "map does not carry the source lattice into the target");
  std::vector<TorsionPoint> gens;
  for (const TorsionPoint& g : s.generators())
    gens.push_back(reduce_point(mul_vec(g.coords, carry)));
  return make_subgroup(target, gens);
}

bool is_totally_isotropic(const PolarizedLattice& p, const FiniteSubgroup& s,
                          const PairContext& ctx) {
  check_owner(p, s);
  check_context(p, s, ctx);
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!pairing(p, gens[i], gens[j], ctx).is_one()) return false;
  return true;
}

FiniteSubgroup orthogonal_complement(const PolarizedLattice& p, const FiniteSubgroup& s,
                                     const PairContext& ctx) {
  check_owner(p, s);
  check_context(p, s, ctx);
  const int n = p.n();
  const auto& gens = s.generators();
  const int k = static_cast<int>(gens.size());
  if (ctx.kernel_ctx) {
    // x = y * E^{-1}, y in Z^n; condition: y . (delta * gen_j) = 0 (mod delta).
    Int delta(1);
    for (const auto& g : gens)
      for (const Rat& c : g.coords) delta = lcm(delta, c.get_den());
    IMat nmat(n, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) {
        Rat v = gens[j].coords[i] * Rat(delta);
        nmat(i, j) = v.get_num();
      }
    IMat sol = (k == 0) ? IMat::identity(n) : solve_mod(nmat, delta, n);
    QMat lift = to_rational(sol) * inverse(to_rational(p.form()));
    return FiniteSubgroup(p, Lattice(lift));
  }
  // x = z/m, z in Z^n; condition: z * (E * a_j^T) = 0 (mod m), a_j = m * gen_j.
  const Int& m = ctx.m;
  IMat nmat(n, k);
  for (int j = 0; j < k; ++j) {
    QVec a(n);
    for (int i = 0; i < n; ++i) a[i] = gens[j].coords[i] * Rat(m);
    QVec ea = mul_vec(a, to_rational(p.form()));  // E^T a = -(E a); sign irrelevant mod m
    for (int i = 0; i < n; ++i) nmat(i, j) = ea[i].get_num();
  }
  IMat sol = (k == 0) ? IMat::identity(n) : solve_mod(nmat, m, n);
  QMat lift = to_rational(sol).scaled(Rat(1) / Rat(m));
  return FiniteSubgroup(p, Lattice(lift));
}

FiniteSubgroup orthogonal_complement_scan(const PolarizedLattice& p, const FiniteSubgroup& s,
                                          const PairContext& ctx) {
  check_owner(p, s);
  check_context(p, s, ctx);
  FiniteSubgroup group = ctx.kernel_ctx ? kernel_subgroup(p) : full_torsion(p, ctx.m);
  std::vector<TorsionPoint> kept;
  for (const TorsionPoint& x : group.elements()) {
    bool ok = true;
    for (const TorsionPoint& g : s.generators())
      if (!pairing(p, x, g, ctx).is_one()) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(x);
  }
  return make_subgroup(p, kept);
}

}  // namespace pav
