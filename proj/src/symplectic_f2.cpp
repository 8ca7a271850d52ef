#include "pav/symplectic_f2.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace pav {

std::string f2_str(F2Vec v, int dim) {
  std::string s(dim, '0');
  for (int i = 0; i < dim; ++i)
    if ((v >> i) & 1) s[i] = '1';
  return s;
}

F2Vec f2_parse(const std::string& s, const std::string& loc) {
  if (s.empty() || s.size() > 64) throw Error("ParseError", "invalid bitstring '" + s + "'", loc);
  F2Vec v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') v |= F2Vec(1) << i;
    else if (s[i] != '0') throw Error("ParseError", "invalid bitstring '" + s + "'", loc);
  }
  return v;
}

SymplecticSpaceF2::SymplecticSpaceF2(int dim, std::vector<F2Vec> gram_rows)
    : dim_(dim), gram_(std::move(gram_rows)) {
  if (dim < 2 || dim > 64 || static_cast<int>(gram_.size()) != dim)
    throw Error("UsageError", "bad symplectic space dimension");
  F2Vec mask = (dim == 64) ? ~F2Vec(0) : ((F2Vec(1) << dim) - 1);
  for (int i = 0; i < dim; ++i) {
    if (gram_[i] & ~mask) throw Error("UsageError", "gram row out of range");
    if ((gram_[i] >> i) & 1) throw Error("UsageError", "gram diagonal must vanish");
    for (int j = 0; j < dim; ++j)
      if (((gram_[i] >> j) & 1) != ((gram_[j] >> i) & 1))
        throw Error("UsageError", "gram must be symmetric");
  }
  // nondegenerate <=> rows independent over F_2
  std::vector<F2Vec> rows = gram_;
  int rank = 0;
  for (int c = 0; c < dim; ++c) {
    int p = -1;
    for (int r = rank; r < dim; ++r)
      if ((rows[r] >> c) & 1) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[rank]);
    for (int r = 0; r < dim; ++r)
      if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  if (rank != dim) throw Error("DegeneratePairing", "pairing has a nontrivial radical");
}

int SymplecticSpaceF2::pair(F2Vec v, F2Vec w) const {
  int acc = 0;
  F2Vec rest = v;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    acc ^= std::popcount(gram_[i] & w) & 1;
  }
  return acc;
}

bool SymplecticSpaceF2::is_isotropic_plane(F2Vec v, F2Vec w) const {
  if (v == 0 || w == 0 || v == w) return false;  // dependent
  return pair(v, w) == 0;
}

std::vector<PlaneF2> SymplecticSpaceF2::enumerate_isotropic_planes(int jobs) const {
  // Canonical representatives: echelon pairs (a, b) with pivots p1 < p2,
  // bit p2 of a cleared. Each plane appears exactly once.
  auto scan_p1 = [&](int p1, std::vector<PlaneF2>& out) {
    F2Vec a_base = F2Vec(1) << p1;
    // free bits of a: indices > p1
    int free_a = dim_ - p1 - 1;
    for (F2Vec fa = 0; fa < (F2Vec(1) << free_a); ++fa) {
      F2Vec a = a_base;
      for (int k = 0; k < free_a; ++k)
        if ((fa >> k) & 1) a |= F2Vec(1) << (p1 + 1 + k);
      for (int p2 = p1 + 1; p2 < dim_; ++p2) {
        if ((a >> p2) & 1) continue;  // echelon: a reduced above pivot p2
        F2Vec b_base = F2Vec(1) << p2;
        int free_b = dim_ - p2 - 1;
        for (F2Vec fb = 0; fb < (F2Vec(1) << free_b); ++fb) {
          F2Vec b = b_base;
          for (int k = 0; k < free_b; ++k)
            if ((fb >> k) & 1) b |= F2Vec(1) << (p2 + 1 + k);
          if (pair(a, b) == 0) out.push_back({a, b});
        }
      }
    }
  };
  std::vector<PlaneF2> planes;
  if (jobs <= 1) {
    for (int p1 = 0; p1 < dim_; ++p1) scan_p1(p1, planes);
  } else {
    std::vector<std::vector<PlaneF2>> parts(dim_);
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    int nw = std::min(jobs, dim_);
    for (int w = 0; w < nw; ++w)
      workers.emplace_back([&]() {
        for (;;) {
          int p1 = next.fetch_add(1);
          if (p1 >= dim_) return;
          scan_p1(p1, parts[p1]);
        }
      });
    for (auto& t : workers) t.join();
    for (auto& part : parts) planes.insert(planes.end(), part.begin(), part.end());
  }
  std::sort(planes.begin(), planes.end(), [&](const PlaneF2& x, const PlaneF2& y) {
    std::string sx = f2_str(x.a, dim_) + f2_str(x.b, dim_);
    std::string sy = f2_str(y.a, dim_) + f2_str(y.b, dim_);
    return sx < sy;
  });
  return planes;
}

std::uint64_t SymplecticSpaceF2::count_isotropic_planes_oracle() const {
  std::uint64_t pairs = 0;
  F2Vec total = F2Vec(1) << dim_;
  for (F2Vec v = 1; v < total; ++v)
    for (F2Vec w = 1; w < total; ++w) {
      if (w == v) continue;
      if (pair(v, w) == 0) ++pairs;
    }
  return pairs / 6;  // ordered bases per plane: |GL_2(F_2)| = 6
}

std::vector<F2Vec> SymplecticSpaceF2::perp(const std::vector<F2Vec>& vs) const {
  // constraints: rows c_v = gram * v; solve x with <x, v> = 0
  std::vector<F2Vec> cons;
  for (F2Vec v : vs) {
    F2Vec row = 0;
    for (int i = 0; i < dim_; ++i)
      if (std::popcount(gram_[i] & v) & 1) row |= F2Vec(1) << i;
    cons.push_back(row);
  }
  // echelonize constraints
  std::vector<int> pivots;
  std::vector<F2Vec> ech;
  for (F2Vec row : cons) {
    for (std::size_t k = 0; k < ech.size(); ++k)
      if ((row >> pivots[k]) & 1) row ^= ech[k];
    if (row == 0) continue;
    int p = std::countr_zero(row);
    for (std::size_t k = 0; k < ech.size(); ++k)
      if ((ech[k] >> p) & 1) ech[k] ^= row;
    ech.push_back(row);
    pivots.push_back(p);
  }
  // nullspace basis: one vector per free coordinate
  std::vector<F2Vec> basis;
  for (int c = 0; c < dim_; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    F2Vec x = F2Vec(1) << c;
    for (std::size_t k = 0; k < ech.size(); ++k)
      if ((ech[k] >> c) & 1) x |= F2Vec(1) << pivots[k];
    basis.push_back(x);
  }
  // echelonize the basis for a canonical output
  std::vector<F2Vec> out;
  std::vector<int> bp;
  for (F2Vec row : basis) {
    for (std::size_t k = 0; k < out.size(); ++k)
      if ((row >> bp[k]) & 1) row ^= out[k];
    if (row == 0) continue;
    int p = std::countr_zero(row);
    for (std::size_t k = 0; k < out.size(); ++k)
      if ((out[k] >> p) & 1) out[k] ^= row;
    out.push_back(row);
    bp.push_back(p);
  }
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return bp[x] < bp[y]; });
  std::vector<F2Vec> sorted;
  for (std::size_t i : order) sorted.push_back(out[i]);
  return sorted;
}

std::vector<F2Vec> SymplecticSpaceF2::coisotropic_complement(const PlaneF2& plane) const {
  if (!is_isotropic_plane(plane.a, plane.b))
    throw Error("NotIsotropic", "plane is not totally isotropic");
  return perp({plane.a, plane.b});
}

PlaneF2 SymplecticSpaceF2::random_isotropic_plane(std::uint64_t seed) const {
  if (dim_ <= 2) throw Error("NoneExist", "no isotropic planes in dimension <= 2");
  std::mt19937_64 rng(seed);
  F2Vec mask = (dim_ == 64) ? ~F2Vec(0) : ((F2Vec(1) << dim_) - 1);
  for (int tries = 0; tries < 100000; ++tries) {
    F2Vec v = rng() & mask;
    F2Vec w = rng() & mask;
    if (!is_isotropic_plane(v, w)) continue;
    // canonicalize to echelon form
    int p1 = std::countr_zero(v), p2 = std::countr_zero(w);
    if (p1 == p2) {
      w ^= v;
      p2 = std::countr_zero(w);
    }
    if (p1 > p2) {
      std::swap(v, w);
      std::swap(p1, p2);
    }
    if ((v >> p2) & 1) v ^= w;
    return {v, w};
  }
  throw Error("Internal", "random isotropic plane search failed");
}

SymplecticSpaceF2 from_torsion(const PolarizedLattice& p) {
  const int n = p.n();
  if (n > 64) throw Error("UsageError", "dimension too large for bit-packed F2 space");
  std::vector<F2Vec> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    QVec xi(n, Rat(0));
    xi[i] = Rat(1, 2);
    for (int j = 0; j < n; ++j) {
      QVec yj(n, Rat(0));
      yj[j] = Rat(1, 2);
      PairingExponent e = torsion_pairing(p, Int(2), reduce_point(QVec(xi)), reduce_point(QVec(yj)));
      Rat two_q = Rat(2) * e.q;  // 0 or 1
      if (two_q == 1) rows[i] |= F2Vec(1) << j;
    }
  }
  return SymplecticSpaceF2(n, std::move(rows));
}

FiniteSubgroup lift_to_torsion(const PolarizedLattice& p, const std::vector<F2Vec>& vectors,
                               int dim) {
  if (dim != p.n()) throw Error("UsageError", "dimension mismatch");
  std::vector<TorsionPoint> gens;
  for (F2Vec v : vectors) {
    QVec c(dim, Rat(0));
    for (int i = 0; i < dim; ++i)
      if ((v >> i) & 1) c[i] = Rat(1, 2);
    gens.push_back(reduce_point(std::move(c)));
  }
  return make_subgroup(p, gens);
}

FiniteSubgroup random_isotropic_subgroup(const PolarizedLattice& p, int rank, std::uint64_t seed) {
  if (rank != 1 && rank != 2) throw Error("UsageError", "rank must be 1 or 2");
  SymplecticSpaceF2 space = from_torsion(p);
  if (rank == 2) {
    PlaneF2 pl = space.random_isotropic_plane(seed);
    return lift_to_torsion(p, {pl.a, pl.b}, p.n());
  }
  std::mt19937_64 rng(seed);
  F2Vec mask = (p.n() == 64) ? ~F2Vec(0) : ((F2Vec(1) << p.n()) - 1);
  F2Vec v = 0;
  while (v == 0) v = rng() & mask;
  return lift_to_torsion(p, {v}, p.n());
}

}  // namespace pav
