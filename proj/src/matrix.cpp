#include "pav/matrix.hpp"

namespace pav {

QMat to_rational(const IMat& m) {
  QMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

std::optional<IMat> to_integral(const QMat& m) {
  IMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      out(i, j) = m(i, j).get_num() / m(i, j).get_den();
    }
  return out;
}

Rat det(const QMat& m) {
  int n = m.rows();
  if (n != m.cols()) throw Error("UsageError", "det of non-square matrix");
  QMat a = m;
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      a.swap_rows(p, c);
      d = -d;
    }
    d *= a(c, c);
    Rat inv = Rat(1) / a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rat f = a(r, c) * inv;
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

Int det(const IMat& m) {
  Rat d = det(to_rational(m));
  return d.get_num();  // denominator is 1 for integer input
}

QMat inverse(const QMat& m) {
  int n = m.rows();
  if (n != m.cols()) throw Error("UsageError", "inverse of non-square matrix");
  QMat a = m;
  QMat inv = QMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) throw Error("SingularMatrix", "matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rat f = Rat(1) / a(c, c);
    for (int k = 0; k < n; ++k) {
      a(c, k) *= f;
      inv(c, k) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rat g = a(r, c);
      for (int k = 0; k < n; ++k) {
        a(r, k) -= g * a(c, k);
        inv(r, k) -= g * inv(c, k);
      }
    }
  }
  return inv;
}

bool is_zero(const QMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

QVec mul_vec(const QVec& x, const QMat& m) {
  QVec out(m.cols(), Rat(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

Rat form_value(const QVec& x, const QMat& m, const QVec& y) {
  QVec xm = mul_vec(x, m);
  Rat s(0);
  for (std::size_t j = 0; j < y.size(); ++j) s += xm[j] * y[j];
  return s;
}

Hnf row_hnf(IMat a) {
  const int m = a.rows(), n = a.cols();
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    // Euclid on the column below row r until one nonzero entry remains.
    for (;;) {
      int p = -1;
      for (int i = r; i < m; ++i) {
        if (a(i, col) == 0) continue;
        if (p < 0 || abs(a(i, col)) < abs(a(p, col))) p = i;
      }
      if (p < 0) break;
      a.swap_rows(p, r);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        Int q = fdiv(a(i, col), a(r, col));
        if (q != 0) a.row_axpy(i, -q, r);
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < m && a(r, col) != 0) {
      if (a(r, col) < 0) a.negate_row(r);
      for (int i = 0; i < r; ++i) {
        Int q = fdiv(a(i, col), a(r, col));
        if (q != 0) a.row_axpy(i, -q, r);
      }
      ++r;
    }
  }
  IMat h(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = a(i, j);
  return {h, r};
}

Snf smith_normal_form(IMat a) {
  const int m = a.rows(), n = a.cols();
  IMat u = IMat::identity(m), v = IMat::identity(n);
  int t = 0;
  while (true) {
    // pivot: minimal |a(i,j)| != 0 in the remaining block, lexicographic ties
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    a.swap_rows(pi, t);
    u.swap_rows(pi, t);
    a.swap_cols(pj, t);
    v.swap_cols(pj, t);
    bool again = false;
    for (int i = t + 1; i < m; ++i) {
      if (a(i, t) == 0) continue;
      Int q = fdiv(a(i, t), a(t, t));
      if (q != 0) {
        a.row_axpy(i, -q, t);
        u.row_axpy(i, -q, t);
      }
      if (a(i, t) != 0) again = true;
    }
    for (int j = t + 1; j < n; ++j) {
      if (a(t, j) == 0) continue;
      Int q = fdiv(a(t, j), a(t, t));
      if (q != 0) {
        a.col_axpy(j, -q, t);
        v.col_axpy(j, -q, t);
      }
      if (a(t, j) != 0) again = true;
    }
    if (again) continue;  // smaller remainder exists; reselect pivot
    // divisibility sweep over the untouched block
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (fmod(a(i, j), a(t, t)) != 0) {
          a.row_axpy(t, 1, i);
          u.row_axpy(t, 1, i);
          divides = false;
        }
    if (!divides) continue;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return {a, u, v};
}

IVec elementary_divisors(const IMat& a) {
  Snf s = smith_normal_form(a);
  IVec out;
  int k = std::min(s.s.rows(), s.s.cols());
  for (int i = 0; i < k; ++i)
    if (s.s(i, i) > 1) out.push_back(s.s(i, i));
  return out;
}

IMat random_unimodular(int n, std::uint64_t seed, int ops, int bound) {
  std::mt19937_64 rng(seed);
  IMat v = IMat::identity(n);
  for (int k = 0; k < ops; ++k) {
    int kind = static_cast<int>(rng_below(rng, 4));
    int i = static_cast<int>(rng_below(rng, n));
    int j = static_cast<int>(rng_below(rng, n));
    switch (kind) {
      case 3:
        v.negate_row(i);
        break;
      case 2:
        v.swap_rows(i, j);
        break;
      default: {
        if (i == j) j = (j + 1) % n;
        long c = rng_range(rng, 1, bound);
        if (rng_below(rng, 2)) c = -c;
        v.row_axpy(i, Int(c), j);
      }
    }
  }
  return v;
}

}  // namespace pav
