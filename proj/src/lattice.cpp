#include "pav/lattice.hpp"

#include <sstream>

namespace pav {

namespace {

// Canonical basis of the row span: HNF of the cleared-denominator stack,
// rescaled back. Independent of the presenting basis because HNF commutes
// with positive scalars.
QMat canonical_basis(const QMat& rows, int n) {
  Int den(1);
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < rows.cols(); ++j) den = lcm(den, rows(i, j).get_den());
  IMat scaled(rows.rows(), rows.cols());
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < rows.cols(); ++j) {
      Rat v = rows(i, j) * Rat(den);
      scaled(i, j) = v.get_num();
    }
  Hnf h = row_hnf(scaled);
  if (h.rank != n) throw Error("SingularMatrix", "rows do not span a full-rank lattice");
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = Rat(h.h(i, j)) / Rat(den);
  return out;
}

}  // namespace

Lattice::Lattice(const QMat& basis) : basis_(canonical_basis(basis, basis.cols())) {
  inv_ = inverse(basis_);
}

bool Lattice::contains(const QVec& x) const {
  QVec c = mul_vec(x, inv_);
  for (const Rat& v : c)
    if (!is_integral(v)) return false;
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  QMat c = other.basis_ * inv_;
  return to_integral(c).has_value();
}

Lattice Lattice::sum(const Lattice& other) const {
  QMat stack(basis_.rows() + other.basis_.rows(), n());
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < n(); ++j) stack(i, j) = basis_(i, j);
  for (int i = 0; i < other.basis_.rows(); ++i)
    for (int j = 0; j < n(); ++j) stack(basis_.rows() + i, j) = other.basis_(i, j);
  return Lattice(canonical_basis(stack, n()));
}

Lattice Lattice::scaled(const Rat& s) const {
  if (s == 0) throw Error("UsageError", "lattice scale must be nonzero");
  return Lattice(basis_.scaled(s));
}

Int Lattice::index_in(const Lattice& super) const {
  QMat c = basis_ * super.basis_inverse();
  auto ci = to_integral(c);
  if (!ci) throw Error("NotSubgroup", "lattice is not contained in the claimed superlattice");
  Int d = det(*ci);
  return d < 0 ? Int(-d) : d;
}

bool is_valid_type(const PolType& t) {
  if (t.empty()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= 0) return false;
    if (i > 0 && fmod(t[i], t[i - 1]) != 0) return false;
  }
  return true;
}

std::string type_str(const PolType& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i].get_str();
  os << ")";
  return os.str();
}

PolType dual_type(const PolType& t) {
  if (!is_valid_type(t)) throw Error("NotDualizableType", "invalid divisor chain");
  Int s = t.front() * t.back();
  PolType out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (fmod(s, *it) != 0) throw Error("NotDualizableType", "type does not divide d1*dg");
    out.push_back(s / *it);
  }
  return out;
}

IMat standard_symplectic_form(const PolType& t) {
  int g = static_cast<int>(t.size());
  IMat j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = t[i];
    j(g + i, i) = -t[i];
  }
  return j;
}

FrobeniusResult frobenius_normal_form(const IMat& e) {
  const int n = e.rows();
  if (n != e.cols() || n % 2 != 0) throw Error("OddDimension", "alternating form must have even size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (e(i, j) != -e(j, i) || (i == j && e(i, i) != 0))
        throw Error("NotAlternating", "form is not alternating");
  if (det(e) == 0) throw Error("DegenerateForm", "alternating form is degenerate");

  const int g = n / 2;
  IMat f = e;
  IMat u = IMat::identity(n);
  // Basis operations keep u^T * e * u = f: column ops on u mirror the
  // simultaneous row+column ops on f.
  auto basis_swap = [&](int a, int b) {
    f.swap_rows(a, b);
    f.swap_cols(a, b);
    u.swap_cols(a, b);
  };
  auto basis_axpy = [&](int a, const Int& c, int b) {  // v_a += c * v_b
    f.row_axpy(a, c, b);
    f.col_axpy(a, c, b);
    u.col_axpy(a, c, b);
  };
  auto basis_negate = [&](int a) {
    f.negate_row(a);
    f.negate_col(a);
    u.negate_col(a);
  };

  PolType type;
  for (int t = 0; t < g; ++t) {
    const int p = 2 * t, q = 2 * t + 1;
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = p; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (f(i, j) == 0) continue;
          if (bi < 0 || abs(f(i, j)) < abs(f(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) throw Error("DegenerateForm", "form degenerates on a sublattice");
      if (bi != p) {
        basis_swap(bi, p);
        if (bj == p) bj = bi;
      }
      if (bj != q) basis_swap(bj, q);
      if (f(p, q) < 0) basis_negate(q);
      Int a = f(p, q);
      bool dirty = false;
      for (int k = p; k < n; ++k) {
        if (k == p || k == q) continue;
        Int c1 = fdiv(f(p, k), a);
        if (c1 != 0) basis_axpy(k, -c1, q);  // E(v_p, v_k - c*v_q) drops by c*a
        Int c2 = fdiv(f(q, k), a);
        if (c2 != 0) basis_axpy(k, c2, p);  // E(v_q, v_k + c*v_p) drops by c*a
        if (f(p, k) != 0 || f(q, k) != 0) dirty = true;
      }
      if (dirty) continue;  // a strictly smaller entry appeared; reselect pivot
      bool divides = true;
      for (int i = q + 1; i < n && divides; ++i)
        for (int j = i + 1; j < n && divides; ++j)
          if (fmod(f(i, j), a) != 0) {
            basis_axpy(q, 1, i);  // drags the non-multiple into row q
            divides = false;
          }
      if (!divides) continue;
      type.push_back(a);
      break;
    }
  }
  // Reorder pairs (e_0, f_0, e_1, f_1, ...) -> (e_0..e_{g-1}, f_0..f_{g-1}).
  std::vector<int> perm(n);
  for (int t = 0; t < g; ++t) {
    perm[t] = 2 * t;
    perm[g + t] = 2 * t + 1;
  }
  IMat u2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u2(i, j) = u(i, perm[j]);
  for (std::size_t i = 1; i < type.size(); ++i)
    if (fmod(type[i], type[i - 1]) != 0) throw Error("Internal", "divisor chain violated");
  return {type, u2};
}

PolarizedLattice PolarizedLattice::make(const QMat& basis, const IMat& form) {
  auto issues = validate(basis, form);
  if (!issues.empty()) {
    std::string code = "InvalidLattice";
    if (issues.front() == "ambient dimension must be even and positive") code = "OddDimension";
    if (issues.front() == "not alternating") code = "NotAlternating";
    if (issues.front() == "degenerate form") code = "DegenerateForm";
    if (issues.front() == "basis not invertible") code = "SingularMatrix";
    throw Error(code, issues.front());
  }
  PolarizedLattice p;
  p.g_ = basis.rows() / 2;
  p.basis_ = basis;
  p.form_ = form;
  p.basis_inv_ = inverse(basis);
  p.ambient_form_ = p.basis_inv_ * to_rational(form) * p.basis_inv_.transposed();
  FrobeniusResult fr = frobenius_normal_form(form);
  p.type_ = std::move(fr.type);
  p.frob_u_ = std::move(fr.u);
  return p;
}

Rat PolarizedLattice::form_q(const QVec& x, const QVec& y) const {
  return form_value(x, to_rational(form_), y);
}

Int PolarizedLattice::degree() const {
  Int d(1);
  for (const Int& t : type_) d *= t * t;
  return d;
}

std::vector<std::string> validate(const QMat& basis, const IMat& form) {
  std::vector<std::string> out;
  int n = basis.rows();
  if (n == 0 || n % 2 != 0 || basis.cols() != n) {
    out.push_back("ambient dimension must be even and positive");
    return out;
  }
  if (form.rows() != n || form.cols() != n) {
    out.push_back("form size mismatch");
    return out;
  }
  if (det(basis) == 0) out.push_back("basis not invertible");
  bool alt = true;
  for (int i = 0; i < n && alt; ++i)
    for (int j = i; j < n && alt; ++j)
      if (form(i, j) != -form(j, i) || (i == j && form(i, i) != 0)) alt = false;
  if (!alt) out.push_back("not alternating");
  else if (det(form) == 0) out.push_back("degenerate form");
  return out;
}

bool pol_equal(const PolarizedLattice& a, const PolarizedLattice& b) {
  if (a.n() != b.n()) return false;
  return a.lattice() == b.lattice() && a.ambient_form() == b.ambient_form();
}

PolarizedLattice standard_principal(int g) {
  if (g < 1) throw Error("InvalidGenus", "genus must be positive");
  return standard_polarized(PolType(g, Int(1)));
}

PolarizedLattice standard_polarized(const PolType& t) {
  if (!is_valid_type(t)) throw Error("UsageError", "invalid polarization type");
  int n = 2 * static_cast<int>(t.size());
  return PolarizedLattice::make(QMat::identity(n), standard_symplectic_form(t));
}

PolarizedLattice rescale_form(const PolarizedLattice& p, const Int& m) {
  if (m < 1) throw Error("UsageError", "rescale factor must be positive");
  return PolarizedLattice::make(p.basis(), p.form().scaled(m));
}

PolarizedLattice random_polarized(int g, const PolType& t, std::uint64_t seed) {
  if (static_cast<int>(t.size()) != g || !is_valid_type(t))
    throw Error("UsageError", "type length must equal genus");
  std::mt19937_64 rng(seed);
  int ops = static_cast<int>(30 + rng_below(rng, 21));  // <= 50 elementary operations
  IMat v = random_unimodular(2 * g, rng(), ops, 3);
  IMat e = v.transposed() * standard_symplectic_form(t) * v;
  return PolarizedLattice::make(QMat::identity(2 * g), e);
}

}  // namespace pav
