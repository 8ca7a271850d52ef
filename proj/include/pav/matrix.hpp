#pragma once

#include <cstdint>
#include <vector>

#include "pav/numeric.hpp"

namespace pav {

// Dense row-major matrix over an exact GMP type. Vectors are rows throughout
// the library; a linear map M acts as x -> x*M.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool operator==(const Mat&) const = default;

  Mat operator*(const Mat& o) const {
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  Mat operator-() const {
    Mat out(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
  }

  Mat scaled(const T& s) const {
    Mat out(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
  }

  Mat transposed() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  // row i += s * row j
  void row_axpy(int i, const T& s, int j) {
    for (int k = 0; k < c_; ++k) (*this)(i, k) += s * (*this)(j, k);
  }

  // col i += s * col j
  void col_axpy(int i, const T& s, int j) {
    for (int k = 0; k < r_; ++k) (*this)(k, i) += s * (*this)(k, j);
  }

  void negate_row(int i) {
    for (int k = 0; k < c_; ++k) (*this)(i, k) = -(*this)(i, k);
  }

  void negate_col(int i) {
    for (int k = 0; k < r_; ++k) (*this)(k, i) = -(*this)(k, i);
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using QVec = std::vector<Rat>;
using IVec = std::vector<Int>;

QMat to_rational(const IMat& m);

// Fails (nullopt) if any entry has denominator > 1.
std::optional<IMat> to_integral(const QMat& m);

Rat det(const QMat& m);
Int det(const IMat& m);

// Throws Error("SingularMatrix") if not invertible.
QMat inverse(const QMat& m);

bool is_zero(const QMat& m);

QVec mul_vec(const QVec& x, const QMat& m);

// x * M * y^T
Rat form_value(const QVec& x, const QMat& m, const QVec& y);

// Canonical row-style Hermite normal form: pivots positive, entries above each
// pivot reduced into [0, pivot), zero rows dropped. Unique per row span.
struct Hnf {
  IMat h;
  int rank = 0;
};
Hnf row_hnf(IMat a);

// u * a * v = s with u, v unimodular and s diagonal, s(0,0) | s(1,1) | ...
struct Snf {
  IMat s, u, v;
};
Snf smith_normal_form(IMat a);

// Nontrivial (> 1) diagonal invariant factors, ascending.
IVec elementary_divisors(const IMat& a);

// Product of `ops` random elementary operations (row adds with coefficients in
// [-bound, bound] \ {0}, swaps, sign flips); deterministic in seed.
IMat random_unimodular(int n, std::uint64_t seed, int ops = 50, int bound = 3);

}  // namespace pav
