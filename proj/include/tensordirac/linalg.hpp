#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "tensordirac/scalar.hpp"

namespace tensordirac {

/// Rank by Gaussian elimination. Exact on the rational backend; on the float
/// backend pivots with magnitude <= tol count as zero.
template <class S>
int matrix_rank(std::vector<std::vector<S>> rows, double tol = 1e-10) {
  using Traits = ScalarTraits<S>;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    double best = 0.0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      double mag = Traits::magnitude(rows[i][col]);
      bool nonzero = Traits::exact ? !Traits::is_zero(rows[i][col]) : mag > tol;
      if (nonzero && (pivot == rows.size() || mag > best)) {
        pivot = i;
        best = mag;
        if constexpr (Traits::exact) break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (Traits::is_zero(rows[i][col])) continue;
      S factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) {
        S delta = factor * rows[r][j];
        rows[i][j] -= delta;
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// 4x4 complex matrix; entry (n, k) is row n (upper index), column k
/// (lower index).
template <class S>
class Mat4 {
 public:
  using Traits = ScalarTraits<S>;

  Mat4() {
    for (auto& row : a_) row.fill(Traits::zero());
  }
  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.a_[i][i] = Traits::one();
    return m;
  }

  const S& operator()(int n, int k) const { return a_[n][k]; }
  S& operator()(int n, int k) { return a_[n][k]; }

  Mat4& operator+=(const Mat4& o) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a_[i][j] += o.a_[i][j];
    return *this;
  }
  Mat4& operator-=(const Mat4& o) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a_[i][j] -= o.a_[i][j];
    return *this;
  }
  friend Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
  friend Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
  friend Mat4 operator*(const S& s, Mat4 m) {
    for (auto& row : m.a_)
      for (auto& x : row) x = s * x;
    return m;
  }
  friend Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 z;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        S acc = Traits::zero();
        for (int k = 0; k < 4; ++k) acc += x.a_[i][k] * y.a_[k][j];
        z.a_[i][j] = acc;
      }
    return z;
  }
  friend std::array<S, 4> operator*(const Mat4& m, const std::array<S, 4>& v) {
    std::array<S, 4> out;
    for (int i = 0; i < 4; ++i) {
      S acc = Traits::zero();
      for (int k = 0; k < 4; ++k) acc += m.a_[i][k] * v[k];
      out[i] = acc;
    }
    return out;
  }
  friend bool operator==(const Mat4& x, const Mat4& y) { return x.a_ == y.a_; }

  Mat4 conj_transpose() const {
    Mat4 t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t.a_[j][i] = Traits::conj(a_[i][j]);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& row : a_)
      for (const auto& x : row) m = std::max(m, Traits::magnitude(x));
    return m;
  }

  /// Entries as a flat row-major vector (for rank tests over C^16).
  std::vector<S> flatten() const {
    std::vector<S> v;
    v.reserve(16);
    for (const auto& row : a_)
      for (const auto& x : row) v.push_back(x);
    return v;
  }

 private:
  std::array<std::array<S, 4>, 4> a_;
};

template <class S>
double distance(const Mat4<S>& a, const Mat4<S>& b) {
  return (a - b).max_abs();
}

}  // namespace tensordirac
