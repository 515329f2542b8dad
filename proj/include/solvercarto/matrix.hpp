// Copyright 2026 The Solvercarto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOLVERCARTO_MATRIX_H_
#define SOLVERCARTO_MATRIX_H_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace solvercarto {

using Vec = std::vector<double>;

// Dense row-major matrix. The games and networks here are tiny, so a flat
// vector with inline accessors is all we need.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}
  Matrix(int rows, int cols, Vec data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows_) * cols_)
      throw std::invalid_argument("Matrix: data size does not match shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // y = M x
  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vec y(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      double acc = 0.0;
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  // y = M^T x
  Vec apply_transposed(const Vec& x) const {
    if (static_cast<int>(x.size()) != rows_)
      throw std::invalid_argument("Matrix::apply_transposed: dimension mismatch");
    Vec y(cols_, 0.0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[j] += (*this)(i, j) * x[i];
    return y;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

  double mean() const {
    if (data_.empty()) return 0.0;
    double s = 0.0;
    for (double v : data_) s += v;
    return s / static_cast<double>(data_.size());
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return zip(a, b, +1.0); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return zip(a, b, -1.0); }
  friend Matrix operator*(double c, const Matrix& a) {
    Matrix r = a;
    for (double& v : r.data_) v *= c;
    return r;
  }

 private:
  static Matrix zip(const Matrix& a, const Matrix& b, double sign) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + sign * b.data_[k];
    return r;
  }

  int rows_, cols_;
  Vec data_;
};

// Small vector helpers shared across modules.
inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec concat(const Vec& a, const Vec& b) {
  Vec r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline void axpy(double c, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

inline bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace solvercarto

#endif  // SOLVERCARTO_MATRIX_H_
