#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "obsq/numeric.hpp"

namespace obsq {

// Dense fixed-size square matrix. Everything in this project is 2x2 or 4x4,
// so a tiny value type beats a linear-algebra dependency.
template <typename Scalar, std::size_t N>
class Mat {
 public:
  Mat() = default;  // zero matrix

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Scalar{1};
    return m;
  }

  static Mat diagonal(const std::array<Scalar, N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return e_[r * N + c];
  }

  Mat operator+(const Mat& rhs) const {
    Mat out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = e_[i] + rhs.e_[i];
    return out;
  }

  Mat operator-(const Mat& rhs) const {
    Mat out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
  }

  Mat operator*(const Mat& rhs) const {
    Mat out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Scalar f = (*this)(r, k);
        for (std::size_t c = 0; c < N; ++c) out(r, c) += f * rhs(k, c);
      }
    return out;
  }

  Mat operator*(const Scalar& s) const {
    Mat out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = e_[i] * s;
    return out;
  }

  std::array<Scalar, N> operator*(const std::array<Scalar, N>& v) const {
    std::array<Scalar, N> out{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  Mat transpose() const {
    Mat out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  bool operator==(const Mat&) const = default;

 private:
  std::array<Scalar, N * N> e_{};
};

using Mat2c = Mat<Complex, 2>;
using Mat4c = Mat<Complex, 4>;
using Mat2r = Mat<double, 2>;
using Mat4r = Mat<double, 4>;

template <std::size_t N>
Mat<Complex, N> adjoint(const Mat<Complex, N>& m) {
  Mat<Complex, N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

template <typename Scalar, std::size_t N>
Scalar trace(const Mat<Scalar, N>& m) {
  Scalar t{};
  for (std::size_t i = 0; i < N; ++i) t += m(i, i);
  return t;
}

template <typename Scalar, std::size_t N>
double frobenius_norm(const Mat<Scalar, N>& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      const double a = std::abs(m(r, c));
      s += a * a;
    }
  return std::sqrt(s);
}

template <typename Scalar, std::size_t N>
double max_abs_diff(const Mat<Scalar, N>& a, const Mat<Scalar, N>& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

// Gaussian elimination with partial pivoting; exact zeros short-circuit.
template <typename Scalar, std::size_t N>
Scalar determinant(Mat<Scalar, N> m) {
  Scalar det{1};
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) == 0.0) return Scalar{0};
    if (pivot != col) {
      for (std::size_t c = col; c < N; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < N; ++r) {
      const Scalar f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < N; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

template <std::size_t N>
Mat<Complex, N> to_complex(const Mat<double, N>& m) {
  Mat<Complex, N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace obsq
