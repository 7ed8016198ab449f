// Copyright 2026 The pfkit Authors
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

// Exact-shape 2x2 complex linear algebra. Everything the rest of the
// library needs lives here: arithmetic, a robust eigen-solver for 2x2
// matrices, positivity tests, and a spectral square-root used as an oracle
// for closed-form results.

#ifndef PFKIT_MAT2_HPP_
#define PFKIT_MAT2_HPP_

#include <array>
#include <complex>
#include <variant>

namespace pfkit {

using Complex = std::complex<double>;

// Relative tolerance used wherever the caller does not supply one.
inline constexpr double kDefaultTol = 1e-10;

inline constexpr Complex kI{0.0, 1.0};

class Vec2 {
 public:
  Vec2() = default;
  // Throws Error(kNonFinite) on NaN/Inf components.
  Vec2(Complex c0, Complex c1);

  Complex c0() const { return c_[0]; }
  Complex c1() const { return c_[1]; }
  Complex operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  Vec2 operator+(const Vec2& o) const { return {c_[0] + o.c_[0], c_[1] + o.c_[1]}; }
  Vec2 operator-(const Vec2& o) const { return {c_[0] - o.c_[0], c_[1] - o.c_[1]}; }
  Vec2 operator*(Complex s) const { return {c_[0] * s, c_[1] * s}; }
  friend Vec2 operator*(Complex s, const Vec2& v) { return v * s; }
  Vec2 operator/(Complex s) const { return {c_[0] / s, c_[1] / s}; }
  Vec2 conj() const { return {std::conj(c_[0]), std::conj(c_[1])}; }

 private:
  std::array<Complex, 2> c_{};
};

class Mat2 {
 public:
  Mat2() = default;
  // Row-major entries. Throws Error(kNonFinite) on NaN/Inf.
  Mat2(Complex m00, Complex m01, Complex m10, Complex m11);

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

  Complex m00() const { return m_[0]; }
  Complex m01() const { return m_[1]; }
  Complex m10() const { return m_[2]; }
  Complex m11() const { return m_[3]; }
  Complex operator()(int row, int col) const {
    return m_[static_cast<std::size_t>(2 * row + col)];
  }

  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Vec2 operator*(const Vec2& v) const;
  Mat2 operator*(Complex s) const;
  friend Mat2 operator*(Complex s, const Mat2& m) { return m * s; }
  Mat2 operator/(Complex s) const;
  Mat2 operator-() const { return *this * Complex(-1.0); }

  Mat2 adjoint() const { return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])}; }
  Mat2 conj() const { return {std::conj(m_[0]), std::conj(m_[1]), std::conj(m_[2]), std::conj(m_[3])}; }
  Complex trace() const { return m_[0] + m_[3]; }
  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  bool operator==(const Mat2& o) const { return m_ == o.m_; }

 private:
  std::array<Complex, 4> m_{};
};

// AB + BA.
Mat2 anticommutator(const Mat2& a, const Mat2& b);
// AB - BA.
Mat2 commutator(const Mat2& a, const Mat2& b);

// <u, v> = conj(u0) v0 + conj(u1) v1 (antilinear in the first slot).
Complex inner(const Vec2& u, const Vec2& v);
// u v^dagger, i.e. the rank-one map f -> <v, f> u.
Mat2 outer(const Vec2& u, const Vec2& v);

double max_abs(const Mat2& m);
double max_abs(const Vec2& v);
double norm(const Vec2& v);
// Spectral (operator 2-) norm.
double op_norm(const Mat2& m);
// max |M - M^dagger|.
double hermiticity_residual(const Mat2& m);

// --- spectrum -------------------------------------------------------------

struct EigenPair {
  Complex value;
  Vec2 vector;  // unit norm
};

struct EigenPairs {
  std::array<EigenPair, 2> pairs;
  double gap = 0.0;  // |lambda_1 - lambda_0|
};

// Returned instead of eigenpairs when the two eigenvalues coalesce within
// tolerance. Defective (Jordan) matrices always land here.
struct DegenerateSpectrum {
  Complex value;  // mean of the two computed eigenvalues
  double gap = 0.0;
  double threshold = 0.0;
};

using EigenResult = std::variant<EigenPairs, DegenerateSpectrum>;

// Both eigenvalues, ordered by (re, im) lexicographically; real parts closer
// than tol * (1 + |tr M|) count as tied and fall through to the imaginary
// part. No degeneracy check.
std::array<Complex, 2> eigenvalues(const Mat2& m, double tol = kDefaultTol);

// |lambda_1 - lambda_0| computed from the discriminant.
double spectral_gap(const Mat2& m);

// Degeneracy threshold tol * (1 + |tr M|) used by eigenpairs and every
// exceptional-point test built on it.
double degeneracy_threshold(const Mat2& m, double tol);

EigenResult eigenpairs(const Mat2& m, double tol = kDefaultTol);

inline bool is_degenerate(const EigenResult& r) {
  return std::holds_alternative<DegenerateSpectrum>(r);
}

// Throws Error(kNotHermitian) unless |M - M^dagger| <= tol * max(1, |M|).
void require_hermitian(const Mat2& m, double tol);

// Sylvester's criterion: m00 > tol and det M > tol.
bool is_positive_definite(const Mat2& m, double tol = kDefaultTol);

// Unique Hermitian positive-definite square root by spectral decomposition.
// Throws kNotHermitian / kNotPositiveDefinite.
Mat2 hermitian_sqrt_oracle(const Mat2& m, double tol = kDefaultTol);

}  // namespace pfkit

#endif  // PFKIT_MAT2_HPP_
