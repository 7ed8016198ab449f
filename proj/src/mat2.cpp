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

#include "pfkit/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfkit/error.hpp"

namespace pfkit {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// sqrt of the (halved) discriminant: eigenvalues are tr/2 +- root.
Complex half_discriminant_root(const Mat2& m) {
  const Complex half_diff = 0.5 * (m.m00() - m.m11());
  return std::sqrt(half_diff * half_diff + m.m01() * m.m10());
}

Vec2 eigenvector_for(const Mat2& m, Complex lambda) {
  // Either row of (M - lambda) gives a null vector; take the larger one.
  const Vec2 from_row0(m.m01(), lambda - m.m00());
  const Vec2 from_row1(lambda - m.m11(), m.m10());
  const Vec2& v = norm(from_row0) >= norm(from_row1) ? from_row0 : from_row1;
  const double n = norm(v);
  if (n == 0.0) {
    throw Error(ErrorCode::kEigenvectorDegenerate, "eigenvector vanished");
  }
  return v / n;
}

}  // namespace

Vec2::Vec2(Complex c0, Complex c1) : c_{c0, c1} {
  if (!finite(c0) || !finite(c1)) {
    throw Error(ErrorCode::kNonFinite, "Vec2 component is not finite");
  }
}

Mat2::Mat2(Complex m00, Complex m01, Complex m10, Complex m11)
    : m_{m00, m01, m10, m11} {
  if (!finite(m00) || !finite(m01) || !finite(m10) || !finite(m11)) {
    throw Error(ErrorCode::kNonFinite, "Mat2 entry is not finite");
  }
}

Mat2 Mat2::operator+(const Mat2& o) const {
  return {m_[0] + o.m_[0], m_[1] + o.m_[1], m_[2] + o.m_[2], m_[3] + o.m_[3]};
}

Mat2 Mat2::operator-(const Mat2& o) const {
  return {m_[0] - o.m_[0], m_[1] - o.m_[1], m_[2] - o.m_[2], m_[3] - o.m_[3]};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
          m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
}

Vec2 Mat2::operator*(const Vec2& v) const {
  return {m_[0] * v.c0() + m_[1] * v.c1(), m_[2] * v.c0() + m_[3] * v.c1()};
}

Mat2 Mat2::operator*(Complex s) const {
  return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s};
}

Mat2 Mat2::operator/(Complex s) const {
  return {m_[0] / s, m_[1] / s, m_[2] / s, m_[3] / s};
}

Mat2 anticommutator(const Mat2& a, const Mat2& b) { return a * b + b * a; }

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Complex inner(const Vec2& u, const Vec2& v) {
  return std::conj(u.c0()) * v.c0() + std::conj(u.c1()) * v.c1();
}

Mat2 outer(const Vec2& u, const Vec2& v) {
  return {u.c0() * std::conj(v.c0()), u.c0() * std::conj(v.c1()),
          u.c1() * std::conj(v.c0()), u.c1() * std::conj(v.c1())};
}

double max_abs(const Mat2& m) {
  return std::max({std::abs(m.m00()), std::abs(m.m01()), std::abs(m.m10()),
                   std::abs(m.m11())});
}

double max_abs(const Vec2& v) { return std::max(std::abs(v.c0()), std::abs(v.c1())); }

double norm(const Vec2& v) { return std::hypot(std::abs(v.c0()), std::abs(v.c1())); }

double op_norm(const Mat2& m) {
  // Largest singular value from the Hermitian M^dagger M.
  const Mat2 g = m.adjoint() * m;
  const double mean = 0.5 * (g.m00().real() + g.m11().real());
  const double half_diff = 0.5 * (g.m00().real() - g.m11().real());
  return std::sqrt(mean + std::hypot(half_diff, std::abs(g.m01())));
}

double hermiticity_residual(const Mat2& m) { return max_abs(m - m.adjoint()); }

std::array<Complex, 2> eigenvalues(const Mat2& m, double tol) {
  const Complex half_trace = 0.5 * m.trace();
  const Complex root = half_discriminant_root(m);
  // Root with the larger modulus first, the other from the determinant to
  // avoid cancellation.
  const Complex big = std::real(std::conj(half_trace) * root) >= 0.0
                          ? half_trace + root
                          : half_trace - root;
  const Complex small = std::abs(big) > 0.0 ? m.det() / big : half_trace;

  const double tie = tol * (1.0 + std::abs(m.trace()));
  auto less = [tie](Complex a, Complex b) {
    if (std::abs(a.real() - b.real()) > tie) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  return less(small, big) ? std::array<Complex, 2>{small, big}
                          : std::array<Complex, 2>{big, small};
}

double spectral_gap(const Mat2& m) { return 2.0 * std::abs(half_discriminant_root(m)); }

double degeneracy_threshold(const Mat2& m, double tol) {
  return tol * (1.0 + std::abs(m.trace()));
}

EigenResult eigenpairs(const Mat2& m, double tol) {
  const double gap = spectral_gap(m);
  const double threshold = degeneracy_threshold(m, tol);
  const auto values = eigenvalues(m, tol);
  if (gap < threshold) {
    return DegenerateSpectrum{0.5 * (values[0] + values[1]), gap, threshold};
  }
  return EigenPairs{{EigenPair{values[0], eigenvector_for(m, values[0])},
                     EigenPair{values[1], eigenvector_for(m, values[1])}},
                    gap};
}

void require_hermitian(const Mat2& m, double tol) {
  const double residual = hermiticity_residual(m);
  if (residual > tol * std::max(1.0, max_abs(m))) {
    throw Error(ErrorCode::kNotHermitian,
                "|M - M^dagger| = " + std::to_string(residual));
  }
}

bool is_positive_definite(const Mat2& m, double tol) {
  require_hermitian(m, tol);
  return m.m00().real() > tol && m.det().real() > tol;
}

Mat2 hermitian_sqrt_oracle(const Mat2& m, double tol) {
  require_hermitian(m, tol);
  const Mat2 h = 0.5 * (m + m.adjoint());
  const double a = h.m00().real();
  const double d = h.m11().real();
  const Complex b = h.m10();
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  const double mean = 0.5 * (a + d);
  const double lmax = mean + radius;
  if (!(lmax > 0.0)) {
    throw Error(ErrorCode::kNotPositiveDefinite, "largest eigenvalue <= 0");
  }
  const double lmin = (a * d - std::norm(b)) / lmax;
  if (!(lmin > 0.0)) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "smallest eigenvalue " + std::to_string(lmin));
  }
  if (radius == 0.0) return Mat2::identity() * std::sqrt(lmax);

  const Vec2 v = eigenvector_for(h, lmax);
  const Mat2 p_max = outer(v, v);
  const Mat2 p_min = Mat2::identity() - p_max;
  const Mat2 root = p_max * std::sqrt(lmax) + p_min * std::sqrt(lmin);
  return 0.5 * (root + root.adjoint());
}

}  // namespace pfkit
