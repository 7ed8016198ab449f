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

// Shared helpers for the unit tests: an Eigen-based oracle, matrix
// comparison, and the seeded generators every property test draws from.

#ifndef PFKIT_TESTS_SUPPORT_HPP_
#define PFKIT_TESTS_SUPPORT_HPP_

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <random>

#include "pfkit/decomposition.hpp"
#include "pfkit/mat2.hpp"
#include "pfkit/pf_algebra.hpp"

namespace pfkit::testing {

inline Eigen::Matrix2cd to_eigen(const Mat2& m) {
  Eigen::Matrix2cd e;
  e << m.m00(), m.m01(), m.m10(), m.m11();
  return e;
}

inline Mat2 from_eigen(const Eigen::Matrix2cd& e) {
  return {e(0, 0), e(0, 1), e(1, 0), e(1, 1)};
}

// Eigenvalues from Eigen's general complex solver, sorted by (re, im).
inline std::array<Complex, 2> oracle_eigenvalues(const Mat2& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(to_eigen(m));
  std::array<Complex, 2> ev{solver.eigenvalues()(0), solver.eigenvalues()(1)};
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

// Hermitian square root through Eigen's self-adjoint solver.
inline Mat2 oracle_sqrt(const Mat2& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(to_eigen(m));
  return from_eigen(solver.operatorSqrt());
}

inline double distance(const Mat2& a, const Mat2& b) { return max_abs(a - b); }
inline double distance(const Vec2& a, const Vec2& b) { return max_abs(a - b); }

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_LE(::pfkit::testing::distance((a), (b)), (tol))
#define EXPECT_CNEAR(a, b, tol) EXPECT_LE(std::abs(Complex(a) - Complex(b)), (tol))

inline Complex random_complex(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

inline Mat2 random_matrix(std::mt19937_64& rng, double scale = 2.0) {
  return {random_complex(rng, scale), random_complex(rng, scale), random_complex(rng, scale),
          random_complex(rng, scale)};
}

struct RandomCase {
  PFParameters params;
  Decomposition dec;
};

// Valid parameters with real energies omega in [0.5, 3] (random sign) and
// rho in [-2, 2].
inline RandomCase random_case(std::mt19937_64& rng) {
  const PFParameters p = sample_parameters(rng);
  std::uniform_real_distribution<double> mag(0.5, 3.0);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  std::bernoulli_distribution flip(0.5);
  const double omega = flip(rng) ? mag(rng) : -mag(rng);
  return {p, decomposition_of(p, omega, shift(rng))};
}

}  // namespace pfkit::testing

#endif  // PFKIT_TESTS_SUPPORT_HPP_
