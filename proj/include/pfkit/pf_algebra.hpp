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

// Pseudo-fermion operator pairs: 2x2 matrices a, b with {a,b} = 1 and
// a^2 = b^2 = 0, where b need not be a^dagger.

#ifndef PFKIT_PF_ALGEBRA_HPP_
#define PFKIT_PF_ALGEBRA_HPP_

#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "pfkit/mat2.hpp"

namespace pfkit {

// Parameters of the general family
//   a = [[a11, a12], [-a11^2/a12, -a11]],  b = [[b11, b12], [-b11^2/b12, -b11]]
// subject to 2 a11 b11 - a11^2 b12/a12 - b11^2 a12/b12 = 1.
struct PFParameters {
  Complex a11;
  Complex a12;
  Complex b11;
  Complex b12;

  Complex alpha() const { return a11 / a12; }
  Complex beta() const { return b11 / b12; }
  Complex gamma() const { return a12 * b11 - a11 * b12; }

  // Left-hand side minus one of the defining constraint.
  Complex constraint_residual() const;
};

inline constexpr double kConstraintTol = 1e-10;

// Uniform draw from the annulus lo <= |z| <= hi.
Complex sample_annulus(std::mt19937_64& rng, double lo = 0.2, double hi = 2.0);

// Random valid parameters: a11, a12, b12 from the annulus, b11 the root of
// the constraint farther from a11 (keeps alpha away from beta).
PFParameters sample_parameters(std::mt19937_64& rng);

// Throws kZeroParameter if a12 or b12 vanish and kConstraintViolated if the
// constraint residual exceeds tol.
void validate(const PFParameters& p, double tol = kConstraintTol);

// a = [[0,1],[0,0]], b = [[beta, -beta^2],[1, -beta]].
struct FamilyOne {
  Complex beta;
};
// a = [[alpha, 1],[-alpha^2, -alpha]], b = [[0,0],[1,0]].
struct FamilyTwo {
  Complex alpha;
};
using FamilyKind = std::variant<FamilyOne, FamilyTwo, PFParameters>;

struct PFPair {
  Mat2 a;
  Mat2 b;
  // Present whenever the pair belongs to the general family.
  std::optional<PFParameters> params;
};

inline constexpr double kAlgebraTol = 1e-10;

// Builds the literal matrices of the requested family and checks the
// anticommutation rules before returning.
PFPair build(const FamilyKind& kind);

// General-family matrices without any validation.
Mat2 lowering_matrix(const PFParameters& p);
Mat2 raising_matrix(const PFParameters& p);

// Wraps an arbitrary (a, b) after checking {a,b}=1, a^2=b^2=0 within tol
// (relative to |a| |b|). Throws kConstraintViolated otherwise.
PFPair pair_from_matrices(const Mat2& a, const Mat2& b, double tol = kAlgebraTol);

// Standard fermions: a = [[0,1],[0,0]], b = a^dagger.
PFPair standard_fermions();

struct AlgebraResiduals {
  double anticommutator = 0.0;  // |{a,b} - 1|
  double a_squared = 0.0;       // |a^2|
  double b_squared = 0.0;       // |b^2|
  double max() const;
};
AlgebraResiduals algebra_residuals(const Mat2& a, const Mat2& b);

struct LimitStep {
  double x = 0.0;
  double a_distance = 0.0;  // |a(x) - a(2)|
  double b_distance = 0.0;  // |b(x) - b(2)|
  double constraint_residual = 0.0;
  double algebra_residual = 0.0;
};

struct LimitReport {
  std::vector<LimitStep> steps;
  bool monotone = true;  // both distances non-increasing along the sequence
  double final_a_distance = 0.0;
  double final_b_distance = 0.0;
};

// Follows General(a11=alpha, a12=1, b11=x, b12=-x^2) towards FamilyTwo(alpha)
// along a strictly decreasing positive sequence. Matrices are built without
// the constraint gate, since the constraint only holds in the limit.
LimitReport family_two_limit(Complex alpha, const std::vector<double>& xs);

struct VacuumStates {
  Vec2 phi0;
  Vec2 psi0;
  bool nullspace_fallback = false;
};

// phi0 with a phi0 = 0 and psi0 with b^dagger psi0 = 0, normalised so that
// <psi0, phi0> = 1 and (for the general family) phi0 = (1, -alpha).
VacuumStates vacuum_states(const PFPair& pair);

struct ExcitedStates {
  Vec2 phi1;
  Vec2 psi1;
};
// phi1 = b phi0, psi1 = a^dagger psi0.
ExcitedStates excited_states(const PFPair& pair, const Vec2& phi0, const Vec2& psi0);

struct NumberOperators {
  Mat2 n;      // b a
  Mat2 n_dag;  // a^dagger b^dagger
};
NumberOperators number_operators(const PFPair& pair);

}  // namespace pfkit

#endif  // PFKIT_PF_ALGEBRA_HPP_
