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

// Symmetries of a 2x2 Hamiltonian: its commutant, the involutive element of
// the commutant, the generalized PT symmetry with
// P = [[0, x], [1/x, 0]] and T complex conjugation, and the phase of the
// spectrum (unbroken, broken, exceptional point).

#ifndef PFKIT_SYMMETRY_HPP_
#define PFKIT_SYMMETRY_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "pfkit/decomposition.hpp"
#include "pfkit/mat2.hpp"

namespace pfkit {

// All X with [X, H] = 0 for H = omega N + rho, parameterised by (x11, x12).
struct CommutantFamily {
  Complex alpha;
  Complex beta;

  Mat2 operator()(Complex x11, Complex x12) const {
    return {x11, x12, -x12 * alpha * beta, x11 - x12 * (alpha + beta)};
  }
};

// Throws kTrivialCommutant when omega or gamma vanish, since then every X
// commutes with H.
CommutantFamily commutant_family(const Decomposition& dec);
Mat2 commutant(const Decomposition& dec, Complex x11, Complex x12);

// The two commutant elements with X^2 = 1 besides +-identity.
struct Involution {
  Mat2 x;
  Mat2 minus_x;
};
// Throws kDegenerateParameters when alpha == beta.
Involution involutive_symmetry(const Decomposition& dec);

enum class Phase { kUnbroken, kBroken, kExceptionalPoint, kUnclassifiable };

std::string_view to_string(Phase p);

struct PTFormResiduals {
  double diagonal = 0.0;      // |H(0,0) - conj H(1,1)|
  double off_diagonal = 0.0;  // |H(1,0) - conj H(0,1) / x^2|
};
PTFormResiduals pt_form_residuals(const Mat2& h, double x);

// Eigenvectors are reported in the balanced normalisation (v0, 1)/sqrt|v0|,
// under which the PT action factors have unit modulus in both phases.
struct PTReport {
  bool pt_symmetric = false;
  double x = 1.0;
  double q = 0.0;  // x^2 |H01|^2 - x^4 (Im H00)^2
  Phase phase = Phase::kUnclassifiable;
  Complex eps_plus;
  Complex eps_minus;
  // Unbroken: PT v+- = lambda+- v+-. Broken: PT v+ = lambda+ v-, and back.
  Complex lambda_plus;
  Complex lambda_minus;
  Vec2 v_plus;
  Vec2 v_minus;
  double gap = 0.0;        // 2 sqrt|q| / x^2
  double threshold = 0.0;  // degeneracy threshold of the eigen-solver
};

// Throws kInvalidSpec for x = 0 and kNotInPTForm when either form condition
// fails by more than tol * max(1, |H|).
PTReport check_pt(const Mat2& h, double x = 1.0, double tol = kDefaultTol);

// The scale x > 0 for which H has the generalized PT form, if any.
std::optional<double> detect_pt_scale(const Mat2& h, double tol = kDefaultTol);

inline constexpr double kPhaseTol = 1e-9;

struct PhaseWitness {
  Phase phase = Phase::kUnclassifiable;
  std::array<Complex, 2> eigenvalues{};
  double gap = 0.0;
  double threshold = 0.0;
  std::optional<PTReport> pt;  // present when a PT form was detected
};

// Phase from the eigenvalues: coalescent within the eigen-solver threshold is
// an exceptional point, two real eigenvalues are unbroken, a conjugate pair
// is broken and anything else is unclassifiable. An eigenvalue counts as real
// when |Im| <= (tol / 2)(1 + |Re|). PT-form inputs are cross-checked against
// the sign of Q.
PhaseWitness classify_phase(const Mat2& h, double tol = kPhaseTol);

}  // namespace pfkit

#endif  // PFKIT_SYMMETRY_HPP_
