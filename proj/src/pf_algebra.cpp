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

#include "pfkit/pf_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pfkit/error.hpp"

namespace pfkit {
namespace {

double relative_scale(const Mat2& a, const Mat2& b) {
  return std::max(1.0, max_abs(a) * max_abs(b));
}

void check_algebra(const Mat2& a, const Mat2& b, double tol) {
  const AlgebraResiduals r = algebra_residuals(a, b);
  if (r.max() > tol * relative_scale(a, b)) {
    throw Error(ErrorCode::kConstraintViolated,
                "anticommutation rules fail, residual " + std::to_string(r.max()));
  }
}

// Null vector of a rank-one 2x2 matrix.
Vec2 null_vector(const Mat2& m) {
  const double row0 = std::hypot(std::abs(m.m00()), std::abs(m.m01()));
  const double row1 = std::hypot(std::abs(m.m10()), std::abs(m.m11()));
  if (row0 == 0.0 && row1 == 0.0) return {1.0, 0.0};
  return row0 >= row1 ? Vec2(m.m01(), -m.m00()) : Vec2(m.m11(), -m.m10());
}

}  // namespace

Complex PFParameters::constraint_residual() const {
  return 2.0 * a11 * b11 - a11 * a11 * b12 / a12 - b11 * b11 * a12 / b12 - 1.0;
}

void validate(const PFParameters& p, double tol) {
  if (p.a12 == Complex(0.0) || p.b12 == Complex(0.0)) {
    throw Error(ErrorCode::kZeroParameter, "a12 and b12 must be non-zero");
  }
  const double residual = std::abs(p.constraint_residual());
  if (!(residual <= tol)) {
    throw Error(ErrorCode::kConstraintViolated,
                "constraint residual " + std::to_string(residual));
  }
}

Complex sample_annulus(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> radius_sq(lo * lo, hi * hi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(std::sqrt(radius_sq(rng)), angle(rng));
}

PFParameters sample_parameters(std::mt19937_64& rng) {
  const Complex a11 = sample_annulus(rng);
  const Complex a12 = sample_annulus(rng);
  const Complex b12 = sample_annulus(rng);
  // The constraint is quadratic in b11 with roots (a11 -+ sqrt(-a12/b12)) b12/a12.
  const Complex root = std::sqrt(-a12 / b12);
  const Complex r0 = (a11 - root) * b12 / a12;
  const Complex r1 = (a11 + root) * b12 / a12;
  const Complex b11 = std::abs(r0 - a11) >= std::abs(r1 - a11) ? r0 : r1;
  return {a11, a12, b11, b12};
}

Mat2 lowering_matrix(const PFParameters& p) {
  return {p.a11, p.a12, -p.a11 * p.a11 / p.a12, -p.a11};
}

Mat2 raising_matrix(const PFParameters& p) {
  return {p.b11, p.b12, -p.b11 * p.b11 / p.b12, -p.b11};
}

double AlgebraResiduals::max() const {
  return std::max({anticommutator, a_squared, b_squared});
}

AlgebraResiduals algebra_residuals(const Mat2& a, const Mat2& b) {
  return {max_abs(anticommutator(a, b) - Mat2::identity()), max_abs(a * a),
          max_abs(b * b)};
}

PFPair build(const FamilyKind& kind) {
  struct Visitor {
    PFPair operator()(const FamilyOne& f) const {
      if (f.beta == Complex(0.0)) {
        throw Error(ErrorCode::kZeroParameter, "FamilyOne requires beta != 0");
      }
      const Complex beta = f.beta;
      PFPair pair{{0.0, 1.0, 0.0, 0.0}, {beta, -beta * beta, 1.0, -beta}, std::nullopt};
      // Same pair as General(0, 1, beta, -beta^2).
      pair.params = PFParameters{0.0, 1.0, beta, -beta * beta};
      return pair;
    }
    PFPair operator()(const FamilyTwo& f) const {
      if (f.alpha == Complex(0.0)) {
        throw Error(ErrorCode::kZeroParameter, "FamilyTwo requires alpha != 0");
      }
      const Complex alpha = f.alpha;
      return {{alpha, 1.0, -alpha * alpha, -alpha}, {0.0, 0.0, 1.0, 0.0}, std::nullopt};
    }
    PFPair operator()(const PFParameters& p) const {
      validate(p);
      return {lowering_matrix(p), raising_matrix(p), p};
    }
  };
  PFPair pair = std::visit(Visitor{}, kind);
  check_algebra(pair.a, pair.b, kAlgebraTol);
  return pair;
}

PFPair pair_from_matrices(const Mat2& a, const Mat2& b, double tol) {
  check_algebra(a, b, tol);
  return {a, b, std::nullopt};
}

PFPair standard_fermions() {
  const Mat2 c{0.0, 1.0, 0.0, 0.0};
  return {c, c.adjoint(), std::nullopt};
}

LimitReport family_two_limit(Complex alpha, const std::vector<double>& xs) {
  if (alpha == Complex(0.0)) {
    throw Error(ErrorCode::kZeroParameter, "family_two_limit requires alpha != 0");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0.0) {
      throw Error(ErrorCode::kZeroParameter, "x = 0 makes b12 vanish");
    }
    if (!(xs[i] > 0.0) || (i > 0 && !(xs[i] < xs[i - 1]))) {
      throw Error(ErrorCode::kInvalidSpec,
                  "x sequence must be positive and strictly decreasing");
    }
  }
  const PFPair target = build(FamilyTwo{alpha});
  LimitReport report;
  for (double x : xs) {
    const PFParameters p{alpha, 1.0, x, -x * x};
    const Mat2 a = lowering_matrix(p);
    const Mat2 b = raising_matrix(p);
    LimitStep step;
    step.x = x;
    step.a_distance = max_abs(a - target.a);
    step.b_distance = max_abs(b - target.b);
    step.constraint_residual = std::abs(p.constraint_residual());
    step.algebra_residual = algebra_residuals(a, b).max();
    if (!report.steps.empty()) {
      const LimitStep& prev = report.steps.back();
      if (step.a_distance > prev.a_distance || step.b_distance > prev.b_distance) {
        report.monotone = false;
      }
    }
    report.steps.push_back(step);
  }
  if (!report.steps.empty()) {
    report.final_a_distance = report.steps.back().a_distance;
    report.final_b_distance = report.steps.back().b_distance;
  }
  return report;
}

VacuumStates vacuum_states(const PFPair& pair) {
  if (pair.params && pair.params->b11 != Complex(0.0)) {
    const PFParameters& p = *pair.params;
    const Complex alpha = p.alpha();
    const Complex beta = p.beta();
    const Complex gamma = p.gamma();
    // N_phi = 1 and N_phi conj(N_psi) = a12 b11 / gamma.
    const Complex n_psi = std::conj(p.a12 * p.b11 / gamma);
    return {Vec2(1.0, -alpha), Vec2(n_psi, n_psi / std::conj(beta)), false};
  }

  Vec2 phi0 = null_vector(pair.a);
  if (std::abs(phi0.c0()) > 1e-12 * norm(phi0)) {
    phi0 = phi0 / phi0.c0();
  } else {
    phi0 = phi0 / norm(phi0);
  }
  Vec2 psi0 = null_vector(pair.b.adjoint());
  const Complex overlap = inner(psi0, phi0);
  if (std::abs(overlap) == 0.0) {
    throw Error(ErrorCode::kDegenerateParameters, "vacua are orthogonal");
  }
  psi0 = psi0 / std::conj(overlap);
  return {phi0, psi0, true};
}

ExcitedStates excited_states(const PFPair& pair, const Vec2& phi0, const Vec2& psi0) {
  return {pair.b * phi0, pair.a.adjoint() * psi0};
}

NumberOperators number_operators(const PFPair& pair) {
  const Mat2 n = pair.b * pair.a;
  return {n, pair.a.adjoint() * pair.b.adjoint()};
}

}  // namespace pfkit
