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

// H = omega N + rho 1 for a diagonalizable 2x2 Hamiltonian: the
// decomposition itself, the biorthogonal eigenbases, the metric operators
// with their closed-form square roots, and the Hermitian counterpart.

#ifndef PFKIT_DECOMPOSITION_HPP_
#define PFKIT_DECOMPOSITION_HPP_

#include <string>
#include <vector>

#include "pfkit/mat2.hpp"
#include "pfkit/pf_algebra.hpp"

namespace pfkit {

enum class Branch { kPlus, kMinus };

std::string_view to_string(Branch b);

// Eigenvalues are eps0 = rho and eps1 = omega + rho; (alpha - beta) gamma = 1
// and mu = omega gamma is the (0,1) entry of H.
struct Decomposition {
  Complex omega;
  Complex rho;
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex mu;
  Branch branch = Branch::kMinus;

  Complex eps0() const { return rho; }
  Complex eps1() const { return omega + rho; }
};

// Builds a decomposition from (alpha, beta, omega, rho); gamma = 1/(alpha-beta).
Decomposition make_decomposition(Complex alpha, Complex beta, Complex omega,
                                 Complex rho, Branch branch);

// The map H -> parameters leaves one complex gauge free. Either a12 or a11
// is pinned to the given value.
struct Gauge {
  enum class Kind { kAlpha12, kAlpha11 };
  Kind kind = Kind::kAlpha12;
  Complex value{1.0, 0.0};

  static Gauge alpha12(Complex v = 1.0) { return {Kind::kAlpha12, v}; }
  static Gauge alpha11(Complex v = 1.0) { return {Kind::kAlpha11, v}; }
};

// a12, a11 = alpha a12, b12 = -gamma^2 / a12, b11 = beta b12. Throws
// kDegenerateParameters for an alpha11 gauge when alpha = 0.
PFParameters parameters_for(const Decomposition& dec, Gauge gauge = Gauge::alpha12());

// Decomposition carried by a valid parameter set and energies omega, rho.
Decomposition decomposition_of(const PFParameters& p, Complex omega, Complex rho,
                               Branch branch = Branch::kMinus);

// [[w g a + r, w g], [-w g a b, -w g b + r]].
Mat2 assemble(const PFParameters& params, Complex omega, Complex rho);
Mat2 assemble(const Decomposition& dec);

// Inverts assemble. Minus puts rho on the first eigenvalue of the mat2
// ordering, Plus on the second. Throws kExceptionalPoint when the spectrum
// is degenerate and kUnsupportedShape when H(0,1) vanishes.
Decomposition decompose(const Mat2& h, Branch branch, double tol = kDefaultTol);

struct BiorthogonalSystem {
  Vec2 phi0;
  Vec2 phi1;
  Vec2 psi0;
  Vec2 psi1;
  Complex n_phi{1.0, 0.0};
  Complex n_psi;
  bool nullspace_fallback = false;

  // P_j f = <psi_j, f> phi_j.
  Mat2 projector(int j) const;
};

BiorthogonalSystem biorthogonal_system(const Decomposition& dec, const PFParameters& params);
BiorthogonalSystem biorthogonal_system(const Decomposition& dec);
// Vacua and excitations straight from a pair (nullspace route when needed).
BiorthogonalSystem biorthogonal_system(const PFPair& pair);

struct Diagnostic {
  std::string code;
  std::string message;
  double magnitude = 0.0;
};

// Coefficient ladder of the closed-form square root.
struct RootLadder {
  double l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0, l5 = 0.0;
  Complex off;
};

struct MetricPair {
  Mat2 s_phi;
  Mat2 s_psi;
  Mat2 s_phi_sqrt;
  Mat2 s_psi_sqrt;
  double t_ratio = 0.0;  // |gamma / a12|^2
  RootLadder p;
  RootLadder q;
  // Closed-form roots that disagreed with the spectral oracle, and anything
  // else worth surfacing.
  std::vector<Diagnostic> diagnostics;
};

// Residual above which the oracle replaces a closed-form root.
inline constexpr double kClosedFormFallback = 1e-6;

struct MetricOptions {
  // Mutation canary for the verification suite: flips the sign of the
  // off-diagonal entries of S_phi.
  bool flip_s_phi_sign = false;
};

// S_phi from its closed form for arbitrary (a11, a12, b11, b12), with
// gamma = a12 b11 - a11 b12 taken as given (no constraint), N_phi = 1.
Mat2 s_phi_formula(const PFParameters& p);

// Closed-form metrics; each root is compared with the spectral oracle.
MetricPair metrics(const Decomposition& dec, const PFParameters& params,
                   const MetricOptions& options = {});

// Metrics from their definition S = sum_n |v_n><v_n| with oracle roots.
MetricPair metrics_from_system(const BiorthogonalSystem& sys);

// Closed-form square roots on their own.
Mat2 s_phi_sqrt_closed_form(const PFParameters& p, RootLadder* ladder = nullptr);
Mat2 s_psi_sqrt_closed_form(const PFParameters& p, RootLadder* ladder = nullptr);

struct FermionicPicture {
  Mat2 c;
  Mat2 cdag;
  Mat2 n0;
  Mat2 h;
  Vec2 e0;
  Vec2 e1;
};

// c = S_psi^{1/2} a S_phi^{1/2}, h = S_psi^{1/2} H S_phi^{1/2},
// e_j = S_psi^{1/2} phi_j.
FermionicPicture fermionize(const Mat2& h, const PFPair& pair, const MetricPair& metrics);
FermionicPicture fermionize(const Decomposition& dec, const PFPair& pair,
                            const MetricPair& metrics);

struct IntertwiningReport {
  double s_psi_n = 0.0;        // |S_psi N - N^dagger S_psi|
  double s_phi_ndag = 0.0;     // |S_phi N^dagger - N S_phi|
  double s_phi_maps_psi = 0.0; // max_n |S_phi psi_n - phi_n|
  double s_psi_maps_phi = 0.0; // max_n |S_psi phi_n - psi_n|
  double duality = 0.0;        // |S_phi S_psi - 1|
  double s_phi_norm = 0.0;
  double s_phi_bound = 0.0;    // |phi0|^2 + |phi1|^2
  double s_psi_norm = 0.0;
  double s_psi_bound = 0.0;    // |psi0|^2 + |psi1|^2
  bool bounds_hold = false;

  double max_residual() const;
};

IntertwiningReport intertwining_check(const BiorthogonalSystem& sys, const PFPair& pair,
                                      const MetricPair& metrics);
IntertwiningReport intertwining_check(const Decomposition& dec, const PFParameters& params,
                                      const MetricPair& metrics);

}  // namespace pfkit

#endif  // PFKIT_DECOMPOSITION_HPP_
