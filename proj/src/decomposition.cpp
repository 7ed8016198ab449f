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

#include "pfkit/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfkit/error.hpp"

namespace pfkit {
namespace {

constexpr double kDriftThreshold = 1e-9;

// Both ladders are 0/0 when the metric is a multiple of the identity.
Mat2 scalar_root(double a, double d) { return Mat2::diag(std::sqrt(a), std::sqrt(d)); }

// Eigenvalue sum and the cancellation-free smaller one: l2 = 4 det / l3.
double smaller_ladder(double a, double d, Complex b, double l3) {
  const double det = a * d - std::norm(b);
  return std::max(0.0, 4.0 * det / l3);
}


}  // namespace

std::string_view to_string(Branch b) { return b == Branch::kPlus ? "plus" : "minus"; }

Decomposition make_decomposition(Complex alpha, Complex beta, Complex omega, Complex rho,
                                 Branch branch) {
  if (alpha == beta) {
    throw Error(ErrorCode::kEigenvectorDegenerate, "alpha == beta");
  }
  const Complex gamma = 1.0 / (alpha - beta);
  return {omega, rho, alpha, beta, gamma, omega * gamma, branch};
}

PFParameters parameters_for(const Decomposition& dec, Gauge gauge) {
  if (gauge.value == Complex(0.0)) {
    throw Error(ErrorCode::kZeroParameter, "gauge value must be non-zero");
  }
  Complex a12 = gauge.value;
  if (gauge.kind == Gauge::Kind::kAlpha11) {
    if (dec.alpha == Complex(0.0)) {
      throw Error(ErrorCode::kDegenerateParameters, "alpha11 gauge needs alpha != 0");
    }
    a12 = gauge.value / dec.alpha;
  }
  // -gamma^2 = a12 b12 is the constraint in disguise.
  const Complex b12 = -dec.gamma * dec.gamma / a12;
  const Complex a11 = gauge.kind == Gauge::Kind::kAlpha11 ? gauge.value : dec.alpha * a12;
  return {a11, a12, dec.beta * b12, b12};
}

Decomposition decomposition_of(const PFParameters& p, Complex omega, Complex rho,
                               Branch branch) {
  validate(p);
  const Complex gamma = p.gamma();
  return {omega, rho, p.alpha(), p.beta(), gamma, omega * gamma, branch};
}

Mat2 assemble(const PFParameters& params, Complex omega, Complex rho) {
  const Complex alpha = params.alpha();
  const Complex beta = params.beta();
  const Complex mu = omega * params.gamma();
  return {mu * alpha + rho, mu, -mu * alpha * beta, -mu * beta + rho};
}

Mat2 assemble(const Decomposition& dec) {
  const Complex mu = dec.mu;
  return {mu * dec.alpha + dec.rho, mu, -mu * dec.alpha * dec.beta, -mu * dec.beta + dec.rho};
}

Decomposition decompose(const Mat2& h, Branch branch, double tol) {
  if (std::abs(h.m01()) <= tol * std::max(1.0, max_abs(h))) {
    throw Error(ErrorCode::kUnsupportedShape, "H(0,1) vanishes");
  }
  const EigenResult spectrum = eigenpairs(h, tol);
  if (const auto* deg = std::get_if<DegenerateSpectrum>(&spectrum)) {
    throw Error(ErrorCode::kExceptionalPoint,
                "eigenvalues coalesce (gap " + std::to_string(deg->gap) + ")");
  }
  const auto& pairs = std::get<EigenPairs>(spectrum).pairs;
  const std::size_t own = branch == Branch::kMinus ? 0 : 1;
  const Complex rho = pairs[own].value;
  const Complex other = pairs[1 - own].value;
  // Eigenvector (1, -alpha): first row gives h00 - h01 alpha = lambda.
  const Complex alpha = (h.m00() - rho) / h.m01();
  const Complex beta = (h.m00() - other) / h.m01();
  Decomposition dec = make_decomposition(alpha, beta, other - rho, rho, branch);
  // Exactly the input entry, rather than omega * gamma after rounding.
  dec.mu = h.m01();
  return dec;
}

Mat2 BiorthogonalSystem::projector(int j) const {
  return j == 0 ? outer(phi0, psi0) : outer(phi1, psi1);
}

BiorthogonalSystem biorthogonal_system(const Decomposition& dec, const PFParameters& params) {
  BiorthogonalSystem sys;
  if (params.b11 == Complex(0.0)) {
    const PFPair pair{lowering_matrix(params), raising_matrix(params), params};
    sys = biorthogonal_system(pair);
    return sys;
  }
  const Complex gamma = dec.gamma;
  sys.n_phi = 1.0;
  sys.n_psi = std::conj(params.a12 * params.b11 / gamma);
  sys.phi0 = Vec2(1.0, -dec.alpha);
  sys.phi1 = Vec2(1.0, -dec.beta) * (gamma / params.a12);
  sys.psi0 = Vec2(1.0, 1.0 / std::conj(dec.beta)) * sys.n_psi;
  sys.psi1 = Vec2(std::conj(dec.alpha), 1.0) *
             (std::conj(gamma) * sys.n_psi / std::conj(params.b11));
  return sys;
}

BiorthogonalSystem biorthogonal_system(const Decomposition& dec) {
  return biorthogonal_system(dec, parameters_for(dec));
}

BiorthogonalSystem biorthogonal_system(const PFPair& pair) {
  const VacuumStates vac = vacuum_states(pair);
  const ExcitedStates exc = excited_states(pair, vac.phi0, vac.psi0);
  BiorthogonalSystem sys;
  sys.phi0 = vac.phi0;
  sys.psi0 = vac.psi0;
  sys.phi1 = exc.phi1;
  sys.psi1 = exc.psi1;
  sys.n_phi = vac.phi0.c0();
  sys.n_psi = vac.psi0.c0();
  sys.nullspace_fallback = vac.nullspace_fallback;
  return sys;
}

Mat2 s_phi_formula(const PFParameters& p) {
  const Complex alpha = p.alpha();
  const Complex beta = p.beta();
  const double t = std::norm(p.gamma() / p.a12);
  const Complex off = -alpha - beta * t;
  return {1.0 + t, std::conj(off), off, std::norm(alpha) + t * std::norm(beta)};
}

namespace {

// S_psi written without 1/beta, so beta = 0 is harmless. N_phi = 1.
Mat2 s_psi_formula(const PFParameters& p) {
  const Complex alpha = p.alpha();
  const Complex beta = p.beta();
  const double g = std::norm(p.gamma());
  const double a12_sq = std::norm(p.a12);
  const Complex off = g * beta + alpha * a12_sq;
  return {g * std::norm(beta) + std::norm(p.a11), std::conj(off), off, g + a12_sq};
}

}  // namespace

Mat2 s_phi_sqrt_closed_form(const PFParameters& p, RootLadder* ladder) {
  const Complex alpha = p.alpha();
  const Complex beta = p.beta();
  const double t = std::norm(p.gamma() / p.a12);
  const double a = 1.0 + t;
  const double d = std::norm(alpha) + t * std::norm(beta);
  const Complex mix = alpha + t * beta;

  RootLadder l;
  l.l1 = (a - d) * (a - d) + 4.0 * std::norm(mix);
  const double r1 = std::sqrt(l.l1);
  l.l3 = a + d + r1;
  l.l2 = smaller_ladder(a, d, -mix, l.l3);
  l.l4 = a - d - r1;
  l.l5 = a - d + r1;
  l.off = (std::sqrt(l.l2) - std::sqrt(l.l3)) * mix;
  if (ladder) *ladder = l;
  if (l.l1 == 0.0) return scalar_root(a, d);

  const double s2 = std::sqrt(l.l2);
  const double s3 = std::sqrt(l.l3);
  const double scale = 1.0 / std::sqrt(2.0 * l.l1);
  return Mat2{(s3 * l.l5 - s2 * l.l4) / 2.0, std::conj(l.off), l.off,
              (s2 * l.l5 - s3 * l.l4) / 2.0} *
         scale;
}

Mat2 s_psi_sqrt_closed_form(const PFParameters& p, RootLadder* ladder) {
  const Complex alpha = p.alpha();
  const Complex beta = p.beta();
  const double g = std::norm(p.gamma());
  const double a12_sq = std::norm(p.a12);
  const double a = g * std::norm(beta) + std::norm(p.a11);
  const double d = g + a12_sq;
  const Complex mix = g * beta + alpha * a12_sq;

  RootLadder l;
  l.l1 = (a - d) * (a - d) + 4.0 * std::norm(mix);
  const double r1 = std::sqrt(l.l1);
  l.l3 = a + d + r1;
  l.l2 = smaller_ladder(a, d, mix, l.l3);
  l.l4 = d - a - r1;
  l.l5 = d - a + r1;
  l.off = (std::sqrt(l.l3) - std::sqrt(l.l2)) * mix;
  if (ladder) *ladder = l;
  if (l.l1 == 0.0) return scalar_root(a, d);

  const double s2 = std::sqrt(l.l2);
  const double s3 = std::sqrt(l.l3);
  const double scale = 1.0 / std::sqrt(2.0 * l.l1);
  return Mat2{(s2 * l.l5 - s3 * l.l4) / 2.0, std::conj(l.off), l.off,
              (s3 * l.l5 - s2 * l.l4) / 2.0} *
         scale;
}

namespace {

// Arbitration between a closed-form root and the spectral oracle.
Mat2 arbitrate(const char* name, const Mat2& s, const Mat2& closed,
               std::vector<Diagnostic>& diagnostics) {
  Mat2 oracle;
  try {
    oracle = hermitian_sqrt_oracle(s, kDefaultTol);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternal, std::string(name) + " is not a metric: " + e.what());
  }
  const double residual = max_abs(closed - oracle) / std::max(1.0, max_abs(oracle));
  if (residual > kClosedFormFallback) {
    diagnostics.push_back({"ClosedFormDiscrepancy",
                           std::string(name) + " closed form replaced by spectral root",
                           residual});
    return oracle;
  }
  if (residual > kDriftThreshold) {
    diagnostics.push_back(
        {"ClosedFormDrift", std::string(name) + " closed form drifts from spectral root",
         residual});
  }
  return closed;
}

}  // namespace

MetricPair metrics(const Decomposition& dec, const PFParameters& params,
                   const MetricOptions& options) {
  const double mismatch = std::max(std::abs(dec.alpha - params.alpha()),
                                   std::abs(dec.beta - params.beta()));
  if (mismatch > 1e-8 * std::max({1.0, std::abs(dec.alpha), std::abs(dec.beta)})) {
    throw Error(ErrorCode::kInvalidSpec, "parameters do not match the decomposition");
  }
  MetricPair out;
  out.t_ratio = std::norm(params.gamma() / params.a12);
  out.s_phi = s_phi_formula(params);
  if (options.flip_s_phi_sign) {
    out.s_phi = {out.s_phi.m00(), -out.s_phi.m01(), -out.s_phi.m10(), out.s_phi.m11()};
  }
  out.s_psi = s_psi_formula(params);

  Mat2 phi_root = s_phi_sqrt_closed_form(params, &out.p);
  if (options.flip_s_phi_sign) {
    phi_root = {phi_root.m00(), -phi_root.m01(), -phi_root.m10(), phi_root.m11()};
  }
  out.s_phi_sqrt = arbitrate("S_phi^1/2", out.s_phi, phi_root, out.diagnostics);
  out.s_psi_sqrt = arbitrate("S_psi^1/2", out.s_psi, s_psi_sqrt_closed_form(params, &out.q),
                             out.diagnostics);
  return out;
}

MetricPair metrics_from_system(const BiorthogonalSystem& sys) {
  MetricPair out;
  out.s_phi = outer(sys.phi0, sys.phi0) + outer(sys.phi1, sys.phi1);
  out.s_psi = outer(sys.psi0, sys.psi0) + outer(sys.psi1, sys.psi1);
  out.s_phi = 0.5 * (out.s_phi + out.s_phi.adjoint());
  out.s_psi = 0.5 * (out.s_psi + out.s_psi.adjoint());
  try {
    out.s_phi_sqrt = hermitian_sqrt_oracle(out.s_phi, kDefaultTol);
    out.s_psi_sqrt = hermitian_sqrt_oracle(out.s_psi, kDefaultTol);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternal, std::string("metric is not positive: ") + e.what());
  }
  // phi1 = (gamma / a12)(1, -beta) against phi0 = (1, -alpha).
  const double lead = std::norm(sys.phi0.c0());
  if (lead > 0.0) out.t_ratio = std::norm(sys.phi1.c0()) / lead;
  return out;
}

FermionicPicture fermionize(const Mat2& h, const PFPair& pair, const MetricPair& m) {
  const BiorthogonalSystem sys = biorthogonal_system(pair);
  FermionicPicture f;
  f.c = m.s_psi_sqrt * pair.a * m.s_phi_sqrt;
  f.cdag = f.c.adjoint();
  f.n0 = f.cdag * f.c;
  f.h = m.s_psi_sqrt * h * m.s_phi_sqrt;
  f.e0 = m.s_psi_sqrt * sys.phi0;
  f.e1 = m.s_psi_sqrt * sys.phi1;
  return f;
}

FermionicPicture fermionize(const Decomposition& dec, const PFPair& pair,
                            const MetricPair& metrics) {
  return fermionize(assemble(dec), pair, metrics);
}

double IntertwiningReport::max_residual() const {
  return std::max({s_psi_n, s_phi_ndag, s_phi_maps_psi, s_psi_maps_phi, duality});
}

IntertwiningReport intertwining_check(const BiorthogonalSystem& sys, const PFPair& pair,
                                      const MetricPair& m) {
  const NumberOperators ops = number_operators(pair);
  const Mat2& n = ops.n;
  IntertwiningReport r;
  r.s_psi_n = max_abs(m.s_psi * n - n.adjoint() * m.s_psi);
  r.s_phi_ndag = max_abs(m.s_phi * n.adjoint() - n * m.s_phi);
  r.s_phi_maps_psi = std::max(max_abs(m.s_phi * sys.psi0 - sys.phi0),
                              max_abs(m.s_phi * sys.psi1 - sys.phi1));
  r.s_psi_maps_phi = std::max(max_abs(m.s_psi * sys.phi0 - sys.psi0),
                              max_abs(m.s_psi * sys.phi1 - sys.psi1));
  r.duality = max_abs(m.s_phi * m.s_psi - Mat2::identity());
  r.s_phi_norm = op_norm(m.s_phi);
  r.s_psi_norm = op_norm(m.s_psi);
  r.s_phi_bound = std::pow(norm(sys.phi0), 2) + std::pow(norm(sys.phi1), 2);
  r.s_psi_bound = std::pow(norm(sys.psi0), 2) + std::pow(norm(sys.psi1), 2);
  constexpr double kSlack = 1e-12;
  r.bounds_hold = r.s_phi_norm <= r.s_phi_bound * (1.0 + kSlack) &&
                  r.s_psi_norm <= r.s_psi_bound * (1.0 + kSlack);
  return r;
}

IntertwiningReport intertwining_check(const Decomposition& dec, const PFParameters& params,
                                      const MetricPair& metrics) {
  const PFPair pair{lowering_matrix(params), raising_matrix(params), params};
  return intertwining_check(biorthogonal_system(dec, params), pair, metrics);
}

}  // namespace pfkit
