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

#include "pfkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>

#include "pfkit/decomposition.hpp"
#include "pfkit/error.hpp"
#include "pfkit/pf_algebra.hpp"
#include "pfkit/symmetry.hpp"

namespace pfkit {
namespace {

constexpr double kAlgebraGate = 1e-10;
constexpr double kMetricGate = 1e-9;

class Tally {
 public:
  void record(const std::string& name, double gate, double residual) {
    InvariantLine& line = line_for(name, gate);
    ++line.cases;
    // NaN counts as a failure.
    if (!(residual <= gate)) ++line.failures;
    if (std::isnan(residual) || residual > line.max_residual) line.max_residual = residual;
  }
  // Pass/fail facts: residual 0 or 1.
  void check(const std::string& name, bool ok) { record(name, 0.0, ok ? 0.0 : 1.0); }

  VerifyReport report() && { return {std::move(lines_)}; }

 private:
  InvariantLine& line_for(const std::string& name, double gate) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, lines_.size()).first;
      lines_.push_back({name, gate});
    }
    return lines_[it->second];
  }
  std::vector<InvariantLine> lines_;
  std::map<std::string, std::size_t> index_;
};

double rel(double residual, double scale) { return residual / std::max(1.0, scale); }

void pseudo_fermion_case(std::mt19937_64& rng, const VerifyOptions& opt, Tally& t) {
  const PFParameters p = sample_parameters(rng);
  std::uniform_real_distribution<double> mag(0.5, 3.0);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  std::bernoulli_distribution flip(0.5);
  const double omega = flip(rng) ? mag(rng) : -mag(rng);
  const double rho = shift(rng);
  const Decomposition dec = decomposition_of(p, omega, rho);
  const PFPair pair{lowering_matrix(p), raising_matrix(p), p};
  const Mat2& a = pair.a;
  const Mat2& b = pair.b;
  const double ab = max_abs(a) * max_abs(b);

  const AlgebraResiduals alg = algebra_residuals(a, b);
  t.record("{a,b} = 1", kAlgebraGate, rel(alg.anticommutator, ab));
  t.record("a^2 = 0", kAlgebraGate, rel(alg.a_squared, max_abs(a) * max_abs(a)));
  t.record("b^2 = 0", kAlgebraGate, rel(alg.b_squared, max_abs(b) * max_abs(b)));

  const Mat2 h = assemble(p, omega, rho);
  const Mat2 n = b * a;
  t.record("N^2 = N", kAlgebraGate, rel(max_abs(n * n - n), max_abs(n) * max_abs(n)));

  const BiorthogonalSystem sys = biorthogonal_system(dec, p);
  const Vec2 phi[2] = {sys.phi0, sys.phi1};
  const Vec2 psi[2] = {sys.psi0, sys.psi1};
  const double ladder_scale = std::max({max_abs(a), max_abs(b)}) *
                              std::max({max_abs(sys.phi1), max_abs(sys.psi1), max_abs(sys.phi0),
                                        max_abs(sys.psi0)});
  t.record("a phi1 = phi0, b^+ psi1 = psi0", kAlgebraGate,
           rel(std::max(max_abs(a * sys.phi1 - sys.phi0), max_abs(b.adjoint() * sys.psi1 - sys.psi0)),
               ladder_scale));
  double eig = 0.0;
  double dual = 0.0;
  double dual_scale = 0.0;
  for (int k = 0; k < 2; ++k) {
    eig = std::max({eig, rel(max_abs(n * phi[k] - static_cast<double>(k) * phi[k]),
                             max_abs(n) * max_abs(phi[k])),
                    rel(max_abs(n.adjoint() * psi[k] - static_cast<double>(k) * psi[k]),
                        max_abs(n) * max_abs(psi[k]))});
    for (int m = 0; m < 2; ++m) {
      dual = std::max(dual, std::abs(inner(phi[k], psi[m]) - (k == m ? 1.0 : 0.0)));
      dual_scale = std::max(dual_scale, norm(phi[k]) * norm(psi[m]));
    }
  }
  t.record("N phi_n = n phi_n, N^+ psi_n = n psi_n", kAlgebraGate, eig);
  t.record("<phi_k, psi_n> = delta_kn", kAlgebraGate, rel(dual, dual_scale));

  MetricOptions mopt;
  mopt.flip_s_phi_sign = opt.inject_fault;
  const MetricPair m = metrics(dec, p, mopt);
  const IntertwiningReport ir = intertwining_check(sys, pair, m);
  const double ss = max_abs(m.s_phi) * max_abs(m.s_psi);
  t.record("S_phi S_psi = 1", kMetricGate, rel(ir.duality, ss));
  t.record("S_phi psi_n = phi_n, S_psi phi_n = psi_n", kMetricGate,
           rel(std::max(ir.s_phi_maps_psi, ir.s_psi_maps_phi),
               std::max(max_abs(m.s_phi), max_abs(m.s_psi)) * ladder_scale));
  t.record("S_psi N = N^+ S_psi, S_phi N^+ = N S_phi", kMetricGate,
           rel(std::max(ir.s_psi_n, ir.s_phi_ndag),
               std::max(max_abs(m.s_phi), max_abs(m.s_psi)) * max_abs(n)));
  t.check("norm bounds on S_phi, S_psi", ir.bounds_hold);

  const Mat2 phi_root = hermitian_sqrt_oracle(m.s_phi);
  const Mat2 psi_root = hermitian_sqrt_oracle(m.s_psi);
  t.record("closed-form S_phi^1/2 vs oracle", kMetricGate,
           rel(max_abs(s_phi_sqrt_closed_form(p) - phi_root), max_abs(phi_root)));
  t.record("closed-form S_psi^1/2 vs oracle", kMetricGate,
           rel(max_abs(s_psi_sqrt_closed_form(p) - psi_root), max_abs(psi_root)));

  const FermionicPicture f = fermionize(dec, pair, m);
  t.record("{c,c^+} = 1", kMetricGate,
           rel(max_abs(anticommutator(f.c, f.cdag) - Mat2::identity()), max_abs(f.c) * max_abs(f.c)));
  t.record("h Hermitian", kMetricGate, rel(hermiticity_residual(f.h), max_abs(f.h)));

  const Decomposition again = decompose(h, dec.branch);
  t.record("decompose(assemble) reproduces H", kAlgebraGate,
           rel(max_abs(assemble(again) - h), max_abs(h)));

  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Mat2 x = commutant(dec, Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
  t.record("[X, H] = 0 for commutant X", kAlgebraGate,
           rel(max_abs(commutator(x, h)), max_abs(x) * max_abs(h)));
  const Involution inv = involutive_symmetry(dec);
  t.record("involution X^2 = 1, [X, H] = 0", kAlgebraGate,
           std::max(rel(max_abs(inv.x * inv.x - Mat2::identity()), max_abs(inv.x) * max_abs(inv.x)),
                    rel(max_abs(commutator(inv.x, h)), max_abs(inv.x) * max_abs(h))));
}

// A random matrix of the P~T form for a random real x.
void pt_case(std::mt19937_64& rng, Tally& t) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> xs(0.5, 2.0);
  std::bernoulli_distribution flip(0.5);
  const double x = flip(rng) ? xs(rng) : -xs(rng);
  const Complex a(u(rng), u(rng));
  const Complex b(u(rng), u(rng));
  const Mat2 h{a, b, std::conj(b) / (x * x), std::conj(a)};
  const PTReport pt = check_pt(h, x);
  const PhaseWitness w = classify_phase(h);
  t.check("P~T phase by Q agrees with eigenvalues", w.phase == pt.phase);
  if (pt.phase == Phase::kUnbroken || pt.phase == Phase::kBroken) {
    t.record("|lambda+-| = 1", kAlgebraGate,
             std::max(std::abs(std::abs(pt.lambda_plus) - 1.0),
                      std::abs(std::abs(pt.lambda_minus) - 1.0)));
  }
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const InvariantLine& l) { return l.pass(); });
}

const InvariantLine* VerifyReport::find(const std::string& name) const {
  for (const InvariantLine& l : lines) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.count < 1) throw Error(ErrorCode::kInvalidSpec, "verify needs count >= 1");
  std::mt19937_64 rng(options.seed);
  Tally tally;
  for (long i = 0; i < options.count; ++i) {
    pseudo_fermion_case(rng, options, tally);
    pt_case(rng, tally);
  }
  return std::move(tally).report();
}

void print(std::ostream& os, const VerifyReport& report) {
  char buf[160];
  for (const InvariantLine& l : report.lines) {
    std::snprintf(buf, sizeof buf, "%-44s max %.3e  gate %.0e  %s\n", l.name.c_str(),
                  l.max_residual, l.gate, l.pass() ? "ok" : "FAIL");
    os << buf;
    if (!l.pass()) os << "  " << l.failures << " of " << l.cases << " cases above the gate\n";
  }
  os << (report.pass() ? "verify: all invariants hold" : "verify: FAILED") << '\n';
}

}  // namespace pfkit
