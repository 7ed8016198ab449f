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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pfkit/catalog.hpp"
#include "pfkit/decomposition.hpp"
#include "pfkit/error.hpp"
#include "pfkit/pf_algebra.hpp"
#include "pfkit/sweep.hpp"
#include "pfkit/symmetry.hpp"
#include "pfkit/verify.hpp"

namespace {

using namespace pfkit;
using std::numbers::pi;

// Collects failed checks and informational notes for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s: got %.6g, want %.6g +- %.1g", what.c_str(), got, want, tol);
      failures.push_back(buf);
    }
  }
  void at_most(double value, double gate, const std::string& what) {
    if (!(value <= gate)) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s: %.3e exceeds %.0e", what.c_str(), value, gate);
      failures.push_back(buf);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

int failed_criteria = 0;

void criterion(int n, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.at_most(secs, time_limit, "runtime in seconds");
  const bool pass = out.failures.empty();
  failed_criteria += pass ? 0 : 1;
  std::printf("%s %d %s (%.3f s)\n", pass ? "PASS" : "FAIL", n, title, secs);
  for (const std::string& f : out.failures) std::printf("    failed: %s\n", f.c_str());
  for (const std::string& s : out.notes) std::printf("    note: %s\n", s.c_str());
  std::fflush(stdout);
}

double dist(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

std::array<Complex, 2> oracle_eigenvalues(const Mat2& m) {
  Eigen::Matrix2cd e;
  e << m.m00(), m.m01(), m.m10(), m.m11();
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(e);
  std::array<Complex, 2> ev{solver.eigenvalues()(0), solver.eigenvalues()(1)};
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  return ev;
}

// Entrywise comparison; (i, j) 1-based indices listed in `skip` are ignored.
double printed_distance(const Mat2& got, const Mat2& printed, int skip_row = 0, int skip_col = 0) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i + 1 == skip_row && j + 1 == skip_col) continue;
      worst = std::max(worst, std::abs(got(i, j) - printed(i, j)));
    }
  }
  return worst;
}

void dg_golden(Outcome& out) {
  const DG spec{1.0, 0.5, 1.0, pi / 6.0, pi / 6.0};
  const Identification id = identify(spec, Gauge::alpha11(1.0));
  const Decomposition& dec = id.dec_minus;
  const PFParameters& p = id.params_minus;
  out.near(dec.rho.real(), 1.366, 1e-3, "Re rho");
  out.near(dec.rho.imag(), 0.0, 1e-3, "Im rho");
  out.near(dec.omega.real(), -1.0, 1e-3, "Re omega");
  out.near(dec.omega.imag(), 0.0, 1e-3, "Im omega");

  const BiorthogonalSystem sys = biorthogonal_system(dec, p);
  out.expect(sys.n_phi == Complex(1.0), "N_phi = 1");
  const MetricPair m = metrics(dec, p);
  const Mat2 s_phi_printed{0.5, Complex(-0.317, 1.549), Complex(-0.317, -1.549), 3.0};
  const Mat2 root_printed{1.076, Complex(-0.117, 0.572), Complex(-0.117, -0.572), 1.63};
  const Mat2 h_printed{0.832, Complex(0.393, 0.306), Complex(0.393, -0.306), 0.9};
  out.at_most(printed_distance(m.s_phi, s_phi_printed, 1, 1), 5e-3, "S_phi vs printed off (1,1)");
  out.near(m.s_phi(0, 0).real(), 1.5, 1e-12, "S_phi(1,1)");
  out.at_most(dist(m.s_phi * m.s_psi, Mat2::identity()), 1e-9, "S_phi S_psi - 1");
  out.at_most(dist(m.s_phi_sqrt * m.s_phi_sqrt, m.s_phi), 1e-9, "(S_phi^1/2)^2 - S_phi");
  out.at_most(printed_distance(m.s_phi_sqrt, root_printed), 5e-3, "S_phi^1/2 vs printed");
  const PFPair pair{lowering_matrix(p), raising_matrix(p), p};
  const FermionicPicture f = fermionize(dec, pair, m);
  out.at_most(printed_distance(f.h, h_printed), 5e-3, "h_DG vs printed");
  const MetricPair special = dg_metrics(spec, Branch::kMinus, 1.0);
  out.at_most(dist(special.s_phi, m.s_phi), 1e-9, "DG metric formulas vs generic route");
  out.note(fmt("printed S_phi(1,1) = 0.5, computed %.6f", m.s_phi(0, 0).real()));
}

void mo_golden(Outcome& out) {
  const MO spec{1.0, Complex(pi / 3.0, 0.5), Complex(pi / 4.0, -1.0)};
  const Identification id = identify(spec, Gauge::alpha11(1.0));
  const Decomposition& dec = id.dec_minus;
  const PFParameters& p = id.params_minus;
  const MetricPair m = metrics(dec, p);
  const PFPair pair{lowering_matrix(p), raising_matrix(p), p};
  const FermionicPicture f = fermionize(dec, pair, m);
  out.at_most(hermiticity_residual(f.h), 1e-9, "h_MO Hermiticity");
  const auto ev = oracle_eigenvalues(f.h);
  out.near(ev[0].real(), -1.0, 1e-2, "lower eigenvalue of h_MO");
  out.near(ev[1].real(), 1.0, 1e-2, "upper eigenvalue of h_MO");
  out.at_most(dist(m.s_phi_sqrt * m.s_psi_sqrt, Mat2::identity()), 1e-9, "S_phi^1/2 S_psi^1/2 - 1");

  // Informational only.
  const Mat2 phi_printed{1.076, Complex(-0.709, -0.005), Complex(-0.709, 0.005), 4.532};
  const Mat2 psi_printed{1.035, Complex(0.162, 0.001), Complex(0.162, -0.001), 0.245};
  const Mat2 h_printed{0.695, Complex(0.523, -0.492), Complex(0.523, 0.492), -0.695};
  out.note(fmt("report: |S_phi^1/2 - printed| = %.2e, |S_psi^1/2 - printed| = %.2e, |h - printed| = %.2e",
               printed_distance(m.s_phi_sqrt, phi_printed), printed_distance(m.s_psi_sqrt, psi_printed),
               printed_distance(f.h, h_printed)));
}

void algebra_suite(Outcome& out) {
  const VerifyReport r = run_verify({1000, 42, false});
  for (const InvariantLine& l : r.lines) {
    out.expect(l.pass(), l.name + fmt(" max residual %.3e", l.max_residual));
  }
  out.expect(r.lines.size() >= 12, "at least 12 invariants");
  double worst = 0.0;
  for (const InvariantLine& l : r.lines) worst = std::max(worst, l.max_residual);
  out.note(fmt("%.0f invariants, worst residual %.3e", static_cast<double>(r.lines.size()), worst));
}

// Runs a 1D sweep and checks ep rows against the analytic set and against
// decompose.
void scan(Outcome& out, const std::string& label, const ModelSpec& base, const Axis& axis,
          const std::function<bool(double, double)>& analytic_ep, int expected_eps) {
  SweepConfig c;
  c.base = base;
  c.axes = {axis};
  c.workers = 4;
  const std::vector<SweepRow> rows = run_sweep(c);
  out.expect(rows.size() == static_cast<std::size_t>(axis.steps), label + ": row count");
  const double spacing = std::abs(axis.to - axis.from) / static_cast<double>(axis.steps - 1);
  int eps = 0;
  for (const SweepRow& row : rows) {
    const bool ep = row.phase == Phase::kExceptionalPoint;
    eps += ep ? 1 : 0;
    out.expect(ep == analytic_ep(row.p1, spacing), label + fmt(": ep row mismatch at %.17g", row.p1));
    out.expect(row.pf_exists == !ep, label + fmt(": pf_exists mismatch at %.17g", row.p1));
    bool raised = false;
    try {
      decompose(to_matrix(with_param(base, axis.param, row.p1)), Branch::kMinus, kPhaseTol);
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::kExceptionalPoint;
    }
    out.expect(raised == ep, label + fmt(": decompose disagrees at %.17g", row.p1));
  }
  out.expect(eps == expected_eps, label + fmt(": %.0f ep rows, expected %.0f", eps, expected_eps));
  out.note(label + fmt(": %.0f ep rows", eps));
}

void ep_correspondence(Outcome& out) {
  // DG margin sin^2(theta) - 1 vanishes only at pi/2.
  scan(out, "DG theta", DG{1.0, 1.0, 1.0, 0.0, 0.0}, {"theta", 0.0, pi, 2001},
       [](double th, double h) { return std::abs(th - pi / 2.0) < h / 2.0; }, 1);
  // nu0 = i: (i dG)^2 - 4 never vanishes for real dG.
  scan(out, "GMM dGamma, nu0 = i", GMM{0.0, 0.0, 0.0, 0.0, Complex(0.0, 1.0)}, {"g2", 0.0, 4.0, 2001},
       [](double, double) { return false; }, 0);
  // nu0 = 1: (i dG)^2 + 4 vanishes at dG = 2.
  scan(out, "GMM dGamma, nu0 = 1", GMM{0.0, 0.0, 0.0, 0.0, 1.0}, {"g2", 0.0, 4.0, 2001},
       [](double g, double h) { return std::abs(g - 2.0) < h / 2.0; }, 1);
  scan(out, "MO Re theta", MO{1.0, 0.5, Complex(0.3, 0.2)}, {"theta", 1e-3, pi - 1e-3, 2001},
       [](double, double) { return false; }, 0);
  scan(out, "MO complex E", MO{Complex(0.4, -1.1), 0.5, 0.1}, {"theta", 1e-3, pi - 1e-3, 2001},
       [](double, double) { return false; }, 0);
}

struct PTCase {
  Mat2 h;
  double x;
};

// Random P~T-form matrices of a prescribed phase. EP cases are built from
// dyadic values so that the discriminant vanishes exactly.
PTCase pt_case(std::mt19937_64& rng, Phase want) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> xs(0.5, 2.0);
  std::bernoulli_distribution flip(0.5);
  if (want == Phase::kExceptionalPoint) {
    static constexpr double kScales[] = {0.5, 1.0, 2.0};
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> k(1, 32);
    std::uniform_int_distribution<int> quarter(0, 3);
    const double x = (flip(rng) ? 1.0 : -1.0) * kScales[pick(rng)];
    const double im = (flip(rng) ? 1.0 : -1.0) * k(rng) / 16.0;
    const Complex phase = std::pow(kI, quarter(rng));
    const Complex a(std::ldexp(std::round(u(rng) * 64.0), -6), im);
    const Complex b = x * im * phase;
    return {{a, b, std::conj(b) / (x * x), std::conj(a)}, x};
  }
  for (;;) {
    const double x = flip(rng) ? xs(rng) : -xs(rng);
    const Complex a(u(rng), u(rng));
    const Complex b(u(rng), u(rng));
    const double q = x * x * std::norm(b) - std::pow(x, 4) * a.imag() * a.imag();
    if ((want == Phase::kUnbroken) != (q > 0.0) || std::abs(q) < 1e-3) continue;
    return {{a, b, std::conj(b) / (x * x), std::conj(a)}, x};
  }
}

void symmetry_suite(Outcome& out) {
  std::mt19937_64 rng(2026);
  double lambda = 0.0;
  double unbroken_abs = 0.0;
  double broken_prod = 0.0;
  double comm = 0.0;
  double invol = 0.0;
  double ax_lo = INFINITY;
  double ax_hi = 0.0;
  long mismatches = 0;
  for (const Phase want : {Phase::kUnbroken, Phase::kBroken, Phase::kExceptionalPoint}) {
    for (int i = 0; i < 500; ++i) {
      const PTCase c = pt_case(rng, want);
      const PTReport pt = check_pt(c.h, c.x);
      const PhaseWitness w = classify_phase(c.h);
      if (pt.phase != want || w.phase != want) ++mismatches;
      if (want == Phase::kExceptionalPoint) continue;
      lambda = std::max({lambda, std::abs(std::abs(pt.lambda_plus) - 1.0),
                         std::abs(std::abs(pt.lambda_minus) - 1.0)});
      const Decomposition d = decompose(c.h, Branch::kMinus);
      const double target = 1.0 / (c.x * c.x);
      if (want == Phase::kUnbroken) {
        unbroken_abs = std::max({unbroken_abs, std::abs(std::abs(d.alpha) - target),
                                 std::abs(std::abs(d.beta) - target)});
        ax_lo = std::min(ax_lo, std::abs(d.alpha) * std::abs(c.x));
        ax_hi = std::max(ax_hi, std::abs(d.alpha) * std::abs(c.x));
      } else {
        broken_prod = std::max(broken_prod, std::abs(d.alpha * std::conj(d.beta) - target));
      }
      std::uniform_real_distribution<double> u(-2.0, 2.0);
      const Mat2 x = commutant(d, Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
      const double scale_h = std::max(1.0, max_abs(c.h));
      comm = std::max(comm, max_abs(commutator(x, c.h)) / (std::max(1.0, max_abs(x)) * scale_h));
      const Involution inv = involutive_symmetry(d);
      const double sx = std::max(1.0, max_abs(inv.x));
      invol = std::max({invol, max_abs(inv.x * inv.x - Mat2::identity()) / (sx * sx),
                        max_abs(commutator(inv.x, c.h)) / (sx * scale_h)});
    }
  }
  out.expect(mismatches == 0, fmt("%.0f classification mismatches", static_cast<double>(mismatches)));
  out.at_most(lambda, 1e-10, "| |lambda| - 1 |");
  out.at_most(unbroken_abs, 1e-8, "unbroken | |alpha|, |beta| - x^-2 |");
  out.at_most(broken_prod, 1e-8, "broken | alpha conj(beta) - x^-2 |");
  out.at_most(comm, 1e-10, "commutant residual");
  out.at_most(invol, 1e-10, "involution residual");
  out.note(fmt("unbroken |alpha| |x| ranges over [%.12f, %.12f]; |alpha| = 1/|x| rather than x^-2", ax_lo, ax_hi));
}

void reductions(Outcome& out) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double part = 0.0;
  double jsm = 0.0;
  double rel = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Part p{u(rng), u(rng), u(rng)};
    part = std::max(part, dist(to_matrix(*reduce(p).spec), to_matrix(p)));
    const JSM j{u(rng), u(rng) + 2.5};
    const Mat2 hj = to_matrix(j);
    jsm = std::max(jsm, dist(to_matrix(*reduce(j).spec), hj) / std::max(1.0, max_abs(hj)));
    const Rel r{u(rng), u(rng), u(rng), u(rng)};
    const Mat2 hr = to_matrix(r);
    rel = std::max(rel, dist(to_matrix(*reduce(r).spec), hr) / std::max(1.0, max_abs(hr)));
  }
  out.at_most(part, 1e-12, "Part -> DG");
  out.at_most(jsm, 1e-12, "JSM -> MO");
  out.at_most(rel, 1e-12, "Rel -> MO");

  const Rel direct{1.5, 0.8, 1.25, 1.0};  // c px = v
  out.expect(!reduce(direct).spec.has_value(), "Rel c px = v is not reducible to MO");
  const Identification id = identify(direct);
  const Mat2 h = to_matrix(direct);
  for (const Branch b : {Branch::kPlus, Branch::kMinus}) {
    out.at_most(dist(assemble(id.params(b), id.dec(b).omega, id.dec(b).rho), h) / max_abs(h), 1e-12,
                "Rel c px = v reconstruction");
  }
  out.expect(id.dec_plus.alpha == Complex(0.0), "Rel c px = v: alpha = 0 on the plus branch");
  out.at_most(std::abs(id.dec_plus.mu - 2.0 * direct.v), 1e-12, "Rel c px = v: omega gamma = 2v");

  const Rel absent{1.5, 0.8, -1.25, 1.0};  // c px = -v
  ErrorCode identify_code = ErrorCode::kInternal;
  ErrorCode decompose_code = ErrorCode::kInternal;
  try {
    identify(absent);
  } catch (const Error& e) {
    identify_code = e.code();
  }
  try {
    decompose(to_matrix(absent), Branch::kMinus);
  } catch (const Error& e) {
    decompose_code = e.code();
  }
  out.expect(identify_code == ErrorCode::kNoPseudoFermions, "Rel c px = -v raises NoPseudoFermions");
  out.expect(decompose_code == ErrorCode::kUnsupportedShape, "Rel c px = -v decompose raises UnsupportedShape");
}

std::string csv_for(SweepConfig c, unsigned workers) {
  c.workers = workers;
  std::ostringstream os;
  write_csv(os, run_sweep(c));
  return os.str();
}

void reproducibility(Outcome& out) {
  SweepConfig dg;
  dg.base = DG{1.0, 1.0, 1.0, 0.0, 0.0};
  dg.axes = {{"theta", 0.0, pi, 2001}, {"t_c", 0.5, 1.5, 51}};
  SweepConfig gmm;
  gmm.base = GMM{0.0, 0.0, 0.0, 0.0, Complex(0.0, 0.5)};
  gmm.axes = {{"e2", -2.0, 2.0, 81}, {"g2", 0.0, 2.0, 41}};
  for (const SweepConfig& c : {dg, gmm}) {
    const std::string first = csv_for(c, 1);
    out.expect(first == csv_for(c, 1), std::string(model_name(c.base)) + ": two serial runs differ");
    out.expect(first == csv_for(c, 8), std::string(model_name(c.base)) + ": 1 vs 8 workers differ");
    out.expect(first == csv_for(c, 3), std::string(model_name(c.base)) + ": 1 vs 3 workers differ");
  }
}

}  // namespace

int main() {
  criterion(1, "DG worked example", 0.1, dg_golden);
  criterion(2, "MO worked example", 0.1, mo_golden);
  criterion(3, "algebra property suite, 1000 cases", 10.0, algebra_suite);
  criterion(4, "exceptional points coincide with absent pseudo-fermions", 5.0, ep_correspondence);
  criterion(5, "PT symmetry suite, 500 cases per phase", 5.0, symmetry_suite);
  criterion(6, "model reductions", 0.1, reductions);
  criterion(7, "sweep reproducibility", 60.0, reproducibility);
  std::printf("%d of 7 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
