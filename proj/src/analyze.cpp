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

#include "pfkit/analyze.hpp"

#include <algorithm>
#include <cmath>

#include "pfkit/error.hpp"
#include "pfkit/literal.hpp"
#include "pfkit/pf_algebra.hpp"
#include "pfkit/symmetry.hpp"

namespace pfkit {
namespace {

// JSON has no infinity; keep it readable instead of null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(format_double(v)); }

Json error_json(const Error& e) {
  return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

bool is_no_pf(ErrorCode c) {
  return c == ErrorCode::kExceptionalPoint || c == ErrorCode::kNoPseudoFermions ||
         c == ErrorCode::kUnsupportedShape;
}

Json decomposition_json(const Decomposition& d) {
  return {{"branch", std::string(to_string(d.branch))},
          {"omega", complex_to_json(d.omega)},
          {"rho", complex_to_json(d.rho)},
          {"alpha", complex_to_json(d.alpha)},
          {"beta", complex_to_json(d.beta)},
          {"gamma", complex_to_json(d.gamma)},
          {"mu", complex_to_json(d.mu)},
          {"eps0", complex_to_json(d.eps0())},
          {"eps1", complex_to_json(d.eps1())}};
}

Json symmetry_json(const Decomposition& dec, const Mat2& h) {
  Json out = Json::object();
  try {
    const Mat2 x = commutant(dec, 0.0, 1.0);
    out["commutant"] = {{"generator", to_json(x)},
                        {"commutator_residual", max_abs(commutator(x, h))}};
  } catch (const Error& e) {
    out["commutant"] = {{"error", error_json(e)}};
  }
  try {
    const Involution inv = involutive_symmetry(dec);
    out["involution"] = {{"x", to_json(inv.x)},
                         {"square_residual", max_abs(inv.x * inv.x - Mat2::identity())},
                         {"commutator_residual", max_abs(commutator(inv.x, h))}};
  } catch (const Error& e) {
    out["involution"] = {{"error", error_json(e)}};
  }
  return out;
}

// Everything downstream of a successful decomposition. Numerical failures are
// recorded in the report rather than thrown.
void fill_pseudo_fermions(Json& report, const Mat2& h, const Decomposition& dec,
                          const PFParameters& params) {
  report["decomposition"] = decomposition_json(dec);
  report["parameters"] = {{"a11", complex_to_json(params.a11)},
                          {"a12", complex_to_json(params.a12)},
                          {"b11", complex_to_json(params.b11)},
                          {"b12", complex_to_json(params.b12)}};
  const PFPair pair{lowering_matrix(params), raising_matrix(params), params};
  report["pair"] = {{"a", to_json(pair.a)}, {"b", to_json(pair.b)}};
  const Json sym = symmetry_json(dec, h);
  report["commutant"] = sym["commutant"];
  report["involution"] = sym["involution"];

  Json residuals = Json::object();
  const AlgebraResiduals alg = algebra_residuals(pair.a, pair.b);
  residuals["anticommutator"] = alg.anticommutator;
  residuals["a_squared"] = alg.a_squared;
  residuals["b_squared"] = alg.b_squared;
  residuals["constraint"] = std::abs(params.constraint_residual());
  residuals["reconstruction"] = max_abs(assemble(params, dec.omega, dec.rho) - h);
  try {
    const BiorthogonalSystem sys = biorthogonal_system(dec, params);
    report["biorthogonal"] = {{"phi0", to_json(sys.phi0)},       {"phi1", to_json(sys.phi1)},
                              {"psi0", to_json(sys.psi0)},       {"psi1", to_json(sys.psi1)},
                              {"n_phi", complex_to_json(sys.n_phi)}, {"n_psi", complex_to_json(sys.n_psi)}};
    const MetricPair m = metrics(dec, params);
    Json diags = Json::array();
    for (const Diagnostic& d : m.diagnostics) {
      diags.push_back({{"code", d.code}, {"message", d.message}, {"magnitude", d.magnitude}});
    }
    report["metrics"] = {{"s_phi", to_json(m.s_phi)},
                         {"s_psi", to_json(m.s_psi)},
                         {"s_phi_sqrt", to_json(m.s_phi_sqrt)},
                         {"s_psi_sqrt", to_json(m.s_psi_sqrt)},
                         {"t_ratio", m.t_ratio},
                         {"diagnostics", diags}};
    const FermionicPicture f = fermionize(dec, pair, m);
    report["fermionic"] = {{"c", to_json(f.c)},    {"cdag", to_json(f.cdag)},
                           {"n0", to_json(f.n0)},  {"h", to_json(f.h)},
                           {"e0", to_json(f.e0)},  {"e1", to_json(f.e1)}};
    const IntertwiningReport ir = intertwining_check(sys, pair, m);
    residuals["duality"] = ir.duality;
    residuals["intertwining"] = std::max(ir.s_psi_n, ir.s_phi_ndag);
    residuals["metric_maps"] = std::max(ir.s_phi_maps_psi, ir.s_psi_maps_phi);
    residuals["norm_bounds_hold"] = ir.bounds_hold;
    residuals["s_phi_sqrt_squared"] = max_abs(m.s_phi_sqrt * m.s_phi_sqrt - m.s_phi);
    residuals["s_psi_sqrt_squared"] = max_abs(m.s_psi_sqrt * m.s_psi_sqrt - m.s_psi);
    residuals["fermion_anticommutator"] = max_abs(anticommutator(f.c, f.cdag) - Mat2::identity());
    residuals["h_hermiticity"] = hermiticity_residual(f.h);
  } catch (const Error& e) {
    report["error"] = error_json(e);
  }
  report["residuals"] = residuals;
}

Json base_report(const Mat2& h, Branch branch, double tol) {
  Json report = Json::object();
  report["input"] = {{"matrix", to_json(h)}};
  report["branch"] = std::string(to_string(branch));
  report["tol"] = tol;
  return report;
}

}  // namespace

Json to_json(const Mat2& m) {
  return Json::array({Json::array({complex_to_json(m.m00()), complex_to_json(m.m01())}),
                      Json::array({complex_to_json(m.m10()), complex_to_json(m.m11())})});
}

Json to_json(const Vec2& v) { return Json::array({complex_to_json(v.c0()), complex_to_json(v.c1())}); }

Json to_json(const PhaseWitness& w) {
  Json out = {{"phase", std::string(to_string(w.phase))},
              {"eigenvalues", Json::array({complex_to_json(w.eigenvalues[0]),
                                           complex_to_json(w.eigenvalues[1])})},
              {"gap", w.gap},
              {"threshold", w.threshold}};
  if (w.pt) {
    const PTReport& pt = *w.pt;
    out["pt"] = {{"x", pt.x},
                 {"q", pt.q},
                 {"phase", std::string(to_string(pt.phase))},
                 {"eps_plus", complex_to_json(pt.eps_plus)},
                 {"eps_minus", complex_to_json(pt.eps_minus)},
                 {"lambda_plus", complex_to_json(pt.lambda_plus)},
                 {"lambda_minus", complex_to_json(pt.lambda_minus)},
                 {"v_plus", to_json(pt.v_plus)},
                 {"v_minus", to_json(pt.v_minus)}};
  } else {
    out["pt"] = nullptr;
  }
  return out;
}

Analysis analyze_matrix(const Mat2& h, Branch branch, double tol) {
  Analysis out;
  out.report = base_report(h, branch, tol);
  const PhaseWitness w = classify_phase(h, tol);
  out.report["phase"] = std::string(to_string(w.phase));
  out.report["spectrum"] = to_json(w);
  try {
    const Decomposition dec = decompose(h, branch, tol);
    out.report["pf_exists"] = true;
    fill_pseudo_fermions(out.report, h, dec, parameters_for(dec));
  } catch (const Error& e) {
    if (!is_no_pf(e.code())) throw;
    out.report["pf_exists"] = false;
    out.report["error"] = error_json(e);
  }
  if (out.report.contains("error")) out.exit_code = kExitNoPF;
  return out;
}

Analysis analyze_model(const ModelSpec& spec, Branch branch, double tol) {
  Analysis out;
  const Mat2 h = to_matrix(spec);
  out.report = base_report(h, branch, tol);
  out.report["input"]["model"] = to_json(spec);
  const ModelPhase mp = phase_of(spec, tol);
  out.report["phase"] = std::string(to_string(mp.phase));
  out.report["spectrum"] = to_json(mp.witness);
  out.report["ep"] = {{"kind", std::string(to_string(mp.ep.kind))},
                      {"margin", number(mp.ep.margin)},
                      {"gap", mp.ep.gap},
                      {"threshold", mp.ep.threshold}};
  if (mp.ep.kind == EPStatus::Kind::kAtEP) {
    out.report["ep"]["coalesced"] = complex_to_json(mp.ep.coalesced);
  }
  if (mp.ep.kind == EPStatus::Kind::kNoPF) out.report["ep"]["reason"] = mp.ep.reason;
  if (mp.omega_conjugacy) out.report["omega_conjugacy"] = *mp.omega_conjugacy;
  Json flag_list = Json::array();
  for (const std::string& f : flags(spec)) flag_list.push_back(f);
  out.report["flags"] = flag_list;
  try {
    const Identification id = identify(spec, Gauge::alpha11(1.0), tol);
    out.report["pf_exists"] = true;
    fill_pseudo_fermions(out.report, h, id.dec(branch), id.params(branch));
    if (id.dg) {
      out.report["dg"] = {{"x_r", id.dg->x_r},
                          {"x_rr_plus", complex_to_json(id.dg->x_rr_plus)},
                          {"x_rr_minus", complex_to_json(id.dg->x_rr_minus)},
                          {"alpha12_plus", complex_to_json(id.dg->alpha12_plus)},
                          {"alpha12_minus", complex_to_json(id.dg->alpha12_minus)},
                          {"beta11", complex_to_json(id.dg->beta11)}};
    }
  } catch (const Error& e) {
    if (!is_no_pf(e.code())) throw;
    out.report["pf_exists"] = false;
    out.report["error"] = error_json(e);
  }
  if (out.report.contains("error")) out.exit_code = kExitNoPF;
  return out;
}

}  // namespace pfkit
