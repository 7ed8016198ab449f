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

#include "pfkit/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "pfkit/error.hpp"
#include "pfkit/literal.hpp"

namespace pfkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kReconstructionTol = 1e-10;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Complex cis(double a) { return std::polar(1.0, a); }

DG as_dg(const Part& p) { return {p.r, p.s, p.s, p.theta, 0.0}; }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidSpec, what); }

// One named parameter of a spec, either real or complex.
struct Field {
  const char* name;
  double* real = nullptr;
  Complex* cplx = nullptr;
};

std::vector<Field> fields_of(ModelSpec& spec) {
  return std::visit(
      Overloaded{
          [](DG& m) -> std::vector<Field> {
            return {{"r", &m.r}, {"s", &m.s}, {"t_c", &m.t_c}, {"theta", &m.theta}, {"phi", &m.phi}};
          },
          [](Part& m) -> std::vector<Field> {
            return {{"r", &m.r}, {"s", &m.s}, {"theta", &m.theta}};
          },
          [](GMM& m) -> std::vector<Field> {
            return {{"e1", &m.e1}, {"e2", &m.e2}, {"g1", &m.g1}, {"g2", &m.g2},
                    {"nu0", nullptr, &m.nu0}};
          },
          [](MO& m) -> std::vector<Field> {
            return {{"E", nullptr, &m.e}, {"theta", nullptr, &m.theta}, {"phi", nullptr, &m.phi}};
          },
          [](Rel& m) -> std::vector<Field> {
            return {{"m", &m.m}, {"c", &m.c}, {"px", &m.px}, {"v", &m.v}};
          },
          [](JSM& m) -> std::vector<Field> { return {{"a_r", &m.a_r}, {"b_r", &m.b_r}}; },
      },
      spec);
}

ModelSpec blank_spec(std::string_view name) {
  if (name == "DG") return DG{};
  if (name == "Part") return Part{};
  if (name == "GMM") return GMM{};
  if (name == "MO") return MO{};
  if (name == "Rel") return Rel{};
  if (name == "JSM") return JSM{};
  invalid("unknown model \"" + std::string(name) + "\"");
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Brings (E, theta, phi) into Re theta, Re phi in [0, pi) without changing
// the matrix: (theta, phi) -> (-theta, phi + pi) and (E, theta) -> (-E, theta + pi)
// are both symmetries of it.
MO normalized_mo(Complex e, Complex theta, Complex phi) {
  const auto wrap = [](double x) {
    double y = std::fmod(x, 2.0 * kPi);
    if (y < 0.0) y += 2.0 * kPi;
    return y >= 2.0 * kPi ? 0.0 : y;
  };
  phi = {wrap(phi.real()), phi.imag()};
  if (phi.real() >= kPi) {
    phi -= kPi;
    theta = -theta;
  }
  theta = {wrap(theta.real()), theta.imag()};
  if (theta.real() >= kPi) {
    theta -= kPi;
    e = -e;
  }
  return {e, theta, phi};
}

// Model-level eigendata for one branch.
// gamma is given in closed form: 1/(alpha - beta) loses accuracy close to
// an exceptional point, where alpha and beta nearly agree.
struct Raw {
  Complex alpha, beta, omega, rho, mu, gamma;
};

struct DGRaw {
  std::array<Raw, 2> branches;  // plus, minus
  DGAux aux;
};

DGRaw dg_raw(const DG& m) {
  DGRaw out;
  const double sx = m.r * std::sin(m.theta) / m.s;
  DGAux& a = out.aux;
  a.x_r = sx * sx - m.t_c / m.s;
  a.sqrt_x_r = std::sqrt(Complex(a.x_r, 0.0));
  a.x_rr_plus = sx - a.sqrt_x_r;
  a.x_rr_minus = sx + a.sqrt_x_r;
  const Complex ph = kI * cis(-m.phi);
  const Complex mu = m.s * cis(m.phi);
  const Complex base = m.r * cis(-m.theta);
  const Complex q = a.sqrt_x_r;
  out.branches[0] = {ph * a.x_rr_plus, ph * a.x_rr_minus, -2.0 * kI * m.s * q,
                     base + kI * m.s * (sx + q), mu, -1.0 / (2.0 * ph * q)};
  out.branches[1] = {ph * a.x_rr_minus, ph * a.x_rr_plus, 2.0 * kI * m.s * q,
                     base + kI * m.s * (sx - q), mu, 1.0 / (2.0 * ph * q)};
  return out;
}

std::array<Raw, 2> gmm_raw(const GMM& m) {
  const Complex base(-(m.e2 - m.e1), m.g2 - m.g1);
  const Complex w = base * base + 4.0 * m.nu0 * m.nu0;
  const Complex sw = std::sqrt(w);
  const Complex centre(m.e1 + m.e2, -(m.g1 + m.g2));
  return {{{(base - sw) / (2.0 * m.nu0), (base + sw) / (2.0 * m.nu0), -sw, 0.5 * (centre + sw), m.nu0,
            -m.nu0 / sw},
           {(base + sw) / (2.0 * m.nu0), (base - sw) / (2.0 * m.nu0), sw, 0.5 * (centre - sw), m.nu0,
            m.nu0 / sw}}};
}

std::array<Raw, 2> mo_raw(const MO& m) {
  const Complex s = std::sin(m.theta);
  const Complex c = std::cos(m.theta);
  const Complex eph = std::exp(kI * m.phi);
  // mu sits in the (0,1) slot, hence e^{-i phi}.
  const Complex mu = m.e * s / eph;
  return {{{eph * (c - 1.0) / s, eph * (c + 1.0) / s, -2.0 * m.e, m.e, mu, -s / (2.0 * eph)},
           {eph * (c + 1.0) / s, eph * (c - 1.0) / s, 2.0 * m.e, -m.e, mu, s / (2.0 * eph)}}};
}

// Direct assignment for c px = v, where H(1,0) = 0.
std::array<Raw, 2> rel_direct_raw(const Rel& m) {
  const double mc2 = m.m * m.c * m.c;
  return {{{0.0, mc2 / m.v, -2.0 * mc2, mc2, 2.0 * m.v, -m.v / mc2},
           {mc2 / m.v, 0.0, 2.0 * mc2, -mc2, 2.0 * m.v, m.v / mc2}}};
}

PFParameters gauge_params(const Decomposition& dec, Gauge gauge) {
  if (gauge.kind == Gauge::Kind::kAlpha11 && dec.alpha == Complex(0.0)) {
    return parameters_for(dec, Gauge::alpha12(1.0));
  }
  return parameters_for(dec, gauge);
}

}  // namespace

std::string_view model_name(const ModelSpec& spec) {
  static constexpr std::array<std::string_view, 6> kNames{"DG", "Part", "GMM", "MO", "Rel", "JSM"};
  return kNames[spec.index()];
}

void validate(const ModelSpec& spec) {
  ModelSpec copy = spec;
  for (const Field& f : fields_of(copy)) {
    if (f.real ? !std::isfinite(*f.real) : !finite(*f.cplx)) {
      invalid(std::string(f.name) + " is not finite");
    }
  }
  std::visit(Overloaded{
                 [](const GMM& m) {
                   if (m.g1 < 0.0 || m.g2 < 0.0) invalid("GMM widths g1, g2 must be >= 0");
                 },
                 [](const MO& m) {
                   if (m.e == Complex(0.0)) invalid("MO requires E != 0");
                   if (m.theta == Complex(0.0)) invalid("MO requires theta != 0");
                   if (m.theta.real() < 0.0 || m.theta.real() >= kPi) {
                     invalid("MO requires Re(theta) in [0, pi)");
                   }
                   if (m.phi.real() < 0.0 || m.phi.real() >= kPi) {
                     invalid("MO requires Re(phi) in [0, pi)");
                   }
                 },
                 [](const JSM& m) {
                   if (m.b_r == 0.0) invalid("JSM requires b_r != 0");
                 },
                 [](const auto&) {},
             },
             spec);
}

std::vector<std::string> flags(const ModelSpec& spec) {
  std::vector<std::string> out;
  std::visit(Overloaded{
                 [&](const DG& m) {
                   if (m.r == 0.0 || m.s == 0.0 || m.t_c == 0.0) {
                     out.push_back("DG with r, s or t_c zero is outside the interesting case");
                   }
                 },
                 [&](const Part& m) {
                   if (m.r == 0.0 || m.s == 0.0) out.push_back("Part with r or s zero");
                 },
                 [&](const GMM& m) {
                   if (m.g1 == 0.0 || m.g2 == 0.0) out.push_back("GMM width on the 0 boundary");
                 },
                 [](const auto&) {},
             },
             spec);
  return out;
}

Mat2 to_matrix(const ModelSpec& spec) {
  return std::visit(
      Overloaded{
          [](const DG& m) -> Mat2 {
            return {m.r * cis(m.theta), m.s * cis(m.phi), m.t_c * cis(-m.phi), m.r * cis(-m.theta)};
          },
          [](const Part& m) -> Mat2 {
            return {m.r * cis(m.theta), m.s, m.s, m.r * cis(-m.theta)};
          },
          [](const GMM& m) -> Mat2 {
            return {Complex(m.e1, -m.g1), m.nu0, m.nu0, Complex(m.e2, -m.g2)};
          },
          [](const MO& m) -> Mat2 {
            const Complex s = std::sin(m.theta);
            const Complex c = std::cos(m.theta);
            const Complex eph = std::exp(kI * m.phi);
            return {m.e * c, m.e * s / eph, m.e * s * eph, -m.e * c};
          },
          [](const Rel& m) -> Mat2 {
            const double mc2 = m.m * m.c * m.c;
            return {mc2, m.c * m.px + m.v, m.c * m.px - m.v, -mc2};
          },
          [](const JSM& m) -> Mat2 { return {m.a_r, kI * m.b_r, kI * m.b_r, -m.a_r}; },
      },
      spec);
}

std::string_view to_string(EPStatus::Kind k) {
  switch (k) {
    case EPStatus::Kind::kNone:
      return "none";
    case EPStatus::Kind::kAtEP:
      return "at_ep";
    case EPStatus::Kind::kNoPF:
      return "no_pf";
  }
  return "none";
}

EPStatus ep_condition(const ModelSpec& spec, double tol) {
  validate(spec);
  EPStatus st;
  Complex trace;
  std::string no_pf;  // reason H(0,1) can vanish
  std::visit(Overloaded{
                 [&](const DG& m) {
                   const double rs = m.r * std::sin(m.theta);
                   st.margin = rs * rs - m.s * m.t_c;
                   st.gap = 2.0 * std::sqrt(std::abs(st.margin));
                   trace = 2.0 * m.r * std::cos(m.theta);
                   st.coalesced = m.r * std::cos(m.theta);
                   no_pf = "s = 0 leaves H(0,1) = 0";
                 },
                 [&](const Part& m) {
                   const double rs = m.r * std::sin(m.theta);
                   st.margin = rs * rs - m.s * m.s;
                   st.gap = 2.0 * std::sqrt(std::abs(st.margin));
                   trace = 2.0 * m.r * std::cos(m.theta);
                   st.coalesced = m.r * std::cos(m.theta);
                   no_pf = "s = 0 leaves H(0,1) = 0";
                 },
                 [&](const GMM& m) {
                   const Complex base(-(m.e2 - m.e1), m.g2 - m.g1);
                   const Complex w = base * base + 4.0 * m.nu0 * m.nu0;
                   st.margin = std::abs(w);
                   st.gap = std::sqrt(std::abs(w));
                   trace = Complex(m.e1 + m.e2, -(m.g1 + m.g2));
                   st.coalesced = 0.5 * trace;
                   no_pf = "nu0 = 0 leaves H(0,1) = 0";
                 },
                 [&](const MO& m) {
                   st.margin = std::numeric_limits<double>::infinity();
                   st.gap = 2.0 * std::abs(m.e);
                   trace = 0.0;
                   st.coalesced = 0.0;
                 },
                 [&](const Rel& m) {
                   const double mc2 = m.m * m.c * m.c;
                   const double cp = m.c * m.px;
                   st.margin = cp + m.v;
                   st.gap = 2.0 * std::sqrt(std::abs(mc2 * mc2 + cp * cp - m.v * m.v));
                   trace = 0.0;
                   st.coalesced = 0.0;
                   no_pf = "c px = -v leaves H(0,1) = 0";
                 },
                 [&](const JSM& m) {
                   st.margin = m.b_r * m.b_r - m.a_r * m.a_r;
                   st.gap = 2.0 * std::sqrt(std::abs(st.margin));
                   trace = 0.0;
                   st.coalesced = 0.0;
                 },
             },
             spec);
  st.threshold = tol * (1.0 + std::abs(trace));
  if (st.gap < st.threshold) {
    st.kind = EPStatus::Kind::kAtEP;
    return st;
  }
  st.coalesced = 0.0;
  const Mat2 h = to_matrix(spec);
  if (std::abs(h.m01()) <= tol * std::max(1.0, max_abs(h))) {
    st.kind = EPStatus::Kind::kNoPF;
    st.reason = no_pf.empty() ? "H(0,1) = 0" : no_pf;
  }
  return st;
}

Reduction reduce(const ModelSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const Part& m) -> Reduction { return {as_dg(m), {}}; },
          [](const Rel& m) -> Reduction {
            const double mc2 = m.m * m.c * m.c;
            const double cp = m.c * m.px;
            const double s2 = (cp + m.v) * (cp - m.v);
            if (s2 == 0.0) {
              return {std::nullopt,
                      "c^2 px^2 = v^2: only one off-diagonal entry is non-zero, which MO never has"};
            }
            const double d = mc2 * mc2 + s2;
            if (d == 0.0) return {std::nullopt, "m^2 c^4 + c^2 px^2 = v^2 is an exceptional point"};
            // E cos(theta) = m c^2, E sin(theta) = sqrt(s2), e^{i phi} = (c px - v)/(E sin).
            const Complex e = std::sqrt(Complex(d, 0.0));
            const Complex es = std::sqrt(Complex(s2, 0.0));
            const Complex theta = -kI * std::log((mc2 + kI * es) / e);
            const Complex phi = -kI * std::log((cp - m.v) / es);
            return {normalized_mo(e, theta, phi), {}};
          },
          [](const JSM& m) -> Reduction {
            const double d = m.a_r * m.a_r - m.b_r * m.b_r;
            if (d == 0.0) return {std::nullopt, "a_r^2 = b_r^2 is an exceptional point"};
            // phi = 0, E cos(theta) = a_r, E sin(theta) = i b_r.
            const Complex e = std::sqrt(Complex(d, 0.0));
            const Complex theta = -kI * std::log((m.a_r - m.b_r) / e);
            return {normalized_mo(e, theta, 0.0), {}};
          },
          [](const auto&) -> Reduction { return {std::nullopt, "no reduction defined"}; },
      },
      spec);
}

Identification identify(const ModelSpec& spec, Gauge gauge, double tol) {
  const EPStatus ep = ep_condition(spec, tol);
  if (ep.kind == EPStatus::Kind::kAtEP) {
    throw Error(ErrorCode::kExceptionalPoint,
                std::string(model_name(spec)) + " sits on an exceptional point");
  }
  if (ep.kind == EPStatus::Kind::kNoPF) throw Error(ErrorCode::kNoPseudoFermions, ep.reason);

  Identification id;
  std::array<Raw, 2> raw;
  std::visit(Overloaded{
                 [&](const DG& m) {
                   const DGRaw d = dg_raw(m);
                   raw = d.branches;
                   id.dg = d.aux;
                 },
                 [&](const Part& m) {
                   const DGRaw d = dg_raw(as_dg(m));
                   raw = d.branches;
                   id.dg = d.aux;
                 },
                 [&](const GMM& m) { raw = gmm_raw(m); },
                 [&](const MO& m) { raw = mo_raw(m); },
                 [&](const Rel& m) {
                   const Reduction r = reduce(m);
                   raw = r.spec ? mo_raw(std::get<MO>(*r.spec)) : rel_direct_raw(m);
                 },
                 [&](const JSM& m) { raw = mo_raw(std::get<MO>(*reduce(m).spec)); },
             },
             spec);

  const Mat2 h = to_matrix(spec);
  const double scale = std::max(1.0, max_abs(h));
  // The eigenbasis condition number grows like |H| / gap towards an
  // exceptional point, and so does the rounding in the reassembly.
  const double gate = kReconstructionTol * scale * std::max(1.0, scale / ep.gap);
  for (int k = 0; k < 2; ++k) {
    const Raw& r = raw[static_cast<std::size_t>(k)];
    const Branch branch = k == 0 ? Branch::kPlus : Branch::kMinus;
    Decomposition dec = make_decomposition(r.alpha, r.beta, r.omega, r.rho, branch);
    dec.gamma = r.gamma;
    dec.mu = r.omega * r.gamma;
    if (std::abs(dec.mu - r.mu) > kReconstructionTol * std::max(1.0, std::abs(r.mu))) {
      throw Error(ErrorCode::kInternal, "omega gamma does not reproduce mu");
    }
    dec.mu = r.mu;
    const PFParameters p = gauge_params(dec, gauge);
    const double err = std::max(max_abs(assemble(p, dec.omega, dec.rho) - h),
                                max_abs(assemble(dec) - h));
    if (err > gate) {
      throw Error(ErrorCode::kInternal, std::string(model_name(spec)) + " " +
                                            std::string(to_string(branch)) +
                                            " branch fails to reassemble, error " +
                                            format_double(err, 3));
    }
    (k == 0 ? id.dec_plus : id.dec_minus) = dec;
    (k == 0 ? id.params_plus : id.params_minus) = p;
  }
  if (id.dg) {
    const DG m = std::holds_alternative<DG>(spec) ? std::get<DG>(spec) : as_dg(std::get<Part>(spec));
    const double rs = m.r * std::sin(m.theta);
    const Complex mu = m.s * cis(m.phi);
    const Complex root = m.s * id.dg->sqrt_x_r;
    id.dg->alpha12_plus = 2.0 * id.params_plus.a11 * mu / (-2.0 * kI * root + 2.0 * kI * rs);
    id.dg->alpha12_minus = 2.0 * id.params_minus.a11 * mu / (2.0 * kI * root + 2.0 * kI * rs);
    id.dg->beta11 = m.s * m.t_c / (4.0 * (m.s * m.t_c - rs * rs) * id.params_minus.a11);
  }
  return id;
}

ModelPhase phase_of(const ModelSpec& spec, double tol) {
  ModelPhase mp;
  mp.ep = ep_condition(spec, tol);
  mp.witness = classify_phase(to_matrix(spec), tol);
  mp.phase = mp.ep.kind == EPStatus::Kind::kAtEP ? Phase::kExceptionalPoint : mp.witness.phase;
  if (mp.phase == Phase::kBroken && mp.ep.kind == EPStatus::Kind::kNone) {
    std::optional<DG> dg;
    if (const auto* d = std::get_if<DG>(&spec)) dg = *d;
    if (const auto* p = std::get_if<Part>(&spec)) dg = as_dg(*p);
    if (dg) {
      const DGRaw r = dg_raw(*dg);
      mp.omega_conjugacy = std::abs(r.branches[0].omega - std::conj(r.branches[1].omega));
    }
  }
  return mp;
}

MetricPair dg_metrics(const DG& spec, Branch branch, Complex alpha11) {
  if (spec.s == 0.0 || spec.t_c == 0.0) invalid("dg_metrics needs s and t_c non-zero");
  if (alpha11 == Complex(0.0)) invalid("dg_metrics needs alpha11 != 0");
  const Identification id = identify(spec, Gauge::alpha11(alpha11));
  const DGAux& aux = *id.dg;
  MetricPair out = metrics(id.dec(branch), id.params(branch));

  const Complex own = branch == Branch::kPlus ? aux.x_rr_plus : aux.x_rr_minus;
  const Complex other = branch == Branch::kPlus ? aux.x_rr_minus : aux.x_rr_plus;
  const double abs_xr = std::abs(aux.x_r);
  const double a11_sq = std::norm(alpha11);
  const Complex down = -kI * cis(-spec.phi);

  const double t = std::norm(own) / (4.0 * abs_xr * a11_sq);
  const Complex phi10 = down * (own + t * other);
  const Mat2 s_phi{1.0 + t, std::conj(phi10), phi10, std::norm(own) + t * std::norm(other)};

  const double l = 4.0 * abs_xr * a11_sq * spec.s * spec.s / (spec.t_c * spec.t_c);
  const double n_psi_sq = std::norm(other) / (4.0 * abs_xr);
  const Complex psi01 = -std::conj(down) * (1.0 / other + std::conj(own) * l);
  const Mat2 s_psi = Mat2{1.0 + std::norm(own) * l, psi01, std::conj(psi01),
                          1.0 / std::norm(other) + l} *
                     n_psi_sq;

  const double phi_err = max_abs(s_phi - out.s_phi) / std::max(1.0, max_abs(out.s_phi));
  const double psi_err = max_abs(s_psi - out.s_psi) / std::max(1.0, max_abs(out.s_psi));
  if (phi_err > 1e-9 || psi_err > 1e-9) {
    throw Error(ErrorCode::kInternal, "DG metric formulas disagree with the generic route (" +
                                          std::to_string(std::max(phi_err, psi_err)) + ")");
  }
  out.s_phi = s_phi;
  out.s_psi = s_psi;
  return out;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ModelSpec& spec) {
  ModelSpec copy = spec;
  Json params = Json::object();
  for (const Field& f : fields_of(copy)) {
    params[f.name] = f.real ? Json(*f.real) : complex_to_json(*f.cplx);
  }
  Json j = Json::object();
  j["model"] = std::string(model_name(spec));
  j["params"] = std::move(params);
  return j;
}

namespace {

Complex complex_from(const Json& v, const char* name) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  invalid(std::string(name) + " must be a number or [re, im]");
}

}  // namespace

ModelSpec spec_from_json(const Json& j) {
  if (!j.is_object()) invalid("model spec must be a JSON object");
  if (!j.contains("model") || !j["model"].is_string()) invalid("missing string field \"model\"");
  if (!j.contains("params") || !j["params"].is_object()) invalid("missing object field \"params\"");
  for (const auto& item : j.items()) {
    if (item.key() != "model" && item.key() != "params") {
      invalid("unexpected field \"" + item.key() + "\"");
    }
  }
  ModelSpec spec = blank_spec(j["model"].get<std::string>());
  const Json& params = j["params"];
  std::vector<Field> fields = fields_of(spec);
  for (const auto& item : params.items()) {
    const bool known = std::any_of(fields.begin(), fields.end(),
                                   [&](const Field& f) { return item.key() == f.name; });
    if (!known) {
      invalid("unknown parameter \"" + item.key() + "\" for model " +
              std::string(model_name(spec)));
    }
  }
  for (const Field& f : fields) {
    if (!params.contains(f.name)) invalid(std::string("missing parameter \"") + f.name + "\"");
    const Complex z = complex_from(params[f.name], f.name);
    if (f.real) {
      if (z.imag() != 0.0) invalid(std::string(f.name) + " must be real");
      *f.real = z.real();
    } else {
      *f.cplx = z;
    }
  }
  validate(spec);
  return spec;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + e.what());
  }
}

ModelSpec spec_from_json_text(std::string_view text) { return spec_from_json(parse_json_text(text)); }

std::vector<std::string> param_names(const ModelSpec& spec) {
  ModelSpec copy = spec;
  std::vector<std::string> names;
  for (const Field& f : fields_of(copy)) names.emplace_back(f.name);
  return names;
}

ModelSpec with_param(const ModelSpec& spec, std::string_view name, double value) {
  ModelSpec copy = spec;
  bool found = false;
  for (const Field& f : fields_of(copy)) {
    if (name != f.name) continue;
    found = true;
    if (f.real) {
      *f.real = value;
    } else {
      *f.cplx = value;
    }
  }
  if (!found) {
    invalid("model " + std::string(model_name(spec)) + " has no parameter \"" + std::string(name) + "\"");
  }
  validate(copy);
  return copy;
}

}  // namespace pfkit
