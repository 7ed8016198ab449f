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

// Literature models of 2x2 non-Hermitian Hamiltonians and their
// pseudo-fermionic identifications, exceptional-point predicates and phase
// maps.

#ifndef PFKIT_CATALOG_HPP_
#define PFKIT_CATALOG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pfkit/decomposition.hpp"
#include "pfkit/mat2.hpp"
#include "pfkit/symmetry.hpp"

namespace pfkit {

// [[r e^{i theta}, s e^{i phi}], [t_c e^{-i phi}, r e^{-i theta}]].
struct DG {
  double r = 0.0, s = 0.0, t_c = 0.0, theta = 0.0, phi = 0.0;
};
// DG with phi = 0 and t_c = s.
struct Part {
  double r = 0.0, s = 0.0, theta = 0.0;
};
// [[e1 - i g1, nu0], [nu0, e2 - i g2]].
struct GMM {
  double e1 = 0.0, e2 = 0.0, g1 = 0.0, g2 = 0.0;
  Complex nu0;
};
// E [[cos theta, e^{-i phi} sin theta], [e^{i phi} sin theta, -cos theta]].
struct MO {
  Complex e{1.0, 0.0};
  Complex theta;
  Complex phi;
};
// [[m c^2, c px + v], [c px - v, -m c^2]].
struct Rel {
  double m = 0.0, c = 0.0, px = 0.0, v = 0.0;
};
// [[a_r, i b_r], [i b_r, -a_r]].
struct JSM {
  double a_r = 0.0, b_r = 0.0;
};

using ModelSpec = std::variant<DG, Part, GMM, MO, Rel, JSM>;

std::string_view model_name(const ModelSpec& spec);

// Throws kInvalidSpec on non-finite values and violated domain restrictions
// (MO: E != 0, theta != 0, Re theta and Re phi in [0, pi); GMM: g1, g2 >= 0;
// JSM: b_r != 0).
void validate(const ModelSpec& spec);

// Harmless but noteworthy inputs, e.g. DG with r, s or t_c zero.
std::vector<std::string> flags(const ModelSpec& spec);

Mat2 to_matrix(const ModelSpec& spec);

// --- exceptional points ---------------------------------------------------

struct EPStatus {
  enum class Kind { kNone, kAtEP, kNoPF };
  Kind kind = Kind::kNone;
  Complex coalesced;   // AtEP only
  std::string reason;  // NoPF only
  // Signed, continuous, zero on the model's critical locus: DG (r sin)^2 -
  // s t_c, Part (r sin)^2 - s^2, GMM |W|, MO +inf, Rel c px + v,
  // JSM b_r^2 - a_r^2.
  double margin = 0.0;
  // Analytic eigenvalue gap and the eigen-solver threshold it is held to.
  double gap = 0.0;
  double threshold = 0.0;
};

std::string_view to_string(EPStatus::Kind k);

// AtEP when the analytic gap is below tol (1 + |tr H|), the same rule the
// eigen-solver applies. AtEP takes precedence over NoPF.
EPStatus ep_condition(const ModelSpec& spec, double tol = kPhaseTol);

// --- identification ---------------------------------------------------------

struct DGAux {
  double x_r = 0.0;  // (r sin theta / s)^2 - t_c / s
  Complex sqrt_x_r;  // principal branch
  Complex x_rr_plus;   // r sin theta / s - sqrt(x_r)
  Complex x_rr_minus;  // r sin theta / s + sqrt(x_r)
  Complex alpha12_plus;
  Complex alpha12_minus;
  Complex beta11;
};

// Both decompositions under the model's own +- labels.
struct Identification {
  Decomposition dec_plus;
  Decomposition dec_minus;
  PFParameters params_plus;
  PFParameters params_minus;
  std::optional<DGAux> dg;

  const Decomposition& dec(Branch b) const { return b == Branch::kPlus ? dec_plus : dec_minus; }
  const PFParameters& params(Branch b) const {
    return b == Branch::kPlus ? params_plus : params_minus;
  }
};

// Throws kExceptionalPoint / kNoPseudoFermions per ep_condition. The default
// gauge pins a11 (falling back to a12 = 1 when alpha = 0); each branch is
// checked by reassembling the model matrix.
Identification identify(const ModelSpec& spec, Gauge gauge = Gauge::alpha11(1.0),
                        double tol = kPhaseTol);

// --- phases ---------------------------------------------------------------

struct ModelPhase {
  Phase phase = Phase::kUnclassifiable;
  PhaseWitness witness;
  EPStatus ep;
  // DG and Part in the broken phase: |omega_+ - conj(omega_-)|.
  std::optional<double> omega_conjugacy;
};

ModelPhase phase_of(const ModelSpec& spec, double tol = kPhaseTol);

// Metrics from the DG-specialised closed forms, checked against the generic
// route for the same identification (relative 1e-9, else kInternal).
MetricPair dg_metrics(const DG& spec, Branch branch, Complex alpha11 = 1.0);

// --- reductions -------------------------------------------------------------

struct Reduction {
  std::optional<ModelSpec> spec;
  std::string reason;  // why not, when spec is empty
};

// Part -> DG, Rel -> MO, JSM -> MO; the target's matrix equals the source's.
Reduction reduce(const ModelSpec& spec);

// --- JSON -------------------------------------------------------------------

using Json = nlohmann::ordered_json;

// {"model": name, "params": {...}}, complex values as [re, im].
Json to_json(const ModelSpec& spec);
// Throws kInvalidSpec on unknown models or parameters, missing parameters
// and domain violations.
ModelSpec spec_from_json(const Json& j);
// As above from text; syntax errors raise kParseError with line and column.
ModelSpec spec_from_json_text(std::string_view text);
// Parses JSON text, raising kParseError with line and column on bad syntax.
Json parse_json_text(std::string_view text);

std::vector<std::string> param_names(const ModelSpec& spec);
// Copy of spec with one parameter replaced (validated).
ModelSpec with_param(const ModelSpec& spec, std::string_view name, double value);

Json complex_to_json(Complex z);

}  // namespace pfkit

#endif  // PFKIT_CATALOG_HPP_
