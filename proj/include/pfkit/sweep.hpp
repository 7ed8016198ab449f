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

// Parameter-grid sweeps over catalog models, emitted as CSV or JSON rows in
// grid order.

#ifndef PFKIT_SWEEP_HPP_
#define PFKIT_SWEEP_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfkit/catalog.hpp"

namespace pfkit {

inline constexpr long kMaxSteps = 10'000'000;

struct Axis {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  long steps = 1;
  // from + (to - from) i / (steps - 1); a single step sits at `from`.
  double at(long i) const;
};

enum class BranchChoice { kPlus, kMinus, kBoth };
enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
  ModelSpec base;
  std::vector<Axis> axes;  // one or two; the first is the outer (slowest) axis
  double tol = kPhaseTol;
  BranchChoice branch = BranchChoice::kMinus;
  OutputFormat output = OutputFormat::kCsv;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// {"model", "params", "axes": [{"param", "from", "to", "steps"}], "tol",
// "branch", "output", "seed", "workers"}. Axis parameters may be omitted
// from "params". Throws kInvalidGrid or kInvalidSpec.
SweepConfig sweep_config_from_json(const Json& j);

// Throws kInvalidGrid.
void validate(const SweepConfig& config);

struct SweepRow {
  double p1 = 0.0;
  std::optional<double> p2;
  Complex e0, e1;
  double abs_gamma = 0.0;  // +inf where no decomposition exists
  double discriminant = 0.0;  // |e1 - e0|^2
  double ep_margin = 0.0;
  Phase phase = Phase::kUnclassifiable;
  bool pf_exists = false;
};

SweepRow evaluate(const ModelSpec& spec, double tol);

// Rows in grid order regardless of the worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr const char* kCsvHeader =
    "p1,p2,re_e0,im_e0,re_e1,im_e1,abs_gamma,discriminant,ep_margin,phase,pf_exists";

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_json(std::ostream& os, const SweepConfig& config, const std::vector<SweepRow>& rows);

}  // namespace pfkit

#endif  // PFKIT_SWEEP_HPP_
