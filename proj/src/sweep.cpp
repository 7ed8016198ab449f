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

#include "pfkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "pfkit/error.hpp"
#include "pfkit/literal.hpp"

namespace pfkit {
namespace {

[[noreturn]] void bad_grid(const std::string& what) { throw Error(ErrorCode::kInvalidGrid, what); }

double get_number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw Error(ErrorCode::kInvalidSpec, std::string(key) + " must be a number");
  return j[key].get<double>();
}

Axis axis_from_json(const Json& j) {
  if (!j.is_object()) bad_grid("each axis must be an object");
  Axis a;
  if (!j.contains("param") || !j["param"].is_string()) bad_grid("axis needs a string \"param\"");
  a.param = j["param"].get<std::string>();
  for (const char* key : {"from", "to", "steps"}) {
    if (!j.contains(key) || !j[key].is_number()) bad_grid(std::string("axis needs numeric \"") + key + "\"");
  }
  a.from = j["from"].get<double>();
  a.to = j["to"].get<double>();
  const double steps = j["steps"].get<double>();
  if (steps != std::floor(steps) || steps < 1.0 || steps > static_cast<double>(kMaxSteps)) {
    bad_grid("axis steps must be an integer in [1, 1e7]");
  }
  a.steps = static_cast<long>(steps);
  return a;
}

std::string csv_number(double v) { return format_double(v, 17); }

}  // namespace

double Axis::at(long i) const {
  if (steps == 1) return from;
  return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate(const SweepConfig& config) {
  if (config.axes.empty() || config.axes.size() > 2) bad_grid("a sweep needs one or two axes");
  const std::vector<std::string> names = param_names(config.base);
  for (const Axis& a : config.axes) {
    if (std::find(names.begin(), names.end(), a.param) == names.end()) {
      bad_grid("model " + std::string(model_name(config.base)) + " has no parameter \"" + a.param + "\"");
    }
    if (!std::isfinite(a.from) || !std::isfinite(a.to)) bad_grid("axis endpoints must be finite");
    if (a.steps < 1 || a.steps > kMaxSteps) bad_grid("axis steps must be in [1, 1e7]");
  }
  if (config.axes.size() == 2 && config.axes[0].param == config.axes[1].param) {
    bad_grid("the two axes must sweep different parameters");
  }
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) bad_grid("tol must be positive");
  if (config.workers < 1) bad_grid("workers must be >= 1");
}

SweepConfig sweep_config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidSpec, "sweep config must be a JSON object");
  SweepConfig c;
  if (!j.contains("axes") || !j["axes"].is_array()) bad_grid("missing array field \"axes\"");
  for (const Json& a : j["axes"]) c.axes.push_back(axis_from_json(a));
  if (c.axes.empty() || c.axes.size() > 2) bad_grid("a sweep needs one or two axes");

  // Axis parameters are filled with their start value before the spec is
  // parsed, so the template may leave them out.
  Json spec = {{"model", j.value("model", Json())}, {"params", j.value("params", Json::object())}};
  if (spec["params"].is_object()) {
    for (const Axis& a : c.axes) {
      if (!spec["params"].contains(a.param)) spec["params"][a.param] = a.from;
    }
  }
  c.base = spec_from_json(spec);

  c.tol = get_number(j, "tol", c.tol);
  const std::string branch = j.value("branch", std::string("minus"));
  if (branch == "plus") {
    c.branch = BranchChoice::kPlus;
  } else if (branch == "minus") {
    c.branch = BranchChoice::kMinus;
  } else if (branch == "both") {
    c.branch = BranchChoice::kBoth;
  } else {
    throw Error(ErrorCode::kInvalidSpec, "branch must be plus, minus or both");
  }
  const std::string output = j.value("output", std::string("csv"));
  if (output == "csv") {
    c.output = OutputFormat::kCsv;
  } else if (output == "json") {
    c.output = OutputFormat::kJson;
  } else {
    throw Error(ErrorCode::kInvalidSpec, "output must be csv or json");
  }
  const double seed = get_number(j, "seed", 0.0);
  if (seed < 0.0 || seed != std::floor(seed)) throw Error(ErrorCode::kInvalidSpec, "seed must be a non-negative integer");
  c.seed = static_cast<std::uint64_t>(seed);
  const double workers = get_number(j, "workers", 1.0);
  if (workers < 1.0 || workers != std::floor(workers) || workers > 1024.0) {
    bad_grid("workers must be an integer in [1, 1024]");
  }
  c.workers = static_cast<unsigned>(workers);
  validate(c);
  return c;
}

SweepRow evaluate(const ModelSpec& spec, double tol) {
  SweepRow row;
  const ModelPhase mp = phase_of(spec, tol);
  row.phase = mp.phase;
  row.e0 = mp.witness.eigenvalues[0];
  row.e1 = mp.witness.eigenvalues[1];
  row.discriminant = std::norm(row.e1 - row.e0);
  row.ep_margin = mp.ep.margin;
  row.abs_gamma = std::numeric_limits<double>::infinity();
  try {
    // |gamma| is the same on both branches: they only swap alpha and beta.
    const Identification id = identify(spec, Gauge::alpha11(1.0), tol);
    row.abs_gamma = std::abs(id.dec_minus.gamma);
    row.pf_exists = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExceptionalPoint && e.code() != ErrorCode::kNoPseudoFermions) throw;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  const Axis& outer = config.axes[0];
  const long inner_steps = config.axes.size() == 2 ? config.axes[1].steps : 1;
  const long total = outer.steps * inner_steps;
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));

  // Each index is evaluated independently, so the result does not depend on
  // which worker picks it up.
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto work = [&] {
    for (long k = next++; k < total && !failed; k = next++) {
      try {
        const long i = k / inner_steps;
        const long j = k % inner_steps;
        SweepRow& row = rows[static_cast<std::size_t>(k)];
        const double p1 = outer.at(i);
        ModelSpec spec = with_param(config.base, outer.param, p1);
        std::optional<double> p2;
        if (config.axes.size() == 2) {
          p2 = config.axes[1].at(j);
          spec = with_param(spec, config.axes[1].param, *p2);
        }
        row = evaluate(spec, config.tol);
        row.p1 = p1;
        row.p2 = p2;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<long>(config.workers, total));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    os << csv_number(r.p1) << ',' << (r.p2 ? csv_number(*r.p2) : std::string()) << ','
       << csv_number(r.e0.real()) << ',' << csv_number(r.e0.imag()) << ','
       << csv_number(r.e1.real()) << ',' << csv_number(r.e1.imag()) << ','
       << csv_number(r.abs_gamma) << ',' << csv_number(r.discriminant) << ','
       << csv_number(r.ep_margin) << ',' << to_string(r.phase) << ','
       << (r.pf_exists ? "true" : "false") << '\n';
  }
}

void write_json(std::ostream& os, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  Json axes = Json::array();
  for (const Axis& a : config.axes) {
    axes.push_back({{"param", a.param}, {"from", a.from}, {"to", a.to}, {"steps", a.steps}});
  }
  Json out_rows = Json::array();
  const auto num = [](double v) { return std::isfinite(v) ? Json(v) : Json(format_double(v)); };
  for (const SweepRow& r : rows) {
    out_rows.push_back({{"p1", r.p1},
                        {"p2", r.p2 ? Json(*r.p2) : Json()},
                        {"e0", complex_to_json(r.e0)},
                        {"e1", complex_to_json(r.e1)},
                        {"abs_gamma", num(r.abs_gamma)},
                        {"discriminant", r.discriminant},
                        {"ep_margin", num(r.ep_margin)},
                        {"phase", std::string(to_string(r.phase))},
                        {"pf_exists", r.pf_exists}});
  }
  const Json doc = {{"model", to_json(config.base)}, {"axes", axes}, {"rows", out_rows}};
  os << doc.dump(2) << '\n';
}

}  // namespace pfkit
