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

// The single-Hamiltonian analysis report behind `pfkit analyze`.

#ifndef PFKIT_ANALYZE_HPP_
#define PFKIT_ANALYZE_HPP_

#include "json.hpp"
#include "pfkit/catalog.hpp"
#include "pfkit/decomposition.hpp"
#include "pfkit/mat2.hpp"

namespace pfkit {

// Exit codes shared by the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNoPF = 2;

struct Analysis {
  Json report;
  int exit_code = kExitOk;
};

Json to_json(const Mat2& m);
Json to_json(const Vec2& v);
Json to_json(const PhaseWitness& w);

// Generic route: decompose with the alpha12 = 1 gauge.
Analysis analyze_matrix(const Mat2& h, Branch branch, double tol = kPhaseTol);

// Model route: catalog identification with the alpha11 = 1 gauge.
Analysis analyze_model(const ModelSpec& spec, Branch branch, double tol = kPhaseTol);

}  // namespace pfkit

#endif  // PFKIT_ANALYZE_HPP_
