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

// Randomized invariant suite behind `pfkit verify`.

#ifndef PFKIT_VERIFY_HPP_
#define PFKIT_VERIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pfkit {

struct InvariantLine {
  std::string name;
  double gate = 0.0;
  double max_residual = 0.0;
  long failures = 0;  // cases above the gate
  long cases = 0;
  bool pass() const { return failures == 0; }
};

struct VerifyOptions {
  long count = 1000;
  std::uint64_t seed = 42;
  // Mutation canary: negates the off-diagonal of S_phi.
  bool inject_fault = false;
};

struct VerifyReport {
  std::vector<InvariantLine> lines;
  bool pass() const;
  const InvariantLine* find(const std::string& name) const;
};

// Residuals are relative to the operand scale of each identity. Throws
// kInvalidSpec when count < 1.
VerifyReport run_verify(const VerifyOptions& options);

void print(std::ostream& os, const VerifyReport& report);

}  // namespace pfkit

#endif  // PFKIT_VERIFY_HPP_
