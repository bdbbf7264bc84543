// Copyright 2026 The pencil Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PENCIL_PIPELINE_HPP
#define PENCIL_PIPELINE_HPP

#include <string>
#include <vector>

#include "pencil/certifier.hpp"
#include "pencil/derive.hpp"
#include "pencil/invariant.hpp"
#include "pencil/paper_constants.hpp"

namespace pencil {

struct StepRecord {
  std::string step;
  bool pass = false;
  std::string expected;
  std::string actual;
  double ms = 0.0;
};

struct Report {
  std::vector<StepRecord> steps;

  // Every step passed (an empty report does not pass).
  bool pass() const;
  const StepRecord* find(const std::string& step) const;
};

struct VerifyOptions {
  InvariantOptions invariant;
};

// End-to-end reproduction of the worked example, in order:
//   derive, factorization, irreducibility, real-roots, residues,
//   coprime-A-B, genericity, certify, invariant, integer-N,
//   normalization-ratio (informational, always passes).
// A failing or throwing step is recorded and the run continues.
Report run_verify_paper(const PaperConstants& constants = paper_constants(),
                        const VerifyOptions& options = {});

// JSON documents. Reports always carry the keys {step, pass, expected,
// actual, ms} per step; with include_timing = false every ms is 0 so the
// output is byte-stable.
std::string to_json(const Report& report, bool include_timing = true);
std::string to_json(const Certificate& cert);
std::string to_json(const DerivedSet& derived);
std::string to_json(const GenericityReport& report);
std::string to_json(const InvariantResult& result);

std::string to_text(const Report& report);
std::string to_text(const Certificate& cert);

}  // namespace pencil

#endif  // PENCIL_PIPELINE_HPP
