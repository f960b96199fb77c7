// Copyright 2026 The plog Authors.
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

#ifndef PLOG_CHECKER_H_
#define PLOG_CHECKER_H_

#include <optional>
#include <string>
#include <vector>

#include "plog/derivation.h"
#include "plog/pattern.h"
#include "plog/rulesets.h"

namespace plog {

struct Diagnostic {
  TreePath path;
  std::string cls;  // one of the diag:: constants
  std::string message;
};

struct CheckReport {
  bool ok = false;
  Judgment conclusion = Judgment::Absurd();
  std::vector<OpenAssumption> open_assumptions;
  std::vector<Diagnostic> diagnostics;

  bool HasClass(const std::string& cls) const;
};

// Checks every step of `d` against `rs`. Never throws on bad input; all
// problems are reported as diagnostics.
CheckReport Check(const Derivation& d, const RuleSet& rs);

// Matches a single step (not its premises) against `schema`, including
// discharges and side conditions. Problems are appended to `diagnostics`
// (tagged with `path`) when given. Returns the solved metavariables on
// success.
std::optional<Bindings> MatchStep(const Derivation& step,
                                  const RuleSchema& schema,
                                  std::vector<Diagnostic>* diagnostics = nullptr,
                                  const TreePath& path = {});

}  // namespace plog

#endif  // PLOG_CHECKER_H_
