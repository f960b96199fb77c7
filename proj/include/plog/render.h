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

// Output formats for derivations: an ASCII tree for terminals, bussproofs
// LaTeX, the `.plog` script syntax, and line-oriented check reports.

#ifndef PLOG_RENDER_H_
#define PLOG_RENDER_H_

#include <string>

#include "plog/checker.h"
#include "plog/derivation.h"
#include "plog/parser.h"

namespace plog {

// Premises side by side above a rule line, conclusion centred below:
//
//   [+ E! t]^1   + t = t
//   ------------------- ExistsI
//     + exists x. x = t
//
// Discharging steps append their labels to the rule name ("ImpE_1,2").
std::string RenderText(const Derivation& d);

// A bussproofs `prooftree` environment. Discharged hypotheses are bracketed
// with their label as a superscript.
std::string ExportLatex(const Derivation& d);

std::string LatexJudgment(const Judgment& j);

// Script syntax for a single tree, indented by `indent` spaces. Parsing the
// result with ParseDerivation yields an identical tree.
std::string EmitDerivation(const Derivation& d, int indent = 0);

std::string EmitScript(const Script& script);

// Record of one check, one field per line:
//
//   derivation: NAME
//   result: ok|fail
//   conclusion: + exists x. x = t
//   open: [1] + E! t; [2] + F(t)
//   diag: 0/1 eigenvariable ExistsE: ...
std::string FormatReport(const std::string& name, const CheckReport& report);

}  // namespace plog

#endif  // PLOG_RENDER_H_
