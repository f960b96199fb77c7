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

// Readers for the formula language and for `.plog` proof scripts.
//
// Formula grammar (ASCII):
//
//   formula := 'forall' var '.' formula | 'exists' var '.' formula | unary
//   unary   := '~' unary | atomic
//   atomic  := '(' formula ')' | 'E!' term | Pred '(' term, ... ')' | Pred
//            | term '=' term
//   term    := var | Const | '`' name '`' | 'iota' var '.' formula
//            | '(' term ')'
//
// Variables are a lowercase letter followed by digits; constants start with
// an uppercase letter or are backtick-quoted. Judgments prefix a formula with
// `+` or `-`, a term with `!` or `/`, or are `#` (absurdity). A bare formula
// is read as asserted.
//
// Script syntax:
//
//   (ruleset free-base+id1)
//   (derivation NAME [:expect ok|fail|(fail CLASS)]
//     (rule ExistsI :discharges (1 2@0) :context "F(x)" :var x
//       (premise (assume 1 "+ E! t")) ...
//       (concl "+ exists x. x = t")))
//
// `2@0` names the premise explicitly; a bare label is resolved to the first
// premise in which the label is open, else the last premise.

#ifndef PLOG_PARSER_H_
#define PLOG_PARSER_H_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plog/derivation.h"
#include "plog/syntax.h"

namespace plog {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, std::string message,
              std::set<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  int line_, column_;
  std::string detail_;
  std::set<std::string> expected_;
};

// 1-based source position.
struct SourcePos {
  int line = 1;
  int column = 1;
};

Formula ParseFormula(std::string_view text, SourcePos origin = {});
Term ParseTerm(std::string_view text, SourcePos origin = {});
Judgment ParseJudgment(std::string_view text, SourcePos origin = {});

// Comma- or semicolon-separated judgments (as used by `--from`).
std::vector<Judgment> ParseJudgmentList(std::string_view text);

struct Expectation {
  bool ok = true;
  std::string diagnostic_class;  // empty: any
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct NamedDerivation {
  std::string name;
  Derivation derivation;
  std::optional<Expectation> expect;
};

struct Script {
  std::string ruleset;
  std::vector<NamedDerivation> derivations;
};

// Throws SyntaxError (positions are within `text`), including for duplicate
// derivation names and a missing ruleset line.
Script ParseScript(std::string_view text);

// Parses a single tree in script syntax, e.g. `(assume 1 "+ A")`.
Derivation ParseDerivation(std::string_view text);

}  // namespace plog

#endif  // PLOG_PARSER_H_
