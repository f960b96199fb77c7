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

// The fixture corpus: `<dir>/<id>.plog` files plus `<dir>/manifest`, one
// fixture per line:
//
//   F1  free-base+id1  ok               note...
//   M1  free-base+id1  fail:eigenvariable  note...
//
// Blank lines and lines starting with `#` are ignored.

#ifndef PLOG_CORPUS_H_
#define PLOG_CORPUS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "plog/checker.h"
#include "plog/parser.h"

namespace plog {

struct Fixture {
  std::string id;
  std::filesystem::path file;
  std::string ruleset;
  Expectation expected;
  std::string note;
};

// Throws std::runtime_error for an unreadable or malformed manifest.
std::vector<Fixture> CorpusList(const std::filesystem::path& dir);

std::string ReadFile(const std::filesystem::path& path);

struct FixtureOutcome {
  bool parsed = false;
  bool matches = false;  // every derivation met the expectation
  std::string report;    // FormatReport records, or the parse error
};

// Parses and checks every derivation of `f` under the manifest rule set. A
// script whose own ruleset line disagrees with the manifest does not match.
FixtureOutcome RunFixture(const Fixture& f);

// True iff `report` satisfies `e`: ok when expected ok, otherwise failed
// with a diagnostic of the expected class among its diagnostics.
bool MeetsExpectation(const CheckReport& report, const Expectation& e);

}  // namespace plog

#endif  // PLOG_CORPUS_H_
