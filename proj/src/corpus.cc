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

#include "plog/corpus.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "plog/render.h"
#include "plog/rulesets.h"

namespace plog {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Fixture> CorpusList(const std::filesystem::path& dir) {
  std::istringstream in(ReadFile(dir / "manifest"));
  std::vector<Fixture> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    Fixture f;
    std::string expected;
    if (!(fields >> f.id) || f.id[0] == '#') continue;
    if (!(fields >> f.ruleset >> expected))
      throw std::runtime_error("manifest:" + std::to_string(lineno) +
                               ": expected `ID RULESET EXPECTATION [NOTE]`");
    if (expected == "ok") {
      f.expected = {true, ""};
    } else if (expected.rfind("fail", 0) == 0) {
      f.expected = {false, ""};
      if (expected.size() > 5 && expected[4] == ':')
        f.expected.diagnostic_class = expected.substr(5);
      else if (expected.size() != 4)
        throw std::runtime_error("manifest:" + std::to_string(lineno) +
                                 ": bad expectation " + expected);
    } else {
      throw std::runtime_error("manifest:" + std::to_string(lineno) +
                               ": bad expectation " + expected);
    }
    std::getline(fields >> std::ws, f.note);
    f.file = dir / (f.id + ".plog");
    out.push_back(std::move(f));
  }
  return out;
}

bool MeetsExpectation(const CheckReport& report, const Expectation& e) {
  if (e.ok) return report.ok;
  if (report.ok) return false;
  return e.diagnostic_class.empty() || report.HasClass(e.diagnostic_class);
}

FixtureOutcome RunFixture(const Fixture& f) {
  FixtureOutcome out;
  Script script;
  try {
    script = ParseScript(ReadFile(f.file));
  } catch (const std::exception& e) {
    out.report = f.file.string() + ":" + std::string(e.what()) + "\n";
    return out;
  }
  out.parsed = true;
  RuleSet rs;
  try {
    rs = BuildRuleSet(f.ruleset, {});
    out.matches = BuildRuleSet(script.ruleset, {}).name == rs.name;
  } catch (const RuleSetError& e) {
    out.report = f.file.string() + ": " + e.what() + "\n";
    return out;
  }
  if (!out.matches)
    out.report += "ruleset mismatch: script says " + script.ruleset +
                  ", manifest says " + f.ruleset + "\n";
  for (const NamedDerivation& nd : script.derivations) {
    CheckReport r = Check(nd.derivation, rs);
    out.matches = MeetsExpectation(r, f.expected) && out.matches;
    out.report += FormatReport(nd.name, r);
  }
  return out;
}

}  // namespace plog
