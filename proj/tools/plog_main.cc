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

// plog: check, normalize, search and export natural-deduction derivations.
//
// Exit codes: 0 success, 1 parse or I/O error, 2 a derivation did not meet
// its expectation, 3 search found nothing within the depth, 4 bad rule-set
// configuration or search parameters.

#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plog/checker.h"
#include "plog/corpus.h"
#include "plog/normalizer.h"
#include "plog/parser.h"
#include "plog/render.h"
#include "plog/search.h"

namespace {

using namespace plog;

enum Exit { kOk = 0, kInputError = 1, kExpectation = 2, kExhausted = 3, kConfig = 4 };

struct Flags {
  std::string ruleset;
  bool as_printed = false;
  bool iota_converse = false;
  std::string format;
  std::vector<std::string> files;
  int depth = 4;
  std::string mode = "restricted";
  std::string from;
  std::string goal;
  std::string corpus_dir = "corpus";
};

RuleSet Rules(const Flags& f, const std::string& fallback) {
  return BuildRuleSet(f.ruleset.empty() ? fallback : f.ruleset,
                      {f.as_printed, f.iota_converse});
}

std::string Render(const Derivation& d, const std::string& format) {
  if (format == "latex") return ExportLatex(d);
  if (format == "script") return EmitDerivation(d) + "\n";
  return RenderText(d);
}

int RunCheck(const Flags& f) {
  int status = kOk;
  for (const std::string& file : f.files) {
    Script script = ParseScript(ReadFile(file));
    RuleSet rs = Rules(f, script.ruleset);
    for (const NamedDerivation& nd : script.derivations) {
      CheckReport report = Check(nd.derivation, rs);
      if (f.format == "text" || f.format == "latex")
        std::cout << Render(nd.derivation, f.format);
      std::cout << FormatReport(nd.name, report);
      Expectation expect = nd.expect.value_or(Expectation{});
      bool met = MeetsExpectation(report, expect);
      std::cout << "expectation: " << (met ? "met" : "NOT met") << "\n\n";
      if (!met) status = kExpectation;
    }
  }
  return status;
}

int RunNormalize(const Flags& f) {
  int status = kOk;
  SubformulaMode mode =
      f.mode == "full" ? SubformulaMode::kFull : SubformulaMode::kRestricted;
  for (const std::string& file : f.files) {
    Script script = ParseScript(ReadFile(file));
    RuleSet rs = Rules(f, script.ruleset);
    for (const NamedDerivation& nd : script.derivations) {
      std::cout << "derivation: " << nd.name << "\n";
      try {
        NormalizeResult r = Normalize(nd.derivation, rs);
        std::cout << "before:\n" << Render(nd.derivation, f.format);
        std::cout << "after (" << r.steps << " reduction"
                  << (r.steps == 1 ? "" : "s") << "):\n"
                  << Render(r.derivation, f.format);
        for (const MaximalOccurrence& m : r.surviving) {
          std::cout << "maximum: " << PathString(m.path) << " " << KindName(m.kind)
                    << " " << ToString(m.judgment);
          if (!m.note.empty()) std::cout << " (" << m.note << ")";
          std::cout << "\n";
        }
        SubformulaResult sf = SubformulaCheck(r.derivation, rs, mode);
        std::cout << "subformula (" << f.mode << "): " << (sf.holds ? "holds" : "fails")
                  << "\n";
        for (const SubformulaWitness& w : sf.witnesses)
          std::cout << "witness: " << PathString(w.path) << " " << ToString(w.formula)
                    << "\n";
      } catch (const PreconditionViolated& e) {
        std::cout << "error: " << e.what() << "\n";
        status = kExpectation;
      }
      std::cout << "\n";
    }
  }
  return status;
}

int RunSearch(const Flags& f) {
  RuleSet rs = Rules(f, "");
  Sequent s;
  s.hypotheses = ParseJudgmentList(f.from);
  s.goal = ParseJudgment(f.goal);
  SearchResult r = Search(s, rs, f.depth);
  if (!r.derivation) {
    std::cout << "NOT FOUND (depth=" << f.depth << ")"
              << (r.budget_exhausted ? " [node budget exhausted]" : "") << "\n";
    return kExhausted;
  }
  std::cout << Render(*r.derivation, f.format.empty() ? "script" : f.format);
  return kOk;
}

int RunExport(const Flags& f) {
  for (const std::string& file : f.files) {
    Script script = ParseScript(ReadFile(file));
    for (const NamedDerivation& nd : script.derivations) {
      if (f.format == "latex") std::cout << "% " << nd.name << "\n";
      else if (f.format != "script") std::cout << nd.name << ":\n";
      std::cout << Render(nd.derivation, f.format) << "\n";
    }
  }
  return kOk;
}

int RunCorpus(const Flags& f) {
  std::vector<Fixture> fixtures = CorpusList(f.corpus_dir);
  std::vector<std::future<FixtureOutcome>> jobs;
  for (const Fixture& fx : fixtures)
    jobs.push_back(std::async(std::launch::async, [&fx] { return RunFixture(fx); }));
  int status = kOk;
  for (size_t i = 0; i < fixtures.size(); ++i) {
    FixtureOutcome out = jobs[i].get();
    const Fixture& fx = fixtures[i];
    std::string expected =
        fx.expected.ok ? "ok" : "fail:" + fx.expected.diagnostic_class;
    std::cout << (out.matches ? "PASS " : "FAIL ") << fx.id << " (" << fx.ruleset
              << ", expected " << expected << ")\n";
    if (!out.matches) {
      std::cout << out.report;
      status = out.parsed ? kExpectation : kInputError;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checker for free and bilateral natural deduction"};
  app.require_subcommand(1);
  Flags f;

  auto add_rules = [&](CLI::App* cmd) {
    cmd->add_option("--ruleset", f.ruleset,
                    "Rule set, e.g. free-base+id1 or textor-prime+impasse");
    cmd->add_flag("--as-printed", f.as_printed,
                  "Use the typeset form of denied-negation introduction");
    cmd->add_flag("--iota-converse", f.iota_converse,
                  "Enable description introduction");
  };
  CLI::App* check = app.add_subcommand("check", "Check derivations in scripts");
  add_rules(check);
  check->add_option("files", f.files, "Script files")->required();
  check->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"report", "text", "latex"}));

  CLI::App* normalize = app.add_subcommand("normalize", "Normalize derivations");
  add_rules(normalize);
  normalize->add_option("files", f.files, "Script files")->required();
  normalize->add_option("--mode", f.mode, "Subformula property mode")
      ->check(CLI::IsMember({"full", "restricted"}));
  normalize->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "script"}));

  CLI::App* search = app.add_subcommand("search", "Search for a derivation");
  add_rules(search);
  search->get_option("--ruleset")->required();
  search->add_option("--from", f.from, "Hypotheses, comma separated");
  search->add_option("--goal", f.goal, "Goal judgment")->required();
  search->add_option("--depth", f.depth, "Maximum tree height");
  search->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"script", "text", "latex"}));

  CLI::App* exp = app.add_subcommand("export", "Render derivations");
  exp->add_option("files", f.files, "Script files")->required();
  exp->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"latex", "text", "script"}));

  CLI::App* corpus = app.add_subcommand("corpus-run", "Run the fixture manifest");
  corpus->add_option("dir", f.corpus_dir, "Corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (check->parsed()) {
      if (f.format.empty()) f.format = "report";
      return RunCheck(f);
    }
    if (normalize->parsed()) {
      if (f.format.empty()) f.format = "text";
      return RunNormalize(f);
    }
    if (search->parsed()) return RunSearch(f);
    if (exp->parsed()) {
      if (f.format.empty()) f.format = "latex";
      return RunExport(f);
    }
    if (corpus->parsed()) return RunCorpus(f);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kInputError;
  } catch (const RuleSetError& e) {
    std::cerr << "rule set: " << e.what() << "\n";
    return kConfig;
  } catch (const SearchError& e) {
    std::cerr << "search: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
