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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "plog/corpus.h"
#include "test_util.h"

namespace plog {
namespace {

TEST(Corpus, ManifestListsEveryScript) {
  std::vector<Fixture> fixtures = testing::Fixtures();
  std::set<std::string> listed;
  for (const Fixture& fx : fixtures) {
    EXPECT_TRUE(listed.insert(fx.id).second) << "duplicate " << fx.id;
    EXPECT_TRUE(std::filesystem::exists(fx.file)) << fx.file;
  }
  std::set<std::string> on_disk;
  for (const auto& e : std::filesystem::directory_iterator(testing::CorpusDir()))
    if (e.path().extension() == ".plog") on_disk.insert(e.path().stem().string());
  EXPECT_EQ(listed, on_disk);
  EXPECT_EQ(fixtures.size(), 18u);
}

TEST(Corpus, EveryFixtureMeetsItsExpectation) {
  for (const Fixture& fx : testing::Fixtures()) {
    FixtureOutcome out = RunFixture(fx);
    EXPECT_TRUE(out.parsed) << fx.id << "\n" << out.report;
    EXPECT_TRUE(out.matches) << fx.id << "\n" << out.report;
  }
}

TEST(Corpus, MutantsFailWithTheirClass) {
  const std::map<std::string, std::string> expected = {
      {"M1", "eigenvariable"}, {"M2", "discharge"},   {"M3", "polarity"},
      {"M4", "arity"},         {"M5", "alpha-range"}, {"M6", "atomicity"}};
  int seen = 0;
  for (const Fixture& fx : testing::Fixtures()) {
    auto it = expected.find(fx.id);
    if (it == expected.end()) continue;
    ++seen;
    EXPECT_FALSE(fx.expected.ok) << fx.id;
    EXPECT_EQ(fx.expected.diagnostic_class, it->second);
    Script s = ParseScript(ReadFile(fx.file));
    CheckReport r = Check(s.derivations.at(0).derivation, BuildRuleSet(fx.ruleset));
    EXPECT_FALSE(r.ok) << fx.id;
    EXPECT_TRUE(r.HasClass(it->second)) << fx.id;
  }
  EXPECT_EQ(seen, 6);
}

TEST(Corpus, WrongRuleSetIsAMismatch) {
  // The same derivation under a rule set missing its identity rule fails.
  Fixture fx = testing::Fixtures().front();
  ASSERT_EQ(fx.id, "F1");
  fx.ruleset = "free-base";
  EXPECT_FALSE(RunFixture(fx).matches);
}

TEST(Corpus, ManifestSyntax) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "plog_manifest_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream m(dir / "manifest");
    m << "# comment line\n\nA free-base ok a note\nB tennant fail:arity\n";
  }
  std::vector<Fixture> list = CorpusList(dir);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].id, "A");
  EXPECT_EQ(list[0].note, "a note");
  EXPECT_TRUE(list[0].expected.ok);
  EXPECT_EQ(list[1].expected, (Expectation{false, "arity"}));
  EXPECT_EQ(list[1].file, dir / "B.plog");
  FixtureOutcome missing = RunFixture(list[0]);
  EXPECT_FALSE(missing.parsed);
  EXPECT_FALSE(missing.matches);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace plog
