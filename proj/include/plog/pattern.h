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

// Judgment patterns used by rule schemas, and first-order matching against
// concrete judgments.
//
// Patterns range over four kinds of metavariable: formulas (A, C, F), terms
// (t, u, a), bound-variable names (x) and whole judgments (alpha). The one
// higher-order shape is the instance A[t/x]; it is matched lazily, once the
// quantified formula it refers to has been bound elsewhere, by solving for
// the substituted term.

#ifndef PLOG_PATTERN_H_
#define PLOG_PATTERN_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plog/syntax.h"

namespace plog {

struct TermPattern {
  enum class Kind { kMeta, kBoundVar, kIota };
  Kind kind;
  std::string name;     // term metavariable; bound-variable metavariable
  std::string formula;  // iota: body metavariable

  static TermPattern Meta(std::string n) { return {Kind::kMeta, std::move(n), ""}; }
  static TermPattern BoundVar(std::string x) {
    return {Kind::kBoundVar, std::move(x), ""};
  }
  static TermPattern Iota(std::string x, std::string body) {
    return {Kind::kIota, std::move(x), std::move(body)};
  }
};

class FormulaPattern {
 public:
  enum class Kind { kMeta, kAtomic, kInstance, kForall, kExists, kNot, kEq,
                    kExistsBang };

  static FormulaPattern Meta(std::string name);
  // A formula metavariable that only matches atomic formulas.
  static FormulaPattern Atomic(std::string name);
  // body[term/bound], where `body` and `bound` are metavariable names.
  static FormulaPattern Instance(std::string body, std::string bound,
                                 TermPattern term);
  static FormulaPattern Forall(std::string bound, FormulaPattern body);
  static FormulaPattern Exists(std::string bound, FormulaPattern body);
  static FormulaPattern Not(FormulaPattern body);
  static FormulaPattern Eq(TermPattern left, TermPattern right);
  static FormulaPattern ExistsBang(TermPattern arg);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }    // meta, atomic, instance body
  const std::string& bound() const { return bound_; }  // quantifiers, instance
  const std::vector<TermPattern>& terms() const { return terms_; }
  const FormulaPattern& child() const { return *child_; }

 private:
  Kind kind_ = Kind::kMeta;
  std::string name_, bound_;
  std::vector<TermPattern> terms_;
  std::shared_ptr<const FormulaPattern> child_;
};

struct JudgmentPattern {
  // kAny matches any judgment whose kind is in `allowed`.
  enum class Kind { kAsserted, kDenied, kAcknowledged, kRejected, kAbsurd,
                    kAny };
  Kind kind;
  std::optional<FormulaPattern> formula;
  std::optional<TermPattern> term;
  std::string name;  // kAny
  std::set<Judgment::Kind> allowed;

  static JudgmentPattern Asserted(FormulaPattern f) {
    return {Kind::kAsserted, std::move(f), {}, "", {}};
  }
  static JudgmentPattern Denied(FormulaPattern f) {
    return {Kind::kDenied, std::move(f), {}, "", {}};
  }
  static JudgmentPattern Acknowledged(TermPattern t) {
    return {Kind::kAcknowledged, {}, std::move(t), "", {}};
  }
  static JudgmentPattern Rejected(TermPattern t) {
    return {Kind::kRejected, {}, std::move(t), "", {}};
  }
  static JudgmentPattern Absurd() { return {Kind::kAbsurd, {}, {}, "", {}}; }
  static JudgmentPattern Any(std::string name, std::set<Judgment::Kind> allowed) {
    return {Kind::kAny, {}, {}, std::move(name), std::move(allowed)};
  }
};

// Metavariable assignment built up during matching.
struct Bindings {
  std::map<std::string, Formula> formulas;
  std::map<std::string, Term> terms;
  std::map<std::string, std::string> vars;
  std::map<std::string, Judgment> judgments;
};

// Diagnostic classes shared by matcher and checker.
namespace diag {
inline constexpr char kMismatch[] = "mismatch";
inline constexpr char kAtomicity[] = "atomicity";
inline constexpr char kAlphaRange[] = "alpha-range";
inline constexpr char kContext[] = "context";
inline constexpr char kEigenvariable[] = "eigenvariable";
inline constexpr char kDischarge[] = "discharge";
inline constexpr char kPolarity[] = "polarity";
inline constexpr char kArity[] = "arity";
inline constexpr char kLabel[] = "label";
inline constexpr char kUnknownRule[] = "unknown-rule";
inline constexpr char kShape[] = "shape";
}  // namespace diag

struct Mismatch {
  std::string cls;
  std::string message;
};

class Matcher {
 public:
  Matcher() = default;
  explicit Matcher(Bindings seed) : bindings_(std::move(seed)) {}

  // Structural match; instances are queued until Resolve.
  std::optional<Mismatch> Match(const JudgmentPattern& p, const Judgment& j);
  std::optional<Mismatch> Match(const FormulaPattern& p, const Formula& f);
  std::optional<Mismatch> Match(const TermPattern& p, const Term& t);

  // Discharges queued instances as far as bindings allow. With `final`, an
  // instance whose quantified formula never got bound is an error.
  std::optional<Mismatch> Resolve(bool final);

  const Bindings& bindings() const { return bindings_; }
  Bindings& mutable_bindings() { return bindings_; }
  bool has_pending() const { return !pending_.empty(); }

 private:
  struct Pending {
    FormulaPattern pattern;
    Formula target;
  };

  std::optional<Mismatch> MatchBinder(const std::string& xm,
                                      const FormulaPattern& body,
                                      const Formula& f);

  Bindings bindings_;
  std::vector<Pending> pending_;
};

std::optional<Term> Instantiate(const TermPattern& p, const Bindings& b);
std::optional<Formula> Instantiate(const FormulaPattern& p, const Bindings& b);
std::optional<Judgment> Instantiate(const JudgmentPattern& p, const Bindings& b);

// Metavariables mentioned by a pattern, prefixed by sort: "f:A", "t:t",
// "x:x", "j:alpha".
void CollectMetas(const JudgmentPattern& p, std::set<std::string>& out);
void CollectMetas(const FormulaPattern& p, std::set<std::string>& out);
void CollectMetas(const TermPattern& p, std::set<std::string>& out);

std::string ToString(const TermPattern& p);
std::string ToString(const FormulaPattern& p);
std::string ToString(const JudgmentPattern& p);

}  // namespace plog

#endif  // PLOG_PATTERN_H_
