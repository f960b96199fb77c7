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

// Terms, formulas and judgments of the free-logic / bilateral calculi.
//
// All three are immutable values backed by shared nodes, so copying is cheap
// and values may be shared freely between threads.

#ifndef PLOG_SYNTAX_H_
#define PLOG_SYNTAX_H_

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace plog {

class Formula;

class Term {
 public:
  enum class Kind { kVar, kConst, kIota };

  static Term Var(std::string name);
  static Term Const(std::string name);
  // The definite description `iota bound. body`.
  static Term Iota(std::string bound, Formula body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  // Variable or constant name; the bound variable for an iota term.
  const std::string& name() const;
  const Formula& body() const;  // iota only

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

class Formula {
 public:
  enum class Kind { kAtom, kEq, kExistsBang, kNot, kForall, kExists };

  static Formula Atom(std::string predicate, std::vector<Term> args);
  static Formula Eq(Term left, Term right);
  static Formula ExistsBang(Term arg);
  static Formula Not(Formula body);
  static Formula Forall(std::string bound, Formula body);
  static Formula Exists(std::string bound, Formula body);

  Kind kind() const;
  const std::string& predicate() const;      // atom
  const std::vector<Term>& args() const;     // atom
  const Term& left() const;                  // eq
  const Term& right() const;                 // eq
  const Term& term() const;                  // existence predicate
  const Formula& body() const;               // not, forall, exists
  const std::string& bound() const;          // forall, exists

  bool is_quantifier() const {
    return kind() == Kind::kForall || kind() == Kind::kExists;
  }

  // Exact structural equality; bound names must agree. See AlphaEqual.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Rep;
  explicit Formula(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

class Judgment {
 public:
  enum class Kind { kAsserted, kDenied, kAcknowledged, kRejected, kAbsurd };

  static Judgment Asserted(Formula f) { return {Kind::kAsserted, std::move(f)}; }
  static Judgment Denied(Formula f) { return {Kind::kDenied, std::move(f)}; }
  static Judgment Acknowledged(Term t) { return {Kind::kAcknowledged, std::move(t)}; }
  static Judgment Rejected(Term t) { return {Kind::kRejected, std::move(t)}; }
  static Judgment Absurd() { return Judgment(); }

  Kind kind() const { return kind_; }
  bool is_signed() const {
    return kind_ == Kind::kAsserted || kind_ == Kind::kDenied;
  }
  bool is_forced() const {
    return kind_ == Kind::kAcknowledged || kind_ == Kind::kRejected;
  }
  const Formula& formula() const { return *formula_; }
  const Term& term() const { return *term_; }

  friend bool operator==(const Judgment& a, const Judgment& b) = default;

 private:
  Judgment() = default;
  Judgment(Kind k, Formula f) : kind_(k), formula_(std::move(f)) {}
  Judgment(Kind k, Term t) : kind_(k), term_(std::move(t)) {}

  Kind kind_ = Kind::kAbsurd;
  std::optional<Formula> formula_;
  std::optional<Term> term_;
};

using VarSet = std::set<std::string>;

VarSet FreeVars(const Term& t);
VarSet FreeVars(const Formula& f);
VarSet FreeVars(const Judgment& j);

bool OccursFree(const std::string& x, const Formula& f);

// Capture-avoiding substitution of `t` for the free occurrences of `x`.
// A binder that would capture a free variable of `t` is renamed with
// FreshName against the free variables of `t` and of the binder's body.
Formula Substitute(const Formula& f, const std::string& x, const Term& t);
Term Substitute(const Term& s, const std::string& x, const Term& t);
Judgment Substitute(const Judgment& j, const std::string& x, const Term& t);

// Smallest `base`, `base1`, `base2`, ... not in `avoid`, where `base` is
// `hint` without its trailing digits.
std::string FreshName(const std::string& hint, const VarSet& avoid);

bool AlphaEqual(const Term& a, const Term& b);
bool AlphaEqual(const Formula& a, const Formula& b);
bool AlphaEqual(const Judgment& a, const Judgment& b);

// Atom, identity and the existence predicate.
bool IsAtomic(const Formula& f);

// Connective count; identity and the existence predicate have degree 0.
int Degree(const Formula& f);

// Given `body` with `x` free and a candidate instance `inst`, finds the term
// `t` with body[t/x] alpha-equal to `inst`. Returns:
//   nullopt            when no such term exists;
//   optional(nullopt)  when x is not free in body and body matches as is;
//   optional(t)        otherwise.
std::optional<std::optional<Term>> SolveInstance(const Formula& body,
                                                 const std::string& x,
                                                 const Formula& inst);

// Canonical text with bound variables replaced by binder depth; two formulas
// are alpha-equal iff their keys are equal. Used for hashing and ordering.
std::string AlphaKey(const Term& t);
std::string AlphaKey(const Formula& f);
std::string AlphaKey(const Judgment& j);

// Concrete ASCII syntax, re-parseable by ParseFormula / ParseJudgment.
std::string ToString(const Term& t);
std::string ToString(const Formula& f);
std::string ToString(const Judgment& j);

// Every term occurring in `f` (including subterms of iota bodies), in order
// of first occurrence, without duplicates. Terms mentioning a variable bound
// in `f` are skipped.
std::vector<Term> ClosedSubterms(const Formula& f);

// Calls `fn(predicate, arity)` for every atom in `f`, including iota bodies.
void ForEachAtom(const Formula& f,
                 const std::function<void(const std::string&, size_t)>& fn);

}  // namespace plog

#endif  // PLOG_SYNTAX_H_
