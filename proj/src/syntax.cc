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

#include "plog/syntax.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace plog {

struct Term::Rep {
  Kind kind;
  std::string name;
  std::optional<Formula> body;
};

struct Formula::Rep {
  Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<Term> terms;
  std::optional<Formula> body;
};

namespace {

void RequireName(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty identifier");
}

}  // namespace

Term Term::Var(std::string name) {
  RequireName(name);
  return Term(std::make_shared<Rep>(Rep{Kind::kVar, std::move(name), {}}));
}

Term Term::Const(std::string name) {
  RequireName(name);
  return Term(std::make_shared<Rep>(Rep{Kind::kConst, std::move(name), {}}));
}

Term Term::Iota(std::string bound, Formula body) {
  RequireName(bound);
  return Term(
      std::make_shared<Rep>(Rep{Kind::kIota, std::move(bound), std::move(body)}));
}

Term::Kind Term::kind() const { return rep_->kind; }
const std::string& Term::name() const { return rep_->name; }
const Formula& Term::body() const { return *rep_->body; }

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  return a.kind() == b.kind() && a.name() == b.name() &&
         (a.kind() != Term::Kind::kIota || a.body() == b.body());
}

Formula Formula::Atom(std::string predicate, std::vector<Term> args) {
  RequireName(predicate);
  return Formula(std::make_shared<Rep>(
      Rep{Kind::kAtom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::Eq(Term left, Term right) {
  return Formula(std::make_shared<Rep>(
      Rep{Kind::kEq, "", {std::move(left), std::move(right)}, {}}));
}

Formula Formula::ExistsBang(Term arg) {
  return Formula(
      std::make_shared<Rep>(Rep{Kind::kExistsBang, "", {std::move(arg)}, {}}));
}

Formula Formula::Not(Formula body) {
  return Formula(std::make_shared<Rep>(Rep{Kind::kNot, "", {}, std::move(body)}));
}

Formula Formula::Forall(std::string bound, Formula body) {
  RequireName(bound);
  return Formula(std::make_shared<Rep>(
      Rep{Kind::kForall, std::move(bound), {}, std::move(body)}));
}

Formula Formula::Exists(std::string bound, Formula body) {
  RequireName(bound);
  return Formula(std::make_shared<Rep>(
      Rep{Kind::kExists, std::move(bound), {}, std::move(body)}));
}

Formula::Kind Formula::kind() const { return rep_->kind; }
const std::string& Formula::predicate() const { return rep_->name; }
const std::vector<Term>& Formula::args() const { return rep_->terms; }
const Term& Formula::left() const { return rep_->terms[0]; }
const Term& Formula::right() const { return rep_->terms[1]; }
const Term& Formula::term() const { return rep_->terms[0]; }
const Formula& Formula::body() const { return *rep_->body; }
const std::string& Formula::bound() const { return rep_->name; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind() || a.rep_->name != b.rep_->name ||
      a.rep_->terms != b.rep_->terms)
    return false;
  if (a.rep_->body.has_value() != b.rep_->body.has_value()) return false;
  return !a.rep_->body || *a.rep_->body == *b.rep_->body;
}

// ---------------------------------------------------------------------------
// Free variables.

namespace {

void CollectFree(const Formula& f, VarSet& bound, VarSet& out);

void CollectFree(const Term& t, VarSet& bound, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (!bound.count(t.name())) out.insert(t.name());
      break;
    case Term::Kind::kConst:
      break;
    case Term::Kind::kIota: {
      bool fresh = bound.insert(t.name()).second;
      CollectFree(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      break;
    }
  }
}

void CollectFree(const Formula& f, VarSet& bound, VarSet& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const Term& t : f.args()) CollectFree(t, bound, out);
      break;
    case Formula::Kind::kEq:
      CollectFree(f.left(), bound, out);
      CollectFree(f.right(), bound, out);
      break;
    case Formula::Kind::kExistsBang:
      CollectFree(f.term(), bound, out);
      break;
    case Formula::Kind::kNot:
      CollectFree(f.body(), bound, out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      bool fresh = bound.insert(f.bound()).second;
      CollectFree(f.body(), bound, out);
      if (fresh) bound.erase(f.bound());
      break;
    }
  }
}

}  // namespace

VarSet FreeVars(const Term& t) {
  VarSet bound, out;
  CollectFree(t, bound, out);
  return out;
}

VarSet FreeVars(const Formula& f) {
  VarSet bound, out;
  CollectFree(f, bound, out);
  return out;
}

VarSet FreeVars(const Judgment& j) {
  if (j.is_signed()) return FreeVars(j.formula());
  if (j.is_forced()) return FreeVars(j.term());
  return {};
}

bool OccursFree(const std::string& x, const Formula& f) {
  return FreeVars(f).count(x) > 0;
}

// ---------------------------------------------------------------------------
// Substitution.

std::string FreshName(const std::string& hint, const VarSet& avoid) {
  std::string base = hint;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back())))
    base.pop_back();
  if (base.empty()) base = "v";
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace {

// Renames the binder `bound` of a body when it would capture a free variable
// of the substituted term. Returns the (possibly new) binder and body.
std::pair<std::string, Formula> OpenBinder(const std::string& bound,
                                           const Formula& body,
                                           const std::string& x,
                                           const VarSet& t_free) {
  if (!t_free.count(bound) || !OccursFree(x, body)) return {bound, body};
  VarSet avoid = t_free;
  VarSet body_free = FreeVars(body);
  avoid.insert(body_free.begin(), body_free.end());
  std::string renamed = FreshName(bound, avoid);
  return {renamed, Substitute(body, bound, Term::Var(renamed))};
}

Term SubstTerm(const Term& s, const std::string& x, const Term& t,
               const VarSet& t_free);

Formula SubstFormula(const Formula& f, const std::string& x, const Term& t,
                     const VarSet& t_free) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& a : f.args()) args.push_back(SubstTerm(a, x, t, t_free));
      return Formula::Atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::kEq:
      return Formula::Eq(SubstTerm(f.left(), x, t, t_free),
                         SubstTerm(f.right(), x, t, t_free));
    case Formula::Kind::kExistsBang:
      return Formula::ExistsBang(SubstTerm(f.term(), x, t, t_free));
    case Formula::Kind::kNot:
      return Formula::Not(SubstFormula(f.body(), x, t, t_free));
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      if (f.bound() == x) return f;
      auto [bound, body] = OpenBinder(f.bound(), f.body(), x, t_free);
      Formula new_body = SubstFormula(body, x, t, t_free);
      return f.kind() == Formula::Kind::kForall
                 ? Formula::Forall(bound, std::move(new_body))
                 : Formula::Exists(bound, std::move(new_body));
    }
  }
  return f;
}

Term SubstTerm(const Term& s, const std::string& x, const Term& t,
               const VarSet& t_free) {
  switch (s.kind()) {
    case Term::Kind::kVar:
      return s.name() == x ? t : s;
    case Term::Kind::kConst:
      return s;
    case Term::Kind::kIota: {
      if (s.name() == x) return s;
      auto [bound, body] = OpenBinder(s.name(), s.body(), x, t_free);
      return Term::Iota(bound, SubstFormula(body, x, t, t_free));
    }
  }
  return s;
}

}  // namespace

Formula Substitute(const Formula& f, const std::string& x, const Term& t) {
  return SubstFormula(f, x, t, FreeVars(t));
}

Term Substitute(const Term& s, const std::string& x, const Term& t) {
  return SubstTerm(s, x, t, FreeVars(t));
}

Judgment Substitute(const Judgment& j, const std::string& x, const Term& t) {
  switch (j.kind()) {
    case Judgment::Kind::kAsserted:
      return Judgment::Asserted(Substitute(j.formula(), x, t));
    case Judgment::Kind::kDenied:
      return Judgment::Denied(Substitute(j.formula(), x, t));
    case Judgment::Kind::kAcknowledged:
      return Judgment::Acknowledged(Substitute(j.term(), x, t));
    case Judgment::Kind::kRejected:
      return Judgment::Rejected(Substitute(j.term(), x, t));
    case Judgment::Kind::kAbsurd:
      return j;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence and instance solving share one parallel walk.

namespace {

int ScopeIndex(const std::vector<std::string>& scope, const std::string& name) {
  for (size_t i = scope.size(); i-- > 0;)
    if (scope[i] == name) return static_cast<int>(scope.size() - 1 - i);
  return -1;
}

class ParallelWalk {
 public:
  ParallelWalk() = default;
  explicit ParallelWalk(std::string hole) : hole_(std::move(hole)) {}

  bool Terms(const Term& a, const Term& b) {
    if (hole_ && a.is_var() && a.name() == *hole_ &&
        ScopeIndex(left_, a.name()) < 0) {
      for (const std::string& v : FreeVars(b))
        if (ScopeIndex(right_, v) >= 0) return false;
      if (found_) return AlphaEqual(*found_, b);
      found_ = b;
      return true;
    }
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Term::Kind::kVar: {
        int ia = ScopeIndex(left_, a.name());
        int ib = ScopeIndex(right_, b.name());
        return ia == ib && (ia >= 0 || a.name() == b.name());
      }
      case Term::Kind::kConst:
        return a.name() == b.name();
      case Term::Kind::kIota:
        return Binder(a.name(), a.body(), b.name(), b.body());
    }
    return false;
  }

  bool Formulas(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Formula::Kind::kAtom:
        if (a.predicate() != b.predicate() || a.args().size() != b.args().size())
          return false;
        for (size_t i = 0; i < a.args().size(); ++i)
          if (!Terms(a.args()[i], b.args()[i])) return false;
        return true;
      case Formula::Kind::kEq:
        return Terms(a.left(), b.left()) && Terms(a.right(), b.right());
      case Formula::Kind::kExistsBang:
        return Terms(a.term(), b.term());
      case Formula::Kind::kNot:
        return Formulas(a.body(), b.body());
      case Formula::Kind::kForall:
      case Formula::Kind::kExists:
        return Binder(a.bound(), a.body(), b.bound(), b.body());
    }
    return false;
  }

  const std::optional<Term>& found() const { return found_; }

 private:
  bool Binder(const std::string& xa, const Formula& fa, const std::string& xb,
              const Formula& fb) {
    left_.push_back(xa);
    right_.push_back(xb);
    bool ok = Formulas(fa, fb);
    left_.pop_back();
    right_.pop_back();
    return ok;
  }

  std::optional<std::string> hole_;
  std::optional<Term> found_;
  std::vector<std::string> left_, right_;
};

}  // namespace

bool AlphaEqual(const Term& a, const Term& b) {
  return ParallelWalk().Terms(a, b);
}

bool AlphaEqual(const Formula& a, const Formula& b) {
  return ParallelWalk().Formulas(a, b);
}

bool AlphaEqual(const Judgment& a, const Judgment& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_signed()) return AlphaEqual(a.formula(), b.formula());
  if (a.is_forced()) return AlphaEqual(a.term(), b.term());
  return true;
}

std::optional<std::optional<Term>> SolveInstance(const Formula& body,
                                                 const std::string& x,
                                                 const Formula& inst) {
  ParallelWalk walk(x);
  if (!walk.Formulas(body, inst)) return std::nullopt;
  return walk.found();
}

bool IsAtomic(const Formula& f) {
  return f.kind() == Formula::Kind::kAtom || f.kind() == Formula::Kind::kEq ||
         f.kind() == Formula::Kind::kExistsBang;
}

int Degree(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kNot:
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return 1 + Degree(f.body());
    default:
      return 0;
  }
}

// ---------------------------------------------------------------------------
// Canonical keys.

namespace {

void Key(const Formula& f, std::vector<std::string>& scope, std::string& out);

void Key(const Term& t, std::vector<std::string>& scope, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      int i = ScopeIndex(scope, t.name());
      out += i >= 0 ? "#" + std::to_string(i) : "v:" + t.name();
      break;
    }
    case Term::Kind::kConst:
      out += "c:" + t.name();
      break;
    case Term::Kind::kIota:
      out += "(i ";
      scope.push_back(t.name());
      Key(t.body(), scope, out);
      scope.pop_back();
      out += ")";
      break;
  }
  out += ' ';
}

void Key(const Formula& f, std::vector<std::string>& scope, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += "(P:" + f.predicate() + " ";
      for (const Term& t : f.args()) Key(t, scope, out);
      break;
    case Formula::Kind::kEq:
      out += "(= ";
      Key(f.left(), scope, out);
      Key(f.right(), scope, out);
      break;
    case Formula::Kind::kExistsBang:
      out += "(E! ";
      Key(f.term(), scope, out);
      break;
    case Formula::Kind::kNot:
      out += "(~ ";
      Key(f.body(), scope, out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out += f.kind() == Formula::Kind::kForall ? "(A " : "(X ";
      scope.push_back(f.bound());
      Key(f.body(), scope, out);
      scope.pop_back();
      break;
  }
  out += ")";
}

}  // namespace

std::string AlphaKey(const Term& t) {
  std::vector<std::string> scope;
  std::string out;
  Key(t, scope, out);
  return out;
}

std::string AlphaKey(const Formula& f) {
  std::vector<std::string> scope;
  std::string out;
  Key(f, scope, out);
  return out;
}

std::string AlphaKey(const Judgment& j) {
  switch (j.kind()) {
    case Judgment::Kind::kAsserted:
      return "+" + AlphaKey(j.formula());
    case Judgment::Kind::kDenied:
      return "-" + AlphaKey(j.formula());
    case Judgment::Kind::kAcknowledged:
      return "!" + AlphaKey(j.term());
    case Judgment::Kind::kRejected:
      return "/" + AlphaKey(j.term());
    case Judgment::Kind::kAbsurd:
      return "#";
  }
  return "#";
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

bool IsPlainConstant(const std::string& name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string TermOperand(const Term& t) {
  // An iota body extends to the right, so it must be closed off when
  // something follows it.
  return t.kind() == Term::Kind::kIota ? "(" + ToString(t) + ")" : ToString(t);
}

}  // namespace

std::string ToString(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.name();
    case Term::Kind::kConst:
      return IsPlainConstant(t.name()) ? t.name() : "`" + t.name() + "`";
    case Term::Kind::kIota:
      return "iota " + t.name() + ". " + ToString(t.body());
  }
  return "";
}

std::string ToString(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      if (f.args().empty()) return f.predicate();
      std::string out = f.predicate() + "(";
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ", ";
        out += ToString(f.args()[i]);
      }
      return out + ")";
    }
    case Formula::Kind::kEq:
      return TermOperand(f.left()) + " = " + ToString(f.right());
    case Formula::Kind::kExistsBang:
      return "E! " + ToString(f.term());
    case Formula::Kind::kNot:
      return f.body().is_quantifier() ? "~ (" + ToString(f.body()) + ")"
                                      : "~ " + ToString(f.body());
    case Formula::Kind::kForall:
      return "forall " + f.bound() + ". " + ToString(f.body());
    case Formula::Kind::kExists:
      return "exists " + f.bound() + ". " + ToString(f.body());
  }
  return "";
}

std::string ToString(const Judgment& j) {
  switch (j.kind()) {
    case Judgment::Kind::kAsserted:
      return "+ " + ToString(j.formula());
    case Judgment::Kind::kDenied:
      return "- " + ToString(j.formula());
    case Judgment::Kind::kAcknowledged:
      return "! " + ToString(j.term());
    case Judgment::Kind::kRejected:
      return "/ " + ToString(j.term());
    case Judgment::Kind::kAbsurd:
      return "#";
  }
  return "#";
}

// ---------------------------------------------------------------------------
// Traversals.

namespace {

void CollectTerms(const Formula& f, VarSet& bound, std::vector<Term>& out);

void CollectTerms(const Term& t, VarSet& bound, std::vector<Term>& out) {
  bool closed = true;
  for (const std::string& v : FreeVars(t))
    if (bound.count(v)) closed = false;
  if (closed && std::none_of(out.begin(), out.end(), [&](const Term& s) {
        return AlphaEqual(s, t);
      }))
    out.push_back(t);
  if (t.kind() == Term::Kind::kIota) {
    bool fresh = bound.insert(t.name()).second;
    CollectTerms(t.body(), bound, out);
    if (fresh) bound.erase(t.name());
  }
}

void CollectTerms(const Formula& f, VarSet& bound, std::vector<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const Term& t : f.args()) CollectTerms(t, bound, out);
      break;
    case Formula::Kind::kEq:
      CollectTerms(f.left(), bound, out);
      CollectTerms(f.right(), bound, out);
      break;
    case Formula::Kind::kExistsBang:
      CollectTerms(f.term(), bound, out);
      break;
    case Formula::Kind::kNot:
      CollectTerms(f.body(), bound, out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      bool fresh = bound.insert(f.bound()).second;
      CollectTerms(f.body(), bound, out);
      if (fresh) bound.erase(f.bound());
      break;
    }
  }
}

void AtomsIn(const Term& t,
             const std::function<void(const std::string&, size_t)>& fn) {
  if (t.kind() == Term::Kind::kIota) ForEachAtom(t.body(), fn);
}

}  // namespace

std::vector<Term> ClosedSubterms(const Formula& f) {
  VarSet bound;
  std::vector<Term> out;
  CollectTerms(f, bound, out);
  return out;
}

void ForEachAtom(const Formula& f,
                 const std::function<void(const std::string&, size_t)>& fn) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      fn(f.predicate(), f.args().size());
      for (const Term& t : f.args()) AtomsIn(t, fn);
      break;
    case Formula::Kind::kEq:
      AtomsIn(f.left(), fn);
      AtomsIn(f.right(), fn);
      break;
    case Formula::Kind::kExistsBang:
      AtomsIn(f.term(), fn);
      break;
    case Formula::Kind::kNot:
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      ForEachAtom(f.body(), fn);
      break;
  }
}

}  // namespace plog
