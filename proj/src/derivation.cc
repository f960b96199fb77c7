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

#include "plog/derivation.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plog {

Derivation Derivation::Assume(int label, Judgment j) {
  Derivation d(std::move(j));
  d.label_ = label;
  return d;
}

Derivation Derivation::Step(std::string rule, std::vector<Derivation> premises,
                            Judgment conclusion,
                            std::vector<Discharge> discharges) {
  if (rule.empty()) throw std::invalid_argument("step without rule name");
  Derivation d(std::move(conclusion));
  d.rule_ = std::move(rule);
  d.premises_ = std::move(premises);
  d.discharges_ = std::move(discharges);
  return d;
}

int Derivation::height() const {
  if (is_assumption()) return 0;
  int h = 0;
  for (const Derivation& p : premises_) h = std::max(h, p.height());
  return h + 1;
}

size_t Derivation::size() const {
  size_t n = 1;
  for (const Derivation& p : premises_) n += p.size();
  return n;
}

std::string PathString(const TreePath& path) {
  if (path.empty()) return ".";
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(path[i]);
  }
  return out;
}

const Derivation& NodeAt(const Derivation& d, const TreePath& path) {
  const Derivation* node = &d;
  for (size_t i : path) {
    if (i >= node->premises().size()) throw std::out_of_range("bad tree path");
    node = &node->premises()[i];
  }
  return *node;
}

Derivation& NodeAt(Derivation& d, const TreePath& path) {
  Derivation* node = &d;
  for (size_t i : path) {
    if (i >= node->premises().size()) throw std::out_of_range("bad tree path");
    node = &node->mutable_premises()[i];
  }
  return *node;
}

namespace {

bool Discharged(const Derivation& step, size_t premise, int label) {
  return std::any_of(step.discharges().begin(), step.discharges().end(),
                     [&](const Discharge& dc) {
                       return dc.premise == premise && dc.label == label;
                     });
}

}  // namespace

std::vector<OpenAssumption> OpenAssumptions(const Derivation& d) {
  if (d.is_assumption()) return {{d.label(), d.conclusion()}};
  std::vector<OpenAssumption> out;
  for (size_t i = 0; i < d.premises().size(); ++i) {
    for (OpenAssumption& a : OpenAssumptions(d.premises()[i]))
      if (!Discharged(d, i, a.label)) out.push_back(std::move(a));
  }
  return out;
}

Derivation SubstituteTree(const Derivation& d, const std::string& x,
                          const Term& t) {
  Derivation out = d;
  out.set_conclusion(Substitute(d.conclusion(), x, t));
  if (d.context() && *d.context_var() != x) {
    // The marked variable is a binder of the context; keep it out of `t`.
    std::string var = *d.context_var();
    Formula ctx = *d.context();
    VarSet t_free = FreeVars(t);
    if (t_free.count(var)) {
      VarSet avoid = t_free;
      VarSet cf = FreeVars(ctx);
      avoid.insert(cf.begin(), cf.end());
      avoid.insert(x);
      std::string renamed = FreshName(var, avoid);
      ctx = Substitute(ctx, var, Term::Var(renamed));
      var = renamed;
    }
    out.set_context(Substitute(ctx, x, t), var);
  }
  for (Derivation& p : out.mutable_premises()) p = SubstituteTree(p, x, t);
  return out;
}

size_t DefaultDischargePremise(const std::vector<Derivation>& premises,
                               int label) {
  for (size_t p = 0; p < premises.size(); ++p) {
    auto open = OpenAssumptions(premises[p]);
    if (std::any_of(open.begin(), open.end(),
                    [&](const OpenAssumption& a) { return a.label == label; }))
      return p;
  }
  return premises.empty() ? 0 : premises.size() - 1;
}

int MaxLabel(const Derivation& d) {
  int m = d.is_assumption() ? d.label() : 0;
  for (const Derivation& p : d.premises()) m = std::max(m, MaxLabel(p));
  for (const Discharge& dc : d.discharges()) m = std::max(m, dc.label);
  return m;
}

namespace {

void RenameOpen(Derivation& d, int from, int to) {
  if (d.is_assumption()) {
    if (d.label() == from) d = Derivation::Assume(to, d.conclusion());
    return;
  }
  for (size_t i = 0; i < d.premises().size(); ++i) {
    if (Discharged(d, i, from)) continue;
    RenameOpen(d.mutable_premises()[i], from, to);
  }
}

}  // namespace

Derivation FreshenDischargedLabels(const Derivation& d, int& next_label) {
  if (d.is_assumption()) return d;
  Derivation out = d;
  for (Derivation& p : out.mutable_premises())
    p = FreshenDischargedLabels(p, next_label);
  std::map<std::pair<size_t, int>, int> renamed;
  for (Discharge& dc : out.mutable_discharges()) {
    auto key = std::make_pair(dc.premise, dc.label);
    auto it = renamed.find(key);
    if (it == renamed.end()) {
      int fresh = next_label++;
      if (dc.premise < out.premises().size())
        RenameOpen(out.mutable_premises()[dc.premise], dc.label, fresh);
      it = renamed.emplace(key, fresh).first;
    }
    dc.label = it->second;
  }
  return out;
}

namespace {

bool Equivalent(const Derivation& a, const Derivation& b,
                std::map<int, int>& forward, std::map<int, int>& backward) {
  if (a.is_assumption() != b.is_assumption()) return false;
  if (!AlphaEqual(a.conclusion(), b.conclusion())) return false;
  if (a.is_assumption()) {
    auto f = forward.emplace(a.label(), b.label()).first;
    auto g = backward.emplace(b.label(), a.label()).first;
    return f->second == b.label() && g->second == a.label();
  }
  if (a.rule() != b.rule() || a.premises().size() != b.premises().size() ||
      a.discharges().size() != b.discharges().size())
    return false;
  if (a.context().has_value() != b.context().has_value()) return false;
  if (a.context() &&
      !AlphaEqual(Formula::Forall(*a.context_var(), *a.context()),
                  Formula::Forall(*b.context_var(), *b.context())))
    return false;
  for (size_t i = 0; i < a.premises().size(); ++i)
    if (!Equivalent(a.premises()[i], b.premises()[i], forward, backward))
      return false;
  for (size_t i = 0; i < a.discharges().size(); ++i) {
    const Discharge& x = a.discharges()[i];
    const Discharge& y = b.discharges()[i];
    if (x.premise != y.premise) return false;
    auto f = forward.emplace(x.label, y.label).first;
    auto g = backward.emplace(y.label, x.label).first;
    if (f->second != y.label || g->second != x.label) return false;
  }
  return true;
}

void Walk(const Derivation& d, TreePath& path,
          const std::function<void(const Derivation&, const TreePath&)>& fn) {
  for (size_t i = 0; i < d.premises().size(); ++i) {
    path.push_back(i);
    Walk(d.premises()[i], path, fn);
    path.pop_back();
  }
  fn(d, path);
}

}  // namespace

bool EquivalentTrees(const Derivation& a, const Derivation& b) {
  std::map<int, int> forward, backward;
  return Equivalent(a, b, forward, backward);
}

void PostOrder(const Derivation& d,
               const std::function<void(const Derivation&, const TreePath&)>& fn) {
  TreePath path;
  Walk(d, path, fn);
}

}  // namespace plog
