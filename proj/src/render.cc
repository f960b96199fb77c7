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

#include "plog/render.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace plog {

namespace {

// ---------------------------------------------------------------------------
// ASCII trees.

struct Block {
  std::vector<std::string> lines;
  size_t width = 0;
};

std::string Pad(const std::string& s, size_t left, size_t width) {
  std::string out(left, ' ');
  out += s;
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string LabelList(const Derivation& d) {
  std::set<int> labels;
  for (const Discharge& dc : d.discharges()) labels.insert(dc.label);
  std::string out;
  for (int l : labels) out += (out.empty() ? "" : ",") + std::to_string(l);
  return out;
}

Block Layout(const Derivation& d) {
  if (d.is_assumption()) {
    std::string leaf =
        "[" + ToString(d.conclusion()) + "]^" + std::to_string(d.label());
    return {{leaf}, leaf.size()};
  }
  constexpr size_t kGap = 3;
  std::vector<Block> kids;
  size_t height = 0, prem_width = 0;
  for (const Derivation& p : d.premises()) {
    kids.push_back(Layout(p));
    height = std::max(height, kids.back().lines.size());
    prem_width += kids.back().width;
  }
  if (kids.size() > 1) prem_width += kGap * (kids.size() - 1);

  std::string concl = ToString(d.conclusion());
  std::string name = " " + d.rule();
  if (!d.discharges().empty()) name += "_" + LabelList(d);
  size_t bar = std::max(prem_width, concl.size());
  size_t width = bar + name.size();

  Block out;
  out.width = width;
  size_t prem_left = (bar - prem_width) / 2;
  for (size_t row = 0; row < height; ++row) {
    std::string line(prem_left, ' ');
    for (size_t k = 0; k < kids.size(); ++k) {
      if (k) line.append(kGap, ' ');
      size_t skip = height - kids[k].lines.size();  // bottom-align
      line += row < skip ? std::string(kids[k].width, ' ')
                         : kids[k].lines[row - skip];
    }
    out.lines.push_back(Pad(line, 0, width));
  }
  out.lines.push_back(Pad(std::string(bar, '-') + name, 0, width));
  out.lines.push_back(Pad(concl, (bar - concl.size()) / 2, width));
  return out;
}

// ---------------------------------------------------------------------------
// LaTeX.

std::string LatexTerm(const Term& t);
std::string LatexFormula(const Formula& f);

std::string LatexName(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || c == '&' || c == '%' || c == '$' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

// x12 -> x_{12}
std::string LatexVar(const std::string& v) {
  size_t digits = v.find_first_of("0123456789");
  if (digits == std::string::npos) return v;
  return v.substr(0, digits) + "_{" + v.substr(digits) + "}";
}

std::string LatexTerm(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar: return LatexVar(t.name());
    case Term::Kind::kConst: return "\\mathit{" + LatexName(t.name()) + "}";
    case Term::Kind::kIota:
      return "\\iota " + LatexVar(t.name()) + "\\, " + LatexFormula(t.body());
  }
  return "";
}

std::string LatexOperand(const Term& t) {
  return t.kind() == Term::Kind::kIota ? "(" + LatexTerm(t) + ")" : LatexTerm(t);
}

std::string LatexFormula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::string out = "\\mathit{" + LatexName(f.predicate()) + "}";
      if (f.args().empty()) return out;
      out += "(";
      for (size_t i = 0; i < f.args().size(); ++i)
        out += (i ? ", " : "") + LatexTerm(f.args()[i]);
      return out + ")";
    }
    case Formula::Kind::kEq:
      return LatexOperand(f.left()) + " = " + LatexTerm(f.right());
    case Formula::Kind::kExistsBang:
      return "E!\\, " + LatexOperand(f.term());
    case Formula::Kind::kNot:
      return f.body().is_quantifier() ? "\\neg (" + LatexFormula(f.body()) + ")"
                                      : "\\neg " + LatexFormula(f.body());
    case Formula::Kind::kForall:
      return "\\forall " + LatexVar(f.bound()) + "\\, " + LatexFormula(f.body());
    case Formula::Kind::kExists:
      return "\\exists " + LatexVar(f.bound()) + "\\, " + LatexFormula(f.body());
  }
  return "";
}

void EmitLatex(const Derivation& d, const std::set<int>& discharged,
               std::ostringstream& out) {
  if (d.is_assumption()) {
    std::string j = LatexJudgment(d.conclusion());
    if (discharged.count(d.label()))
      j = "[" + j + "]^{" + std::to_string(d.label()) + "}";
    out << "\\AxiomC{$" << j << "$}\n";
    return;
  }
  for (size_t i = 0; i < d.premises().size(); ++i) {
    std::set<int> inner = discharged;
    for (const Discharge& dc : d.discharges())
      if (dc.premise == i) inner.insert(dc.label);
    EmitLatex(d.premises()[i], inner, out);
  }
  if (d.premises().empty()) out << "\\AxiomC{}\n";
  out << "\\RightLabel{\\scriptsize " << LatexName(d.rule());
  if (!d.discharges().empty()) out << "$_{" << LabelList(d) << "}$";
  out << "}\n";
  static const char* kInf[] = {"Unary", "Unary", "Binary", "Trinary",
                               "Quaternary", "Quinary"};
  size_t n = std::min<size_t>(d.premises().size(), 5);
  out << "\\" << kInf[n] << "InfC{$" << LatexJudgment(d.conclusion()) << "$}\n";
}

// ---------------------------------------------------------------------------
// Script syntax.

std::string Quote(const std::string& s) { return "\"" + s + "\""; }

void Emit(const Derivation& d, int indent, std::string& out) {
  std::string pad(indent, ' ');
  if (d.is_assumption()) {
    out += pad + "(assume " + std::to_string(d.label()) + " " +
           Quote(ToString(d.conclusion())) + ")";
    return;
  }
  out += pad + "(rule " + d.rule();
  if (!d.discharges().empty()) {
    out += " :discharges (";
    for (size_t i = 0; i < d.discharges().size(); ++i) {
      const Discharge& dc = d.discharges()[i];
      if (i) out += ' ';
      out += std::to_string(dc.label);
      if (DefaultDischargePremise(d.premises(), dc.label) != dc.premise)
        out += "@" + std::to_string(dc.premise);
    }
    out += ")";
  }
  if (d.context())
    out += " :context " + Quote(ToString(*d.context())) + " :var " +
           *d.context_var();
  for (const Derivation& p : d.premises()) {
    out += "\n" + pad + "  (premise\n";
    Emit(p, indent + 4, out);
    out += ")";
  }
  out += "\n" + pad + "  (concl " + Quote(ToString(d.conclusion())) + "))";
}

}  // namespace

std::string RenderText(const Derivation& d) {
  std::string out;
  for (const std::string& line : Layout(d).lines) {
    size_t end = line.find_last_not_of(' ');
    out += (end == std::string::npos ? "" : line.substr(0, end + 1)) + "\n";
  }
  return out;
}

std::string LatexJudgment(const Judgment& j) {
  switch (j.kind()) {
    case Judgment::Kind::kAsserted: return "+\\, " + LatexFormula(j.formula());
    case Judgment::Kind::kDenied: return "-\\, " + LatexFormula(j.formula());
    case Judgment::Kind::kAcknowledged: return "!\\, " + LatexOperand(j.term());
    case Judgment::Kind::kRejected: return "/\\, " + LatexOperand(j.term());
    case Judgment::Kind::kAbsurd: return "\\bot";
  }
  return "\\bot";
}

std::string ExportLatex(const Derivation& d) {
  std::ostringstream out;
  out << "\\begin{prooftree}\n";
  EmitLatex(d, {}, out);
  out << "\\end{prooftree}\n";
  return out.str();
}

std::string EmitDerivation(const Derivation& d, int indent) {
  std::string out;
  Emit(d, indent, out);
  return out;
}

std::string EmitScript(const Script& script) {
  std::string out = "(ruleset " + script.ruleset + ")\n";
  for (const NamedDerivation& nd : script.derivations) {
    out += "\n(derivation " + nd.name;
    if (nd.expect) {
      if (nd.expect->ok)
        out += " :expect ok";
      else if (nd.expect->diagnostic_class.empty())
        out += " :expect fail";
      else
        out += " :expect (fail " + nd.expect->diagnostic_class + ")";
    }
    out += "\n" + EmitDerivation(nd.derivation, 2) + ")\n";
  }
  return out;
}

std::string FormatReport(const std::string& name, const CheckReport& report) {
  std::string out = "derivation: " + name + "\n";
  out += std::string("result: ") + (report.ok ? "ok" : "fail") + "\n";
  out += "conclusion: " + ToString(report.conclusion) + "\n";
  out += "open:";
  for (size_t i = 0; i < report.open_assumptions.size(); ++i) {
    const OpenAssumption& a = report.open_assumptions[i];
    out += (i ? "; [" : " [") + std::to_string(a.label) + "] " +
           ToString(a.judgment);
  }
  out += "\n";
  for (const Diagnostic& d : report.diagnostics)
    out += "diag: " + PathString(d.path) + " " + d.cls + " " + d.message + "\n";
  return out;
}

}  // namespace plog
