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

#include "plog/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace plog {

namespace {

std::string JoinExpected(const std::set<std::string>& expected) {
  std::string out;
  for (const std::string& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

std::string FormatError(int line, int column, const std::string& message,
                        const std::set<std::string>& expected) {
  std::string out = std::to_string(line) + ":" + std::to_string(column) +
                    ": " + message;
  if (!expected.empty()) out += " (expected " + JoinExpected(expected) + ")";
  return out;
}

bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsAlnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }

bool IsVariableName(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin() + 1, s.end(), IsDigit);
}

bool IsKeyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "iota";
}

// Tracks line/column while scanning.
class Cursor {
 public:
  Cursor(std::string_view text, SourcePos origin)
      : text_(text), pos_(origin) {}

  bool done() const { return i_ >= text_.size(); }
  char peek(size_t k = 0) const {
    return i_ + k < text_.size() ? text_[i_ + k] : '\0';
  }
  char get() {
    char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  SourcePos pos() const { return pos_; }
  size_t offset() const { return i_; }

 private:
  std::string_view text_;
  size_t i_ = 0;
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Formula tokens.

enum class Tok {
  kIdent, kQuoted, kLParen, kRParen, kComma, kDot, kTilde, kEquals, kEBang,
  kPlus, kMinus, kBang, kSlash, kHash, kEnd
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kQuoted: return "`" + t.text + "`";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> Lex(std::string_view text, SourcePos origin) {
  std::vector<Token> out;
  Cursor cur(text, origin);
  while (true) {
    while (!cur.done() && std::isspace(static_cast<unsigned char>(cur.peek())))
      cur.get();
    SourcePos at = cur.pos();
    if (cur.done()) {
      out.push_back({Tok::kEnd, "", at});
      return out;
    }
    char c = cur.peek();
    if (IsAlpha(c)) {
      std::string word;
      while (IsAlnum(cur.peek())) word += cur.get();
      if (word == "E" && cur.peek() == '!') {
        cur.get();
        out.push_back({Tok::kEBang, "E!", at});
      } else {
        out.push_back({Tok::kIdent, word, at});
      }
      continue;
    }
    if (c == '`') {
      cur.get();
      std::string name;
      while (!cur.done() && cur.peek() != '`' && cur.peek() != '\n')
        name += cur.get();
      if (cur.peek() != '`')
        throw SyntaxError(at.line, at.column, "unterminated quoted constant",
                          {"'`'"});
      cur.get();
      if (name.empty())
        throw SyntaxError(at.line, at.column, "empty quoted constant");
      out.push_back({Tok::kQuoted, name, at});
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '.': kind = Tok::kDot; break;
      case '~': kind = Tok::kTilde; break;
      case '=': kind = Tok::kEquals; break;
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '!': kind = Tok::kBang; break;
      case '/': kind = Tok::kSlash; break;
      case '#': kind = Tok::kHash; break;
      default:
        throw SyntaxError(at.line, at.column,
                          std::string("unexpected character '") + c + "'");
    }
    cur.get();
    out.push_back({kind, std::string(1, c), at});
  }
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, SourcePos origin)
      : tokens_(Lex(text, origin)) {}

  Formula WholeFormula() {
    Formula f = ParseFormula();
    ExpectEnd();
    return f;
  }

  Term WholeTerm() {
    Term t = ParseTerm();
    ExpectEnd();
    return t;
  }

  Judgment WholeJudgment() {
    std::optional<Judgment> j;
    switch (Peek().kind) {
      case Tok::kPlus: Next(); j = Judgment::Asserted(ParseFormula()); break;
      case Tok::kMinus: Next(); j = Judgment::Denied(ParseFormula()); break;
      case Tok::kBang: Next(); j = Judgment::Acknowledged(ParseTerm()); break;
      case Tok::kSlash: Next(); j = Judgment::Rejected(ParseTerm()); break;
      case Tok::kHash: Next(); j = Judgment::Absurd(); break;
      default: j = Judgment::Asserted(ParseFormula()); break;
    }
    ExpectEnd();
    return *j;
  }

 private:
  const Token& Peek(size_t k = 0) const {
    return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const std::set<std::string>& expected,
                         const std::string& what = "unexpected") const {
    const Token& t = Peek();
    throw SyntaxError(t.pos.line, t.pos.column, what + " " + Describe(t),
                      expected);
  }

  void Expect(Tok kind, const std::string& name) {
    if (Peek().kind != kind) Fail({name});
    Next();
  }

  void ExpectEnd() {
    if (Peek().kind != Tok::kEnd) Fail({"end of input"});
  }

  std::string ParseVariable() {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || !IsVariableName(t.text) || IsKeyword(t.text))
      Fail({"variable"});
    return Next().text;
  }

  Formula ParseFormula() {
    const Token& t = Peek();
    if (t.kind == Tok::kIdent && (t.text == "forall" || t.text == "exists")) {
      bool universal = t.text == "forall";
      Next();
      std::string x = ParseVariable();
      Expect(Tok::kDot, "'.'");
      Formula body = ParseFormula();
      return universal ? Formula::Forall(x, body) : Formula::Exists(x, body);
    }
    return ParseUnary();
  }

  Formula ParseUnary() {
    if (Peek().kind == Tok::kTilde) {
      Next();
      const Token& t = Peek();
      if (t.kind == Tok::kIdent && (t.text == "forall" || t.text == "exists"))
        return Formula::Not(ParseFormula());
      return Formula::Not(ParseUnary());
    }
    return ParseAtomic();
  }

  Formula ParseAtomic() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kLParen: {
        size_t saved = pos_;
        try {
          Term left = ParseTerm();
          if (Peek().kind == Tok::kEquals) {
            Next();
            return Formula::Eq(left, ParseTerm());
          }
        } catch (const SyntaxError&) {
        }
        pos_ = saved;
        Next();
        Formula f = ParseFormula();
        Expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kEBang:
        Next();
        return Formula::ExistsBang(ParseTerm());
      case Tok::kIdent:
        if (IsUpper(t.text[0])) {
          if (Peek(1).kind == Tok::kLParen) {
            std::string pred = Next().text;
            Next();
            std::vector<Term> args{ParseTerm()};
            while (Peek().kind == Tok::kComma) {
              Next();
              args.push_back(ParseTerm());
            }
            Expect(Tok::kRParen, "')'");
            return Formula::Atom(pred, std::move(args));
          }
          if (Peek(1).kind != Tok::kEquals)
            return Formula::Atom(Next().text, {});
        }
        break;
      case Tok::kQuoted:
        break;
      default:
        Fail({"formula"});
    }
    Term left = ParseTerm();
    Expect(Tok::kEquals, "'='");
    return Formula::Eq(left, ParseTerm());
  }

  Term ParseTerm() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kQuoted:
        return Term::Const(Next().text);
      case Tok::kLParen: {
        Next();
        Term inner = ParseTerm();
        Expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        if (t.text == "iota") {
          Next();
          std::string x = ParseVariable();
          Expect(Tok::kDot, "'.'");
          return Term::Iota(x, ParseFormula());
        }
        if (IsUpper(t.text[0])) return Term::Const(Next().text);
        if (IsVariableName(t.text)) return Term::Var(Next().text);
        Fail({"term"}, "not a variable or constant:");
      default:
        Fail({"term"});
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// S-expressions.

struct SExpr {
  enum class Kind { kList, kSymbol, kString };
  Kind kind;
  std::string text;
  std::vector<SExpr> items;
  SourcePos pos;          // of the first character
  SourcePos content_pos;  // strings: first character inside the quotes
};

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : cur_(text, {}) {}

  std::vector<SExpr> ReadAll() {
    std::vector<SExpr> out;
    while (true) {
      SkipBlank();
      if (cur_.done()) return out;
      if (cur_.peek() == ')') {
        SourcePos p = cur_.pos();
        throw SyntaxError(p.line, p.column, "unbalanced ')'", {"'('"});
      }
      out.push_back(Read());
    }
  }

 private:
  void SkipBlank() {
    while (!cur_.done()) {
      char c = cur_.peek();
      if (c == ';') {
        while (!cur_.done() && cur_.peek() != '\n') cur_.get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        cur_.get();
      } else {
        return;
      }
    }
  }

  SExpr Read() {
    SExpr e;
    e.pos = cur_.pos();
    char c = cur_.peek();
    if (c == '(') {
      cur_.get();
      e.kind = SExpr::Kind::kList;
      while (true) {
        SkipBlank();
        if (cur_.done()) {
          SourcePos p = cur_.pos();
          throw SyntaxError(p.line, p.column,
                            "unexpected end of input; list opened at " +
                                std::to_string(e.pos.line) + ":" +
                                std::to_string(e.pos.column) + " is not closed",
                            {"')'"});
        }
        if (cur_.peek() == ')') {
          cur_.get();
          return e;
        }
        e.items.push_back(Read());
      }
    }
    if (c == '"') {
      cur_.get();
      e.kind = SExpr::Kind::kString;
      e.content_pos = cur_.pos();
      while (!cur_.done() && cur_.peek() != '"') e.text += cur_.get();
      if (cur_.done())
        throw SyntaxError(e.pos.line, e.pos.column, "unterminated string",
                          {"'\"'"});
      cur_.get();
      return e;
    }
    e.kind = SExpr::Kind::kSymbol;
    while (!cur_.done()) {
      char d = cur_.peek();
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' ||
          d == '"' || d == ';')
        break;
      e.text += cur_.get();
    }
    return e;
  }

  Cursor cur_;
};

[[noreturn]] void FailAt(const SExpr& e, const std::string& message,
                         const std::set<std::string>& expected = {}) {
  throw SyntaxError(e.pos.line, e.pos.column, message, expected);
}

bool IsSymbol(const SExpr& e, std::string_view text) {
  return e.kind == SExpr::Kind::kSymbol && e.text == text;
}

const std::string& HeadOf(const SExpr& e) {
  static const std::string kNone;
  if (e.kind != SExpr::Kind::kList || e.items.empty() ||
      e.items[0].kind != SExpr::Kind::kSymbol)
    return kNone;
  return e.items[0].text;
}

int ParseLabel(const SExpr& e, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0)
    FailAt(e, "invalid label '" + std::string(text) + "'", {"positive integer"});
  return value;
}

const SExpr& ExpectString(const SExpr& e) {
  if (e.kind != SExpr::Kind::kString) FailAt(e, "expected a quoted string",
                                             {"string"});
  return e;
}

Derivation ParseTree(const SExpr& e);

Derivation ParseRule(const SExpr& e) {
  const auto& items = e.items;
  if (items.size() < 2 || items[1].kind != SExpr::Kind::kSymbol)
    FailAt(e, "rule without a name", {"rule name"});
  std::string name = items[1].text;
  std::vector<Derivation> premises;
  std::vector<std::pair<const SExpr*, std::string>> discharge_specs;
  std::optional<Formula> context;
  std::optional<std::string> context_var;
  std::optional<Judgment> conclusion;
  const SExpr* context_expr = nullptr;

  for (size_t i = 2; i < items.size(); ++i) {
    const SExpr& item = items[i];
    if (IsSymbol(item, ":discharges")) {
      if (++i >= items.size() || items[i].kind != SExpr::Kind::kList)
        FailAt(item, "expected a label list after :discharges", {"'('"});
      for (const SExpr& l : items[i].items) {
        if (l.kind != SExpr::Kind::kSymbol) FailAt(l, "expected a label");
        discharge_specs.emplace_back(&l, l.text);
      }
    } else if (IsSymbol(item, ":context")) {
      if (++i >= items.size()) FailAt(item, "missing context", {"string"});
      const SExpr& s = ExpectString(items[i]);
      context = ParseFormula(s.text, s.content_pos);
      context_expr = &s;
    } else if (IsSymbol(item, ":var")) {
      if (++i >= items.size() || items[i].kind != SExpr::Kind::kSymbol ||
          !IsVariableName(items[i].text))
        FailAt(i < items.size() ? items[i] : item, "expected a variable",
               {"variable"});
      context_var = items[i].text;
    } else if (HeadOf(item) == "premise") {
      if (conclusion) FailAt(item, "premise after conclusion");
      if (item.items.size() != 2) FailAt(item, "premise takes one subtree");
      premises.push_back(ParseTree(item.items[1]));
    } else if (HeadOf(item) == "concl") {
      if (conclusion) FailAt(item, "duplicate conclusion");
      if (item.items.size() != 2) FailAt(item, "concl takes one judgment");
      const SExpr& s = ExpectString(item.items[1]);
      conclusion = ParseJudgment(s.text, s.content_pos);
    } else {
      FailAt(item, "unexpected item in rule",
             {":discharges", ":context", ":var", "(premise", "(concl"});
    }
  }
  if (!conclusion) FailAt(e, "rule without conclusion", {"(concl"});
  if (context.has_value() != context_var.has_value())
    FailAt(context_expr ? *context_expr : e,
           ":context and :var must be given together");

  std::vector<Discharge> discharges;
  for (const auto& [where, text] : discharge_specs) {
    size_t at = text.find('@');
    Discharge dc;
    dc.label = ParseLabel(*where, std::string_view(text).substr(0, at));
    if (at != std::string::npos) {
      int idx = 0;
      std::string_view rest = std::string_view(text).substr(at + 1);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), idx);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || idx < 0 ||
          static_cast<size_t>(idx) >= std::max<size_t>(premises.size(), 1))
        FailAt(*where, "invalid premise index in '" + text + "'");
      dc.premise = static_cast<size_t>(idx);
    } else {
      dc.premise = DefaultDischargePremise(premises, dc.label);
    }
    discharges.push_back(dc);
  }
  Derivation d = Derivation::Step(name, std::move(premises), *conclusion,
                                  std::move(discharges));
  if (context) d.set_context(*context, *context_var);
  return d;
}

Derivation ParseTree(const SExpr& e) {
  const std::string& head = HeadOf(e);
  if (head == "assume") {
    if (e.items.size() != 3 || e.items[1].kind != SExpr::Kind::kSymbol)
      FailAt(e, "expected (assume <label> \"<judgment>\")");
    int label = ParseLabel(e.items[1], e.items[1].text);
    const SExpr& s = ExpectString(e.items[2]);
    return Derivation::Assume(label, ParseJudgment(s.text, s.content_pos));
  }
  if (head == "rule") return ParseRule(e);
  FailAt(e, "expected a derivation", {"(assume", "(rule"});
}

Expectation ParseExpectation(const SExpr& e) {
  if (IsSymbol(e, "ok")) return {true, ""};
  if (IsSymbol(e, "fail")) return {false, ""};
  if (HeadOf(e) == "fail" && e.items.size() == 2 &&
      e.items[1].kind == SExpr::Kind::kSymbol)
    return {false, e.items[1].text};
  FailAt(e, "bad expectation", {"ok", "fail", "(fail <class>)"});
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, std::string message,
                         std::set<std::string> expected)
    : std::runtime_error(FormatError(line, column, message, expected)),
      line_(line),
      column_(column),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

Formula ParseFormula(std::string_view text, SourcePos origin) {
  return FormulaParser(text, origin).WholeFormula();
}

Term ParseTerm(std::string_view text, SourcePos origin) {
  return FormulaParser(text, origin).WholeTerm();
}

Judgment ParseJudgment(std::string_view text, SourcePos origin) {
  return FormulaParser(text, origin).WholeJudgment();
}

std::vector<Judgment> ParseJudgmentList(std::string_view text) {
  std::vector<Judgment> out;
  int depth = 0;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos)
      out.push_back(ParseJudgment(piece, {1, static_cast<int>(start) + 1}));
    start = end + 1;
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ';' || c == ',') && depth <= 0) flush(i);
  }
  flush(text.size());
  return out;
}

Script ParseScript(std::string_view text) {
  Script script;
  bool have_ruleset = false;
  for (const SExpr& form : SExprReader(text).ReadAll()) {
    const std::string& head = HeadOf(form);
    if (head == "ruleset") {
      if (have_ruleset) FailAt(form, "duplicate ruleset line");
      if (form.items.size() != 2 || form.items[1].kind == SExpr::Kind::kList)
        FailAt(form, "expected (ruleset <name>)", {"ruleset name"});
      script.ruleset = form.items[1].text;
      have_ruleset = true;
    } else if (head == "derivation") {
      const auto& items = form.items;
      if (items.size() < 3 || items[1].kind != SExpr::Kind::kSymbol)
        FailAt(form, "expected (derivation <name> [:expect ...] <tree>)");
      NamedDerivation nd{items[1].text, Derivation::Assume(1, Judgment::Absurd()),
                         std::nullopt};
      for (const NamedDerivation& other : script.derivations)
        if (other.name == nd.name)
          FailAt(items[1], "duplicate derivation name '" + nd.name + "'");
      size_t i = 2;
      if (IsSymbol(items[i], ":expect")) {
        if (i + 1 >= items.size()) FailAt(items[i], "missing expectation");
        nd.expect = ParseExpectation(items[i + 1]);
        i += 2;
      }
      if (i + 1 != items.size())
        FailAt(i < items.size() ? items[i] : form,
               "derivation takes exactly one tree", {"(assume", "(rule"});
      nd.derivation = ParseTree(items[i]);
      script.derivations.push_back(std::move(nd));
    } else {
      FailAt(form, "unexpected top-level form", {"(ruleset", "(derivation"});
    }
  }
  if (!have_ruleset)
    throw SyntaxError(1, 1, "script has no ruleset line", {"(ruleset"});
  return script;
}

Derivation ParseDerivation(std::string_view text) {
  std::vector<SExpr> forms = SExprReader(text).ReadAll();
  if (forms.size() != 1)
    throw SyntaxError(1, 1, "expected exactly one derivation", {"(assume", "(rule"});
  return ParseTree(forms[0]);
}

}  // namespace plog
