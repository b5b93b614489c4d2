// Copyright 2026 The icp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icp/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace icp {

// ============================================================================
// Csp
// ============================================================================

VarId Csp::add_variable(const std::string& name,
                        const IntegerInterval& domain) {
  if (find(name)) throw std::invalid_argument("duplicate variable: " + name);
  variables.push_back({name, domain});
  return static_cast<VarId>(variables.size() - 1);
}

void Csp::add_constraint(const Expr& lhs, Comparison cmp, const Expr& rhs) {
  sources.push_back({lhs, cmp, rhs});
  Normalized n = normalize(lhs, cmp, rhs);
  switch (n.status) {
    case Normalized::Status::Constraint:
      constraints.push_back(std::move(n.constraint));
      break;
    case Normalized::Status::Trivial:
      break;
    case Normalized::Status::Infeasible:
      infeasible = true;
      break;
  }
}

void Csp::maximize(const Expr& objective_expr) {
  goal = Goal::Maximize;
  objective = objective_expr;
}

std::optional<VarId> Csp::find(std::string_view name) const {
  for (size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

std::vector<std::string> Csp::names() const {
  std::vector<std::string> out;
  out.reserve(variables.size());
  for (const Variable& v : variables) out.push_back(v.name);
  return out;
}

std::string Csp::to_string() const {
  std::ostringstream os;
  std::vector<std::string> n = names();
  for (const Variable& v : variables) {
    os << "var " << v.name << " in ";
    if (v.domain.is_bounded()) {
      os << "[" << v.domain.lo() << ".." << v.domain.hi() << "];\n";
    } else {
      os << "Z;\n";
    }
  }
  for (const Variable& v : variables) {
    if (v.domain.is_bounded()) continue;
    if (v.domain.has_lo()) {
      os << "constraint " << v.name << " >= " << v.domain.lo() << ";\n";
    }
    if (v.domain.has_hi()) {
      os << "constraint " << v.name << " <= " << v.domain.hi() << ";\n";
    }
    if (v.domain.is_empty()) os << "constraint 0 = 1;\n";
  }
  for (const SourceConstraint& c : sources) {
    os << "constraint " << icp::to_string(c.lhs, n) << " "
       << icp::to_string(c.cmp) << " " << icp::to_string(c.rhs, n) << ";\n";
  }
  if (goal == Goal::Maximize) {
    os << "maximize " << icp::to_string(objective, n) << ";\n";
  } else {
    os << "solve all;\n";
  }
  return os.str();
}

bool satisfies(const Csp& csp, const std::vector<Integer>& values) {
  for (size_t i = 0; i < csp.variables.size() && i < values.size(); ++i) {
    if (!csp.variables[i].domain.contains(values[i])) return false;
  }
  for (const SourceConstraint& c : csp.sources) {
    auto l = evaluate(c.lhs, values);
    auto r = evaluate(c.rhs, values);
    if (!l || !r) return false;
    bool ok = false;
    switch (c.cmp) {
      case Comparison::Lt:
        ok = *l < *r;
        break;
      case Comparison::Leq:
        ok = *l <= *r;
        break;
      case Comparison::Eq:
        ok = *l == *r;
        break;
      case Comparison::Neq:
        ok = *l != *r;
        break;
      case Comparison::Geq:
        ok = *l >= *r;
        break;
      case Comparison::Gt:
        ok = *l > *r;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

// ============================================================================
// Parser
// ============================================================================

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    static const char* kTwo[] = {"..", "<=", ">=", "!="};
    bool matched = false;
    for (const char* t : kTwo) {
      if (src.substr(i, 2) == t) {
        out.push_back({Tok::Symbol, t, l, cl});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("[]();+-*^<>=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Csp run() {
    bool goal_seen = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (is_word(t, "var")) {
        ++pos_;
        declaration();
      } else if (is_word(t, "constraint")) {
        ++pos_;
        Expr lhs = expression();
        Comparison cmp = comparison();
        Expr rhs = expression();
        expect(";");
        csp_.add_constraint(lhs, cmp, rhs);
      } else if (is_word(t, "solve") || is_word(t, "maximize")) {
        if (goal_seen) throw error(t, "goal already specified");
        goal_seen = true;
        ++pos_;
        if (t.text == "solve") {
          if (!is_word(peek(), "all")) throw error(peek(), "expected 'all'");
          ++pos_;
        } else {
          csp_.maximize(expression());
        }
        expect(";");
      } else {
        throw error(t, "expected 'var', 'constraint', 'solve' or 'maximize'");
      }
    }
    return std::move(csp_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  static bool is_word(const Token& t, const char* w) {
    return t.kind == Tok::Ident && t.text == w;
  }
  static bool is_symbol(const Token& t, const char* s) {
    return t.kind == Tok::Symbol && t.text == s;
  }
  static ParseError error(const Token& t, const std::string& msg) {
    std::string where = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    return ParseError(t.line, t.column, msg + " at " + where);
  }

  void expect(const char* s) {
    if (!is_symbol(peek(), s)) throw error(peek(), std::string("expected '") + s + "'");
    ++pos_;
  }

  Integer signed_int() {
    bool negative = false;
    if (is_symbol(peek(), "-")) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Tok::Int) throw error(peek(), "expected an integer");
    Integer v = Integer::parse(next().text);
    return negative ? -v : v;
  }

  void declaration() {
    const Token& name = peek();
    if (name.kind != Tok::Ident) throw error(name, "expected a variable name");
    ++pos_;
    if (csp_.find(name.text)) {
      throw ParseError(name.line, name.column,
                       "duplicate declaration of '" + name.text + "'");
    }
    if (!is_word(peek(), "in")) throw error(peek(), "expected 'in'");
    ++pos_;
    IntegerInterval domain;
    if (is_word(peek(), "Z")) {
      ++pos_;
      domain = IntegerInterval::all();
    } else {
      expect("[");
      Integer lo = signed_int();
      expect("..");
      Integer hi = signed_int();
      expect("]");
      domain = IntegerInterval::bounded(lo, hi);
    }
    expect(";");
    csp_.add_variable(name.text, domain);
  }

  Comparison comparison() {
    const Token& t = peek();
    static const std::pair<const char*, Comparison> kOps[] = {
        {"<", Comparison::Lt},  {"<=", Comparison::Leq}, {"=", Comparison::Eq},
        {"!=", Comparison::Neq}, {">=", Comparison::Geq}, {">", Comparison::Gt}};
    for (const auto& [s, c] : kOps) {
      if (is_symbol(t, s)) {
        ++pos_;
        return c;
      }
    }
    throw error(t, "expected a comparison operator");
  }

  Expr expression() {
    Expr e = term();
    while (is_symbol(peek(), "+") || is_symbol(peek(), "-")) {
      bool plus = next().text == "+";
      Expr r = term();
      e = plus ? expr::add(e, r) : expr::sub(e, r);
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (is_symbol(peek(), "*")) {
      ++pos_;
      e = expr::mul(e, factor());
    }
    return e;
  }

  Expr factor() {
    bool negative = false;
    if (is_symbol(peek(), "-")) {
      negative = true;
      ++pos_;
    }
    Expr e;
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      ++pos_;
      e = expr::lit(Integer::parse(t.text));
    } else if (t.kind == Tok::Ident) {
      ++pos_;
      auto id = csp_.find(t.text);
      if (!id) {
        throw ParseError(t.line, t.column,
                         "undeclared variable '" + t.text + "'");
      }
      e = expr::var(*id);
      if (is_symbol(peek(), "^")) {
        ++pos_;
        const Token& k = peek();
        if (k.kind != Tok::Int) throw error(k, "expected an exponent");
        ++pos_;
        Integer n = Integer::parse(k.text);
        if (n < Integer(1)) {
          throw ParseError(k.line, k.column, "exponent must be at least 1");
        }
        if (Integer(1000000) < n) {
          throw ParseError(k.line, k.column, "exponent too large");
        }
        e = expr::pow(e, static_cast<unsigned>(*n.to_int64()));
      }
    } else if (is_symbol(t, "(")) {
      ++pos_;
      e = expression();
      expect(")");
    } else {
      throw error(t, "expected an integer, a variable or '('");
    }
    return negative ? expr::neg(e) : e;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Csp csp_;
};

}  // namespace

Csp parse_problem(std::string_view text) { return Parser(text).run(); }

Csp parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace icp
