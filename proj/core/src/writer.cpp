// Copyright 2026 The ExLibris Authors
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

#include "exlibris/writer.hpp"

#include <algorithm>
#include <cstdio>

#include "exlibris/operators.hpp"

namespace exlibris {
namespace {

bool is_symbol_char(char c) {
  return std::string_view("+-*/\\^<>=~:.?@#&$").find(c) != std::string_view::npos;
}

bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

bool needs_quotes(std::string_view s) {
  if (s.empty()) return true;
  if (s == "[]" || s == "!" || s == ";") return false;
  if (s[0] >= 'a' && s[0] <= 'z') return !std::all_of(s.begin(), s.end(), is_alnum);
  if (std::all_of(s.begin(), s.end(), is_symbol_char)) {
    return s == "." || s.starts_with("/*");
  }
  return true;
}

std::string quoted(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7F) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%X\\", u);
          out += buf;
        } else {
          out += c;
        }
      }
    }
  }
  out += '\'';
  return out;
}

// Operators whose infix form is written without surrounding spaces.
bool is_tight(std::string_view op) { return op == ":" || op == "/" || op == "**" || op == "^"; }

std::string join_infix(const std::string& left, const std::string& op, const std::string& right) {
  if (op == ",") return left + ", " + right;
  if (!is_tight(op)) return left + " " + op + " " + right;
  std::string out = left;
  if (!left.empty() && is_symbol_char(left.back()) && is_symbol_char(op.front())) out += ' ';
  out += op;
  if (!right.empty() && is_symbol_char(op.back()) && is_symbol_char(right.front())) out += ' ';
  out += right;
  return out;
}

std::string functor_text(const std::string& name) {
  return name == "[]" ? quoted(name) : quote_atom(name);
}

std::string render(const Term& t, int max_priority, bool nested);

std::string render_list(const Term& t) {
  std::string out = "[";
  const Term* cur = &t;
  bool first = true;
  while (cur->is_cons()) {
    if (!first) out += ',';
    first = false;
    out += render(cur->arg(0), 999, true);
    cur = &cur->arg(1);
  }
  if (!cur->is_nil()) out += "|" + render(*cur, 999, true);
  return out + "]";
}

std::string render_args(std::span<const Term> args, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += sep;
    out += render(args[i], 999, true);
  }
  return out;
}

std::string render(const Term& t, int max_priority, bool nested) {
  const auto& ops = OpTable::standard();
  switch (t.kind()) {
    case Term::Kind::integer:
      return std::to_string(t.value());
    case Term::Kind::variable:
      return t.name();
    case Term::Kind::atom:
      if (nested && ops.is_operator(t.name())) return quoted(t.name());
      return quote_atom(t.name());
    case Term::Kind::compound:
      break;
  }
  if (t.is_cons()) return render_list(t);
  if (t.arity() == 2) {
    if (auto op = ops.infix(t.name())) {
      std::string s = join_infix(render(t.arg(0), op->left_max(), true), t.name(),
                                 render(t.arg(1), op->right_max(), true));
      return op->priority > max_priority ? "(" + s + ")" : s;
    }
  }
  return functor_text(t.name()) + "(" + render_args(t.args(), ",") + ")";
}

bool is_functional(const Term& t) {
  if (!t.is_compound() || t.is_cons()) return false;
  return !(t.arity() == 2 && OpTable::standard().infix(t.name()));
}

std::string render_top(const Term& t, int max_priority, bool nested) {
  if (is_functional(t)) {
    return functor_text(t.name()) + "( " + render_args(t.args(), ", ") + " )";
  }
  return render(t, max_priority, nested);
}

}  // namespace

std::string quote_atom(std::string_view text) {
  return needs_quotes(text) ? quoted(text) : std::string(text);
}

std::string render_term(const Term& term) { return render(term, 1200, false); }

std::string render_clause(const Term& term) {
  std::string s;
  if (term.is_compound(":-", 1)) {
    s = ":- " + render_top(term.arg(0), 1199, true);
  } else {
    s = render_top(term, 1200, false);
  }
  if (!s.empty() && is_symbol_char(s.back())) s += ' ';
  return s + ".";
}

}  // namespace exlibris
