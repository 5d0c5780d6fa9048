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

#include "exlibris/reader.hpp"

#include <cstdint>
#include <deque>
#include <limits>

#include "exlibris/error.hpp"
#include "exlibris/operators.hpp"

namespace exlibris {
namespace {

bool is_symbol_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '\\': case '^': case '<':
    case '>': case '=': case '~': case ':': case '.': case '?': case '@':
    case '#': case '&': case '$':
      return true;
    default:
      return false;
  }
}

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '_'; }
bool is_layout(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

enum class Tok { name, var, integer, punct, end, eof };

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  std::uint64_t magnitude = 0;  // integers only
  bool quoted = false;
  bool functional = false;   // name immediately followed by '('
  bool minus_digit = false;  // "-" immediately followed by a digit
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;

  bool is_punct(char c) const { return kind == Tok::punct && text.size() == 1 && text[0] == c; }
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::eof: return "end of file";
    case Tok::end: return "end of clause";
    case Tok::integer: return "integer " + std::to_string(t.magnitude);
    case Tok::var: return "variable " + t.text;
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_layout();
    Token t;
    t.begin = pos_;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Tok::eof;
      t.end = pos_;
      return t;
    }
    char c = text_[pos_];
    if (is_digit(c)) {
      read_integer(t);
    } else if (is_lower(c)) {
      t.kind = Tok::name;
      while (pos_ < text_.size() && is_alnum(text_[pos_])) t.text += advance();
    } else if (is_upper(c) || c == '_') {
      t.kind = Tok::var;
      while (pos_ < text_.size() && is_alnum(text_[pos_])) t.text += advance();
    } else if (c == '\'' || c == '"') {
      t.kind = Tok::name;
      t.quoted = true;
      t.text = read_quoted(c, t);
    } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '|') {
      t.kind = Tok::punct;
      t.text = std::string(1, advance());
    } else if (c == '!' || c == ';') {
      t.kind = Tok::name;
      t.text = std::string(1, advance());
    } else if (c == '{' || c == '}') {
      throw SyntaxError("curly-brace terms are not supported", line_, column_);
    } else if (c == '`') {
      throw SyntaxError("back-quoted text is not supported", line_, column_);
    } else if (is_symbol_char(c)) {
      while (pos_ < text_.size() && is_symbol_char(text_[pos_])) t.text += advance();
      if (t.text == "." && (pos_ >= text_.size() || is_layout(text_[pos_]) ||
                            text_[pos_] == '%')) {
        t.kind = Tok::end;
      } else {
        t.kind = Tok::name;
      }
    } else {
      throw SyntaxError("unexpected character", line_, column_);
    }
    t.end = pos_;
    if (t.kind == Tok::name && pos_ < text_.size()) {
      t.functional = text_[pos_] == '(';
      t.minus_digit = !t.quoted && t.text == "-" && is_digit(text_[pos_]);
    }
    return t;
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
    return c;
  }

  void skip_layout() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (is_layout(c)) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        int line = line_, column = column_;
        advance();
        advance();
        for (;;) {
          if (pos_ + 1 >= text_.size()) {
            throw SyntaxError("unterminated block comment", line, column);
          }
          if (text_[pos_] == '*' && text_[pos_ + 1] == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        break;
      }
    }
  }

  void read_integer(Token& t) {
    t.kind = Tok::integer;
    if (text_[pos_] == '0' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
      throw SyntaxError("character code literals are not supported", line_, column_);
    }
    constexpr std::uint64_t limit =
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      value = value * 10 + static_cast<std::uint64_t>(advance() - '0');
      if (value > limit) throw SyntaxError("integer too large", t.line, t.column);
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' && is_digit(text_[pos_ + 1])) {
      throw SyntaxError("floating point numbers are not supported", t.line, t.column);
    }
    t.magnitude = value;
  }

  std::string read_quoted(char quote, const Token& start) {
    advance();
    std::string out;
    for (;;) {
      if (pos_ >= text_.size()) {
        throw SyntaxError(quote == '"' ? "unterminated string" : "unterminated quoted atom",
                          start.line, start.column);
      }
      char c = advance();
      if (c == quote) {
        if (pos_ < text_.size() && text_[pos_] == quote) {
          out += advance();
          continue;
        }
        return out;
      }
      if (c != '\\') {
        out += c;
        continue;
      }
      if (pos_ >= text_.size()) continue;
      int line = line_, column = column_;
      char e = advance();
      switch (e) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case 'a': out += '\a'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case 'v': out += '\v'; break;
        case '0': case '1': case '2': case '3': case '4': case '5': case '6': case '7':
        case 'x': {
          unsigned code = 0;
          int base = e == 'x' ? 16 : 8;
          if (e != 'x') code = static_cast<unsigned>(e - '0');
          for (;;) {
            if (pos_ >= text_.size()) throw SyntaxError("bad escape", line, column);
            char d = advance();
            if (d == '\\') break;
            int v = is_digit(d) ? d - '0'
                    : (d >= 'a' && d <= 'f') ? d - 'a' + 10
                    : (d >= 'A' && d <= 'F') ? d - 'A' + 10
                    : 99;
            if (v >= base) throw SyntaxError("bad escape", line, column);
            code = code * static_cast<unsigned>(base) + static_cast<unsigned>(v);
            if (code > 0x10FFFF) throw SyntaxError("bad escape", line, column);
          }
          append_utf8(out, code);
          break;
        }
        case '\n': break;
        case '\\': case '\'': case '"': case '`': out += e; break;
        default: throw SyntaxError("bad escape", line, column);
      }
    }
  }

  static void append_utf8(std::string& out, unsigned code) {
    if (code < 0x80) {
      out += static_cast<char>(code);
    } else if (code < 0x800) {
      out += static_cast<char>(0xC0 | (code >> 6));
      out += static_cast<char>(0x80 | (code & 0x3F));
    } else if (code < 0x10000) {
      out += static_cast<char>(0xE0 | (code >> 12));
      out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (code & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (code >> 18));
      out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (code & 0x3F));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  const Token& peek(std::size_t k = 0) {
    while (buffer_.size() <= k) buffer_.push_back(lexer_.next());
    return buffer_[k];
  }

  Token take() {
    peek();
    Token t = std::move(buffer_.front());
    buffer_.pop_front();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) {
    throw SyntaxError(message, at.line, at.column);
  }

  Token expect_punct(char c) {
    if (!peek().is_punct(c)) fail("expected '" + std::string(1, c) + "', found " + describe(peek()), peek());
    return take();
  }

  struct Parsed {
    Term term;
    int priority;
  };

  Term parse(int max_priority) {
    Parsed left = parse_primary(max_priority);
    return parse_infix(std::move(left), max_priority).term;
  }

 private:
  static bool is_terminator(const Token& t) {
    return t.kind == Tok::end || t.kind == Tok::eof || t.is_punct(')') || t.is_punct(']') ||
           t.is_punct(',') || t.is_punct('|');
  }

  Parsed parse_primary(int max_priority) {
    const auto& ops = OpTable::standard();
    Token t = take();
    switch (t.kind) {
      case Tok::integer:
        if (t.magnitude > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
          fail("integer too large", t);
        }
        return {Term::integer(static_cast<std::int64_t>(t.magnitude)), 0};
      case Tok::var:
        return {Term::variable(t.text), 0};
      case Tok::punct:
        if (t.is_punct('(')) {
          Term inner = parse(1200);
          expect_punct(')');
          return {std::move(inner), 0};
        }
        if (t.is_punct('[')) return {parse_list(), 0};
        fail("unexpected " + describe(t), t);
      case Tok::name:
        break;
      case Tok::end:
      case Tok::eof:
        fail("unexpected " + describe(t), t);
    }

    if (t.minus_digit && peek().kind == Tok::integer) {
      Token n = take();
      constexpr auto limit =
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
      if (n.magnitude > limit) fail("integer too large", n);
      if (n.magnitude == limit) return {Term::integer(std::numeric_limits<std::int64_t>::min()), 0};
      return {Term::integer(-static_cast<std::int64_t>(n.magnitude)), 0};
    }

    if (t.functional) {
      take();  // '('
      std::vector<Term> args;
      args.push_back(parse(999));
      while (peek().is_punct(',')) {
        take();
        args.push_back(parse(999));
      }
      expect_punct(')');
      return {Term::compound(t.text, std::move(args)), 0};
    }

    if (!t.quoted) {
      if (auto op = ops.prefix(t.text)) {
        const Token& next = peek();
        bool as_atom = is_terminator(next);
        if (!as_atom && next.kind == Tok::name && !next.quoted && !next.functional &&
            ops.infix(next.text) && !ops.prefix(next.text)) {
          as_atom = true;
        }
        if (!as_atom) {
          if (op->priority > max_priority) fail("operator priority clash", t);
          Term operand = parse(op->right_max());
          return {Term::compound(t.text, {std::move(operand)}), op->priority};
        }
      }
    }
    return {Term::atom(t.text), 0};
  }

  Term parse_list() {
    if (peek().is_punct(']')) {
      take();
      return Term::nil();
    }
    std::vector<Term> items;
    items.push_back(parse(999));
    while (peek().is_punct(',')) {
      take();
      items.push_back(parse(999));
    }
    Term tail = Term::nil();
    if (peek().is_punct('|')) {
      take();
      tail = parse(999);
    }
    expect_punct(']');
    return Term::list(std::move(items), std::move(tail));
  }

  Parsed parse_infix(Parsed left, int max_priority) {
    const auto& ops = OpTable::standard();
    for (;;) {
      const Token& t = peek();
      std::string name;
      if (t.kind == Tok::name && !t.quoted) {
        name = t.text;
      } else if (t.is_punct(',')) {
        name = ",";
      } else {
        break;
      }
      auto op = ops.infix(name);
      if (!op || op->priority > max_priority || left.priority > op->left_max()) break;
      take();
      Term right = parse(op->right_max());
      left = {Term::compound(name, {std::move(left.term), std::move(right)}), op->priority};
    }
    return left;
  }

  Lexer lexer_;
  std::deque<Token> buffer_;
};

}  // namespace

std::vector<SourceTerm> read_terms(std::string_view text, const std::string& file) {
  std::vector<SourceTerm> out;
  try {
    Parser parser(text);
    while (parser.peek().kind != Tok::eof) {
      const Token& first = parser.peek();
      Span span;
      span.line = first.line;
      span.column = first.column;
      span.begin = first.begin;
      Term term = parser.parse(1200);
      if (parser.peek().kind != Tok::end) {
        parser.fail("operator expected, found " + describe(parser.peek()), parser.peek());
      }
      span.end = parser.take().end;
      out.push_back({std::move(term), span});
    }
  } catch (const SyntaxError& e) {
    if (!file.empty() && e.file().empty()) throw e.with_file(file);
    throw;
  }
  return out;
}

Term parse_term(std::string_view text) {
  Parser parser(text);
  Term term = parser.parse(1200);
  if (parser.peek().kind == Tok::end) parser.take();
  if (parser.peek().kind != Tok::eof) {
    parser.fail("operator expected, found " + describe(parser.peek()), parser.peek());
  }
  return term;
}

}  // namespace exlibris
