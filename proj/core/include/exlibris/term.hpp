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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exlibris {

/// A read Prolog term. Variables are placeholders without bindings; list
/// syntax is stored as nested '.'/2 compounds ending in the atom [].
class Term {
 public:
  enum class Kind : std::uint8_t { atom, integer, variable, compound };

  static Term atom(std::string text);
  static Term integer(std::int64_t value);
  static Term variable(std::string name);
  /// Throws std::invalid_argument on an empty argument list.
  static Term compound(std::string functor, std::vector<Term> args);
  static Term list(std::vector<Term> items);
  static Term list(std::vector<Term> items, Term tail);
  static Term nil() { return atom("[]"); }

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::atom; }
  bool is_atom(std::string_view text) const { return is_atom() && name_ == text; }
  bool is_integer() const { return kind_ == Kind::integer; }
  bool is_variable() const { return kind_ == Kind::variable; }
  bool is_anonymous() const { return is_variable() && name_ == "_"; }
  bool is_compound() const { return kind_ == Kind::compound; }
  bool is_compound(std::string_view functor, std::size_t arity) const {
    return is_compound() && name_ == functor && args_.size() == arity;
  }
  bool is_nil() const { return is_atom("[]"); }
  bool is_cons() const { return is_compound(".", 2); }
  bool is_callable() const { return is_atom() || is_compound(); }

  /// Atom text, variable name or compound functor name.
  const std::string& name() const { return name_; }
  std::int64_t value() const { return value_; }
  std::size_t arity() const { return args_.size(); }
  std::span<const Term> args() const { return args_; }
  const Term& arg(std::size_t i) const { return args_.at(i); }

  /// Elements of a proper list, or nullopt for partial/non lists.
  std::optional<std::vector<Term>> list_items() const;

  bool operator==(const Term& other) const = default;

 private:
  Term(Kind kind, std::string name, std::int64_t value, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), value_(value), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::int64_t value_;
  std::vector<Term> args_;
};

/// Location of a term in its source text. `begin`/`end` are byte offsets;
/// `end` is one past the terminating period.
struct Span {
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct SourceTerm {
  Term term;
  Span span;
};

}  // namespace exlibris
