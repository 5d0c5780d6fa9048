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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exlibris/term.hpp"

namespace exlibris {

using Version = std::vector<std::int64_t>;

/// Lexicographic; a strict prefix orders before its extensions.
std::strong_ordering compare_versions(std::span<const std::int64_t> a,
                                      std::span<const std::int64_t> b);

/// A concrete engine identity such as swi(5:0:7).
struct PlId {
  std::string name;
  Version version;

  /// From a pl-term, e.g. sicstus(3:9:0). Throws MalformedCondition.
  static PlId from_term(const Term& term);
  /// From the command-line form "name:v1.v2.v3". Throws MalformedCondition.
  static PlId parse(std::string_view text);

  Term to_term() const;
  std::string str() const;

  bool operator==(const PlId&) const = default;
  std::strong_ordering operator<=>(const PlId& other) const;
};

enum class CompareOp { eq, ne, lt, le, gt, ge };

std::string_view op_text(CompareOp op);
std::optional<CompareOp> parse_compare_op(std::string_view text);

/// "engine-version OP version".
struct VersionConstraint {
  Version version;
  CompareOp op;

  bool operator==(const VersionConstraint&) const = default;
};

/// Engine condition. Surface forms:
///   all | any                      always true
///   swi(_), sicstus(3:_:_)         engine pattern; `_` is a wildcard component
///   not(C)                         negation
///   (Name, [(Version, Op), ...])   engine with conjunctive version constraints
///   [C1, C2, ...]                  disjunction
///   (C1, C2)                       conjunction, produced for nested if_pl guards
class IfPls {
 public:
  enum class Kind { always, pattern, negation, constrained, disjunction, conjunction };

  static IfPls always(bool spelled_all = false);
  static IfPls pattern(std::string engine, std::vector<std::optional<std::int64_t>> components);
  static IfPls negation(IfPls inner);
  static IfPls constrained(std::string engine, std::vector<VersionConstraint> constraints);
  /// Throws MalformedCondition when empty.
  static IfPls disjunction(std::vector<IfPls> alternatives);
  /// Conjunction of guards; Always operands are dropped and nesting flattened.
  static IfPls conjunction(std::vector<IfPls> operands);

  Kind kind() const { return kind_; }
  bool is_always() const { return kind_ == Kind::always; }
  /// True when the surface atom was `all` rather than `any`.
  bool spelled_all() const { return spelled_all_; }
  const std::string& engine() const { return engine_; }
  std::span<const std::optional<std::int64_t>> components() const { return components_; }
  std::span<const VersionConstraint> constraints() const { return constraints_; }
  std::span<const IfPls> children() const { return children_; }

  bool operator==(const IfPls&) const = default;

 private:
  IfPls() = default;

  Kind kind_ = Kind::always;
  bool spelled_all_ = false;
  std::string engine_;
  std::vector<std::optional<std::int64_t>> components_;
  std::vector<VersionConstraint> constraints_;
  std::vector<IfPls> children_;
};

/// Throws MalformedCondition naming the rendered term.
IfPls parse_if_pls(const Term& term);
Term to_term(const IfPls& cond);
std::string render(const IfPls& cond);

bool matches(const IfPls& cond, const PlId& engine);

/// Whether some engine could match. Over-approximates: false only when the
/// condition is unsatisfiable by construction (e.g. not(any)).
bool satisfiable(const IfPls& cond);
/// Whether every engine matches. Under-approximates, dual to satisfiable().
bool always_matches(const IfPls& cond);

/// The engines an operation targets: an explicit list, or every engine.
class EngineSelection {
 public:
  static EngineSelection all() { return EngineSelection(true, {}); }
  static EngineSelection of(std::vector<PlId> engines) {
    return EngineSelection(false, std::move(engines));
  }

  bool is_all() const { return all_; }
  std::span<const PlId> engines() const { return engines_; }

  /// Whether the condition holds for at least one selected engine.
  bool any_match(const IfPls& cond) const;

 private:
  EngineSelection(bool all, std::vector<PlId> engines)
      : all_(all), engines_(std::move(engines)) {}

  bool all_;
  std::vector<PlId> engines_;
};

}  // namespace exlibris
