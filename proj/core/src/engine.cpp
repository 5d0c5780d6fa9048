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

#include "exlibris/engine.hpp"

#include <algorithm>
#include <charconv>

#include "exlibris/error.hpp"
#include "exlibris/reader.hpp"
#include "exlibris/writer.hpp"

namespace exlibris {
namespace {

[[noreturn]] void malformed(const std::string& what, const Term& term) {
  throw MalformedCondition(what + ": " + render_term(term));
}

bool valid_engine_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

// Decodes a `:`-chain such as 3:_:0. Wildcards only when allowed.
std::vector<std::optional<std::int64_t>> decode_chain(const Term& term, bool allow_wildcards) {
  std::vector<std::optional<std::int64_t>> out;
  const Term* cur = &term;
  for (;;) {
    const Term& head = cur->is_compound(":", 2) ? cur->arg(0) : *cur;
    if (head.is_integer()) {
      if (head.value() < 0) malformed("negative version component", term);
      out.emplace_back(head.value());
    } else if (head.is_anonymous()) {
      if (!allow_wildcards) malformed("wildcard not allowed in version", term);
      out.emplace_back(std::nullopt);
    } else if (head.is_variable()) {
      malformed("named variable in engine condition", term);
    } else {
      malformed("bad version", term);
    }
    if (!cur->is_compound(":", 2)) break;
    cur = &cur->arg(1);
  }
  return out;
}

Version decode_version(const Term& term) {
  Version v;
  for (const auto& c : decode_chain(term, false)) v.push_back(*c);
  return v;
}

Term encode_chain(std::span<const std::optional<std::int64_t>> components) {
  auto leaf = [](const std::optional<std::int64_t>& c) {
    return c ? Term::integer(*c) : Term::variable("_");
  };
  Term out = leaf(components.back());
  for (std::size_t i = components.size() - 1; i-- > 0;) {
    out = Term::compound(":", {leaf(components[i]), std::move(out)});
  }
  return out;
}

Term encode_version(const Version& v) {
  std::vector<std::optional<std::int64_t>> c(v.begin(), v.end());
  return encode_chain(c);
}

bool holds(std::strong_ordering cmp, CompareOp op) {
  switch (op) {
    case CompareOp::eq: return cmp == 0;
    case CompareOp::ne: return cmp != 0;
    case CompareOp::lt: return cmp < 0;
    case CompareOp::le: return cmp <= 0;
    case CompareOp::gt: return cmp > 0;
    case CompareOp::ge: return cmp >= 0;
  }
  return false;
}

}  // namespace

std::strong_ordering compare_versions(std::span<const std::int64_t> a,
                                      std::span<const std::int64_t> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

PlId PlId::from_term(const Term& term) {
  if (!term.is_compound() || term.arity() != 1 || !valid_engine_name(term.name())) {
    malformed("expected an engine term such as swi(5:0:7)", term);
  }
  return PlId{term.name(), decode_version(term.arg(0))};
}

PlId PlId::parse(std::string_view text) {
  if (text.find('(') != std::string_view::npos) return from_term(parse_term(text));
  auto bad = [&] {
    throw MalformedCondition("bad engine '" + std::string(text) + "', expected name:v1.v2.v3");
  };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) bad();
  PlId id;
  id.name = std::string(text.substr(0, colon));
  if (!valid_engine_name(id.name)) bad();
  std::string_view rest = text.substr(colon + 1);
  for (;;) {
    auto dot = rest.find('.');
    std::string_view part = rest.substr(0, dot);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || v < 0) bad();
    id.version.push_back(v);
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  return id;
}

Term PlId::to_term() const { return Term::compound(name, {encode_version(version)}); }

std::string PlId::str() const { return render_term(to_term()); }

std::strong_ordering PlId::operator<=>(const PlId& other) const {
  if (auto c = name <=> other.name; c != 0) return c;
  return compare_versions(version, other.version);
}

std::string_view op_text(CompareOp op) {
  switch (op) {
    case CompareOp::eq: return "=";
    case CompareOp::ne: return "\\=";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "=<";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
  }
  return "?";
}

std::optional<CompareOp> parse_compare_op(std::string_view text) {
  for (CompareOp op : {CompareOp::eq, CompareOp::ne, CompareOp::lt, CompareOp::le,
                       CompareOp::gt, CompareOp::ge}) {
    if (op_text(op) == text) return op;
  }
  return std::nullopt;
}

IfPls IfPls::always(bool spelled_all) {
  IfPls c;
  c.spelled_all_ = spelled_all;
  return c;
}

IfPls IfPls::pattern(std::string engine, std::vector<std::optional<std::int64_t>> components) {
  IfPls c;
  c.kind_ = Kind::pattern;
  c.engine_ = std::move(engine);
  c.components_ = std::move(components);
  return c;
}

IfPls IfPls::negation(IfPls inner) {
  IfPls c;
  c.kind_ = Kind::negation;
  c.children_.push_back(std::move(inner));
  return c;
}

IfPls IfPls::constrained(std::string engine, std::vector<VersionConstraint> constraints) {
  IfPls c;
  c.kind_ = Kind::constrained;
  c.engine_ = std::move(engine);
  c.constraints_ = std::move(constraints);
  return c;
}

IfPls IfPls::disjunction(std::vector<IfPls> alternatives) {
  if (alternatives.empty()) throw MalformedCondition("empty engine condition list");
  IfPls c;
  c.kind_ = Kind::disjunction;
  c.children_ = std::move(alternatives);
  return c;
}

IfPls IfPls::conjunction(std::vector<IfPls> operands) {
  std::vector<IfPls> flat;
  for (auto& op : operands) {
    if (op.is_always()) continue;
    if (op.kind_ == Kind::conjunction) {
      for (auto& child : op.children_) flat.push_back(std::move(child));
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.empty()) return always();
  if (flat.size() == 1) return std::move(flat.front());
  IfPls c;
  c.kind_ = Kind::conjunction;
  c.children_ = std::move(flat);
  return c;
}

IfPls parse_if_pls(const Term& term) {
  if (term.is_atom("all") || term.is_atom("any")) return IfPls::always(term.is_atom("all"));
  if (term.is_nil()) malformed("empty engine condition list", term);
  if (term.is_cons()) {
    auto items = term.list_items();
    if (!items) malformed("partial list in engine condition", term);
    std::vector<IfPls> alternatives;
    for (const Term& item : *items) alternatives.push_back(parse_if_pls(item));
    return IfPls::disjunction(std::move(alternatives));
  }
  if (term.is_compound("not", 1)) return IfPls::negation(parse_if_pls(term.arg(0)));
  if (term.is_compound(",", 2)) {
    const Term& first = term.arg(0);
    const Term& second = term.arg(1);
    if (first.is_atom() && (second.is_nil() || second.is_cons())) {
      if (!valid_engine_name(first.name())) malformed("bad engine name", term);
      auto items = second.list_items();
      if (!items) malformed("partial list in version constraints", term);
      std::vector<VersionConstraint> constraints;
      for (const Term& pair : *items) {
        if (!pair.is_compound(",", 2) || !pair.arg(1).is_atom()) {
          malformed("expected (Version, Operator)", pair);
        }
        auto op = parse_compare_op(pair.arg(1).name());
        if (!op) malformed("unknown version comparison", pair);
        constraints.push_back({decode_version(pair.arg(0)), *op});
      }
      return IfPls::constrained(first.name(), std::move(constraints));
    }
    return IfPls::conjunction({parse_if_pls(first), parse_if_pls(second)});
  }
  if (term.is_variable()) {
    malformed(term.is_anonymous() ? "unbound engine condition" : "named variable in engine condition",
              term);
  }
  if (term.is_compound() && term.arity() == 1 && valid_engine_name(term.name())) {
    try {
      return IfPls::pattern(term.name(), decode_chain(term.arg(0), true));
    } catch (const MalformedCondition& e) {
      throw MalformedCondition(std::string(e.what()) + " in " + render_term(term));
    }
  }
  malformed("not an engine condition", term);
}

Term to_term(const IfPls& cond) {
  switch (cond.kind()) {
    case IfPls::Kind::always:
      return Term::atom(cond.spelled_all() ? "all" : "any");
    case IfPls::Kind::pattern:
      return Term::compound(cond.engine(), {encode_chain(cond.components())});
    case IfPls::Kind::negation:
      return Term::compound("not", {to_term(cond.children()[0])});
    case IfPls::Kind::constrained: {
      std::vector<Term> pairs;
      for (const auto& c : cond.constraints()) {
        pairs.push_back(Term::compound(
            ",", {encode_version(c.version), Term::atom(std::string(op_text(c.op)))}));
      }
      return Term::compound(",", {Term::atom(cond.engine()), Term::list(std::move(pairs))});
    }
    case IfPls::Kind::disjunction: {
      std::vector<Term> items;
      for (const auto& c : cond.children()) items.push_back(to_term(c));
      return Term::list(std::move(items));
    }
    case IfPls::Kind::conjunction: {
      auto children = cond.children();
      Term out = to_term(children.back());
      for (std::size_t i = children.size() - 1; i-- > 0;) {
        out = Term::compound(",", {to_term(children[i]), std::move(out)});
      }
      return out;
    }
  }
  return Term::atom("any");
}

std::string render(const IfPls& cond) { return render_term(to_term(cond)); }

bool matches(const IfPls& cond, const PlId& engine) {
  switch (cond.kind()) {
    case IfPls::Kind::always:
      return true;
    case IfPls::Kind::pattern: {
      if (cond.engine() != engine.name) return false;
      auto comps = cond.components();
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!comps[i]) continue;
        if (i >= engine.version.size() || engine.version[i] != *comps[i]) return false;
      }
      return true;
    }
    case IfPls::Kind::negation:
      return !matches(cond.children()[0], engine);
    case IfPls::Kind::constrained:
      if (cond.engine() != engine.name) return false;
      return std::all_of(cond.constraints().begin(), cond.constraints().end(),
                         [&](const VersionConstraint& c) {
                           return holds(compare_versions(engine.version, c.version), c.op);
                         });
    case IfPls::Kind::disjunction:
      return std::any_of(cond.children().begin(), cond.children().end(),
                         [&](const IfPls& c) { return matches(c, engine); });
    case IfPls::Kind::conjunction:
      return std::all_of(cond.children().begin(), cond.children().end(),
                         [&](const IfPls& c) { return matches(c, engine); });
  }
  return false;
}

bool always_matches(const IfPls& c) {
  switch (c.kind()) {
    case IfPls::Kind::always:
      return true;
    case IfPls::Kind::negation:
      return !satisfiable(c.children()[0]);
    case IfPls::Kind::disjunction:
      return std::any_of(c.children().begin(), c.children().end(), always_matches);
    case IfPls::Kind::conjunction:
      return std::all_of(c.children().begin(), c.children().end(), always_matches);
    default:
      return false;
  }
}

bool satisfiable(const IfPls& cond) {
  switch (cond.kind()) {
    case IfPls::Kind::negation:
      return !always_matches(cond.children()[0]);
    case IfPls::Kind::disjunction:
      return std::any_of(cond.children().begin(), cond.children().end(), satisfiable);
    case IfPls::Kind::conjunction:
      return std::all_of(cond.children().begin(), cond.children().end(), satisfiable);
    default:
      return true;
  }
}

bool EngineSelection::any_match(const IfPls& cond) const {
  if (all_) return satisfiable(cond);
  return std::any_of(engines_.begin(), engines_.end(),
                     [&](const PlId& e) { return matches(cond, e); });
}

}  // namespace exlibris
