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

#include "exlibris/directives.hpp"

#include <algorithm>
#include <set>

#include "exlibris/error.hpp"
#include "exlibris/io.hpp"
#include "exlibris/writer.hpp"

namespace exlibris {
namespace {

const Term& strip_module(const Term& t) {
  const Term* cur = &t;
  while (cur->is_compound(":", 2)) cur = &cur->arg(1);
  return *cur;
}

// a/b/c as a slash-separated path.
std::optional<std::string> path_text(const Term& t) {
  if (t.is_atom()) return t.name();
  if (t.is_compound("/", 2)) {
    auto left = path_text(t.arg(0));
    auto right = path_text(t.arg(1));
    if (left && right) return *left + "/" + *right;
  }
  return std::nullopt;
}

std::vector<Term> one_or_many(const Term& t) {
  if (t.is_cons()) {
    if (auto items = t.list_items()) return *items;
  }
  if (t.is_nil()) return {};
  return {t};
}

void conjuncts(const Term& t, std::vector<const Term*>& out) {
  if (t.is_compound(",", 2)) {
    conjuncts(t.arg(0), out);
    conjuncts(t.arg(1), out);
  } else {
    out.push_back(&t);
  }
}

void walk_goal(const Term& goal, const IfPls& guard, std::vector<GuardedCall>& out) {
  const Term& g = strip_module(goal);
  if (g.is_compound(",", 2) || g.is_compound(";", 2) || g.is_compound("->", 2) ||
      g.is_compound("*->", 2)) {
    walk_goal(g.arg(0), guard, out);
    walk_goal(g.arg(1), guard, out);
    return;
  }
  if (g.is_compound("if_pl", 2) || g.is_compound("if_pl", 3)) {
    IfPls cond = parse_if_pls(g.arg(0));
    walk_goal(g.arg(1), IfPls::conjunction({guard, cond}), out);
    if (g.arity() == 3) {
      walk_goal(g.arg(2), IfPls::conjunction({guard, IfPls::negation(cond)}), out);
    }
    return;
  }
  if (recognize_loading_call(g)) out.push_back({guard, g});
}

// Nullopt when the goal is not a library_directory/1 definition.
std::optional<std::string> library_directory_goal(const Term& goal) {
  const Term* g = &strip_module(goal);
  if (g->is_compound("assert", 1) || g->is_compound("asserta", 1) ||
      g->is_compound("assertz", 1)) {
    g = &strip_module(g->arg(0));
  }
  if (!g->is_compound("library_directory", 1)) return std::nullopt;
  if (auto p = path_text(g->arg(0))) return *p;
  return render_term(g->arg(0));
}

class Extractor {
 public:
  Extractor(const std::string& file, FileFacts& facts) : file_(file), facts_(facts) {}

  void clause(const SourceTerm& st) {
    const Term& t = st.term;
    if (t.is_compound(":-", 1)) {
      directive(t.arg(0), st.span);
      return;
    }
    const Term* head = &t;
    std::int64_t extra = 0;
    if (t.is_compound(":-", 2)) {
      head = &t.arg(0);
    } else if (t.is_compound("-->", 2)) {
      head = &t.arg(0);
      if (head->is_compound(",", 2)) head = &head->arg(0);
      extra = 2;
    }
    const Term& h = strip_module(*head);
    if (h.is_compound("library_directory", 1)) {
      auto p = path_text(h.arg(0));
      facts_.library_dirs.push_back({p ? *p : render_term(h.arg(0)), st.span, std::nullopt});
      return;
    }
    if (!h.is_callable()) return;
    FunctorRef f{h.name(), static_cast<std::int64_t>(h.arity()) + extra};
    if (seen_heads_.insert(f).second) facts_.clause_heads.push_back(f);
  }

 private:
  [[noreturn]] void malformed(const Span& span, const std::string& what) {
    std::string where = file_.empty() ? std::string() : file_ + ":";
    throw MalformedDirective(where + std::to_string(span.line) + ": " + what);
  }

  std::vector<FunctorRef> functors(const Term& arg, const Span& span, const char* directive) {
    std::vector<FunctorRef> out;
    for (const Term& item : one_or_many(arg)) {
      auto f = FunctorRef::from_term(item);
      if (!f) {
        malformed(span, std::string(directive) + " expects Name/Arity terms, got " +
                            render_term(item));
      }
      out.push_back(*f);
    }
    return out;
  }

  IfPls condition(const Term& arg, const Span& span) {
    try {
      return parse_if_pls(arg);
    } catch (const MalformedCondition& e) {
      malformed(span, e.what());
    }
  }

  void directive(const Term& body, const Span& span) {
    std::vector<const Term*> goals;
    conjuncts(body, goals);

    std::vector<std::string> lib_dirs;
    std::vector<Term> rest;
    for (const Term* goal : goals) {
      if (auto p = library_directory_goal(*goal)) {
        lib_dirs.push_back(*p);
      } else {
        rest.push_back(*goal);
      }
      declaration(strip_module(*goal), span);
    }
    if (!lib_dirs.empty()) {
      std::optional<Term> remainder;
      for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
        remainder = remainder ? Term::compound(",", {*it, *remainder}) : *it;
      }
      for (auto& p : lib_dirs) facts_.library_dirs.push_back({p, span, remainder});
    }

    const Term& whole = strip_module(body);
    if (whole.is_compound("if_pl", 2) || whole.is_compound("if_pl", 3)) {
      IfPlDirective d{condition(whole.arg(0), span), whole.arg(1), std::nullopt, span};
      if (whole.arity() == 3) d.else_call = whole.arg(2);
      facts_.conditionals.push_back(std::move(d));
    }

    std::vector<GuardedCall> calls;
    try {
      walk_goal(body, IfPls::always(), calls);
    } catch (const MalformedCondition& e) {
      malformed(span, e.what());
    }
    for (auto& call : calls) {
      auto lc = recognize_loading_call(call.call);
      for (auto& f : lc->files) facts_.loads.push_back({call.guard, f, lc->predicate, span});
    }
  }

  void declaration(const Term& g, const Span& span) {
    if (g.is_compound("requires", 1)) {
      for (auto& f : functors(g.arg(0), span, "requires/1")) facts_.required.push_back({f, span});
    } else if (g.is_compound("defines", 1)) {
      facts_.defines.push_back({IfPls::always(true), functors(g.arg(0), span, "defines/1"), span});
    } else if (g.is_compound("defines", 2)) {
      facts_.defines.push_back(
          {condition(g.arg(0), span), functors(g.arg(1), span, "defines/2"), span});
    } else if (g.is_compound("may_load", 1)) {
      for (const Term& item : one_or_many(g.arg(0))) {
        auto ref = FileRef::from_term(item);
        if (!ref) malformed(span, "may_load/1 expects file names, got " + render_term(item));
        facts_.may_load.push_back({*ref, span});
      }
    } else if (g.is_compound("module", 2) && g.arg(0).is_atom() && !facts_.module_decl) {
      ModuleDecl m{g.arg(0).name(), {}, span};
      for (const Term& item : one_or_many(g.arg(1))) {
        if (auto f = FunctorRef::from_term(item)) m.exports.push_back(*f);
      }
      facts_.module_decl = std::move(m);
    } else if (g.is_compound("defines_module", 1) && g.arg(0).is_atom()) {
      facts_.defines_module = g.arg(0).name();
    }
  }

  const std::string& file_;
  FileFacts& facts_;
  std::set<FunctorRef> seen_heads_;
};

}  // namespace

std::optional<FunctorRef> FunctorRef::from_term(const Term& term) {
  bool dcg = term.is_compound("//", 2);
  if (!term.is_compound("/", 2) && !dcg) return std::nullopt;
  const Term& name = term.arg(0);
  const Term& arity = term.arg(1);
  if (!name.is_atom() || !arity.is_integer() || arity.value() < 0) return std::nullopt;
  return FunctorRef{name.name(), arity.value() + (dcg ? 2 : 0)};
}

Term FunctorRef::to_term() const {
  return Term::compound("/", {Term::atom(name), Term::integer(arity)});
}

std::string FunctorRef::str() const { return render_term(to_term()); }

std::optional<FileRef> FileRef::from_term(const Term& term) {
  if (term.is_compound("library", 1)) {
    auto p = path_text(term.arg(0));
    if (!p) return std::nullopt;
    return FileRef{Kind::library, strip_extension(*p)};
  }
  if (term.is_nil()) return std::nullopt;
  if (auto p = path_text(term)) return FileRef{Kind::relative, strip_extension(*p)};
  return std::nullopt;
}

std::string FileRef::str() const {
  return kind == Kind::library ? "library(" + path + ")" : path;
}

FileFacts extract(std::span<const SourceTerm> terms, const std::string& file) {
  FileFacts facts;
  Extractor ex(file, facts);
  for (const SourceTerm& st : terms) ex.clause(st);
  return facts;
}

std::vector<GuardedCall> deconstruct_if_pl(const Term& directive) {
  const Term& body = directive.is_compound(":-", 1) ? directive.arg(0) : directive;
  std::vector<GuardedCall> out;
  walk_goal(body, IfPls::always(), out);
  return out;
}

std::optional<LoadingCall> recognize_loading_call(const Term& goal) {
  const Term& g = strip_module(goal);
  const Term* files_arg = nullptr;
  std::string predicate;
  if (g.is_cons()) {
    files_arg = &g;
    predicate = "[]";
  } else if (g.is_compound("consult", 1) || g.is_compound("ensure_loaded", 1) ||
             g.is_compound("compile", 1) || g.is_compound("use_module", 1) ||
             g.is_compound("use_module", 2) || g.is_compound("load_files", 1) ||
             g.is_compound("load_files", 2)) {
    files_arg = &g.arg(0);
    predicate = g.name();
  } else {
    return std::nullopt;
  }
  LoadingCall call{{}, predicate};
  for (const Term& item : one_or_many(*files_arg)) {
    if (auto ref = FileRef::from_term(item)) call.files.push_back(*ref);
  }
  if (call.files.empty()) return std::nullopt;
  return call;
}

}  // namespace exlibris
