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
#include <vector>

#include "exlibris/engine.hpp"
#include "exlibris/term.hpp"

namespace exlibris {

/// Name/Arity.
struct FunctorRef {
  std::string name;
  std::int64_t arity = 0;

  /// Decodes Name/Arity (or Name//Arity, counted as Arity+2).
  static std::optional<FunctorRef> from_term(const Term& term);
  Term to_term() const;
  std::string str() const;

  auto operator<=>(const FunctorRef&) const = default;
};

/// A file named by a loading call or may_load: library(Path) or a path
/// relative to the referring file. `path` never carries the .pl extension.
struct FileRef {
  enum class Kind { library, relative };
  Kind kind = Kind::relative;
  std::string path;

  static std::optional<FileRef> from_term(const Term& term);
  std::string str() const;

  auto operator<=>(const FileRef&) const = default;
};

struct RequiredFunctor {
  FunctorRef functor;
  Span span;
};

struct DefinesDecl {
  IfPls cond;
  std::vector<FunctorRef> functors;
  Span span;
};

struct MayLoadDecl {
  FileRef file;
  Span span;
};

/// A file loaded by a directive. `span` is the enclosing directive.
struct LoadDecl {
  IfPls guard;
  FileRef file;
  std::string predicate;
  Span span;
};

struct ModuleDecl {
  std::string name;
  std::vector<FunctorRef> exports;
  Span span;
};

/// A library_directory/1 definition: directive, clause, or assert in a
/// directive. `remainder` is the rest of a conjunctive directive, if any.
struct LibraryDirDecl {
  std::string path;
  Span span;
  std::optional<Term> remainder;
};

/// A directive whose whole body is if_pl/2 or if_pl/3.
struct IfPlDirective {
  IfPls cond;
  Term then_call;
  std::optional<Term> else_call;
  Span span;
};

struct FileFacts {
  std::vector<RequiredFunctor> required;
  std::vector<DefinesDecl> defines;
  std::vector<MayLoadDecl> may_load;
  std::vector<LoadDecl> loads;
  std::optional<ModuleDecl> module_decl;
  std::vector<LibraryDirDecl> library_dirs;
  std::vector<FunctorRef> clause_heads;
  /// From `:- defines_module(M).`; overrides the `user` module of defines entries.
  std::optional<std::string> defines_module;
  std::vector<IfPlDirective> conditionals;
};

/// Throws MalformedDirective (prefixed "file:line:") for requires, defines
/// or may_load arguments it cannot decode.
FileFacts extract(std::span<const SourceTerm> terms, const std::string& file = {});

struct GuardedCall {
  IfPls guard;
  Term call;

  bool operator==(const GuardedCall&) const = default;
};

/// Loading calls inside an if_pl/2,3 goal (with or without the leading
/// `:-`), each with the conjunction of the conditions guarding it. Walks
/// `,` `;` `->` and nested if_pl; other goals are skipped.
std::vector<GuardedCall> deconstruct_if_pl(const Term& directive);

struct LoadingCall {
  std::vector<FileRef> files;
  std::string predicate;

  bool operator==(const LoadingCall&) const = default;
};

/// consult/1, ensure_loaded/1, compile/1, use_module/1,2, load_files/1,2 and
/// the list goal [F1, F2]. Module qualification is stripped.
std::optional<LoadingCall> recognize_loading_call(const Term& goal);

}  // namespace exlibris
