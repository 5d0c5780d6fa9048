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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exlibris/directives.hpp"
#include "exlibris/engine.hpp"
#include "exlibris/index.hpp"

namespace exlibris {

enum class LibraryKind { system, local, home };

std::string_view kind_name(LibraryKind kind);

struct Library {
  LibraryKind kind;
  fs::path root;
  LibraryIndex index;
};

/// The libraries a resolution consults. Lookup order is the local library,
/// then system libraries, then home libraries, each group in list order.
struct LibrarySet {
  std::vector<Library> syslibs;
  std::vector<Library> homelibs;
  std::optional<Library> loclib;
  std::vector<std::string> extensions = default_extensions();

  /// Loads (or builds) an index for every root. Throws Error when a root is
  /// listed in more than one group, IoError for missing roots.
  static LibrarySet load(const std::vector<fs::path>& syslibs,
                         const std::vector<fs::path>& homelibs,
                         const std::optional<fs::path>& loclib,
                         std::vector<std::string>* warnings = nullptr,
                         const MkindexOptions& options = {});

  std::vector<const Library*> search_order() const;
};

struct ResolvedTarget {
  enum class Kind { built_in, load_file, unresolved };

  Kind kind = Kind::unresolved;
  LibraryKind library = LibraryKind::system;
  fs::path root;
  /// Library-relative file without extension; for built-ins, the declaring file.
  std::string file;
  /// Position of the selecting entry in its library index.
  std::size_t entry = 0;

  static ResolvedTarget unresolved() { return {}; }
  bool is_unresolved() const { return kind == Kind::unresolved; }
  std::string str() const;

  bool operator==(const ResolvedTarget&) const = default;
  std::strong_ordering operator<=>(const ResolvedTarget& other) const;
};

/// First index entry for `f` whose condition matches `engine`, searching the
/// libraries in order. A matching load entry whose file is missing on disk
/// resolves to unresolved.
ResolvedTarget resolve_functor(const FunctorRef& f, const PlId& engine, const LibrarySet& libs);

/// Every entry that some engine of `engines` could select for `f`. For an
/// explicit list this is resolve_functor per engine; for all engines it is
/// each satisfiable entry in search order up to the first unconditional one.
std::vector<ResolvedTarget> candidates(const FunctorRef& f, const EngineSelection& engines,
                                       const LibrarySet& libs);

struct ResolutionKey {
  FunctorRef functor;
  /// Nullopt when resolving for all engines.
  std::optional<PlId> engine;

  auto operator<=>(const ResolutionKey&) const = default;
};

struct UnresolvedFunctor {
  std::string file;
  FunctorRef functor;
  std::optional<PlId> engine;

  auto operator<=>(const UnresolvedFunctor&) const = default;
};

struct DanglingRef {
  std::string file;
  FileRef ref;

  auto operator<=>(const DanglingRef&) const = default;
};

struct DepEdge {
  std::string from;
  std::string to;
  std::string label;

  auto operator<=>(const DepEdge&) const = default;
};

struct DepClosure {
  std::map<ResolutionKey, std::vector<ResolvedTarget>> resolutions;
  /// (home root, relative file without extension).
  std::set<std::pair<std::string, std::string>> home_files;
  /// Files of the local library, relative, without extension.
  std::set<std::string> local_files;
  /// Non-library files reached by relative paths (entry files excluded).
  std::set<fs::path> project_files;
  std::set<UnresolvedFunctor> unresolved;
  std::set<DanglingRef> dangling;
  /// Index entries selected by some resolution: (library root, entry position).
  std::set<std::pair<std::string, std::size_t>> selected_entries;
  /// Node ids of every file reached, e.g. "entry:file1", "home:list/flatten".
  std::set<std::string> nodes;
  std::set<DepEdge> edges;
};

/// Transitive closure from `entries` under `engines`. Entry, home, local and
/// project files are scanned; system files are recorded but not entered.
/// Throws on unreadable or unparsable files.
DepClosure closure(const std::vector<fs::path>& entries, const LibrarySet& libs,
                   const EngineSelection& engines);

/// Depth-first load report for one entry and engine, one decision per line.
std::vector<std::string> trace(const fs::path& entry, const PlId& engine, const LibrarySet& libs);

/// Graphviz rendering of the closure's dependency graph.
std::string format_dot(const DepClosure& closure);

}  // namespace exlibris
