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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "exlibris/directives.hpp"
#include "exlibris/engine.hpp"
#include "exlibris/io.hpp"

namespace exlibris {

inline constexpr std::string_view kIndexFileName = "Index.pl";
inline constexpr std::string_view kIndexHeader = "% generated by exlibris mkindex\n";
inline constexpr std::string_view kBuiltInModule = "built_in";

/// One index/5 fact: `functor` is defined in `file` (relative to the library
/// root, no extension) as part of `module`, for engines matching `cond`.
struct IndexEntry {
  FunctorRef functor;
  IfPls cond;
  std::string module;
  std::string file;

  bool is_built_in() const { return module == kBuiltInModule; }
  bool operator==(const IndexEntry&) const = default;
};

struct LibraryIndex {
  fs::path root;
  std::vector<IndexEntry> entries;
};

struct MkindexOptions {
  bool follow_subdirs = true;
  /// Index clause heads of files with neither a module nor defines.
  bool clause_fallback = false;
  std::vector<std::string> extensions = default_extensions();
};

/// Scans the source files under `root`. Per file, entries come from its
/// module declaration, else its defines directives, else (when enabled) its
/// clause heads. Entries are ordered by name, arity, then discovery order.
LibraryIndex mkindex(const fs::path& root, const MkindexOptions& options = {});

Term index_fact(const IndexEntry& entry);
/// Index.pl contents: the header line then one rendered fact per line.
std::string format_index(const LibraryIndex& index);
/// Writes root/Index.pl. Throws IoError.
void write_index(const LibraryIndex& index);

/// Parses index/5 facts. Other clauses are skipped; non-index facts add a
/// message to `warnings` when given. `root` becomes the index root.
LibraryIndex parse_index_text(std::string_view text, const fs::path& root,
                              const std::string& file = {},
                              std::vector<std::string>* warnings = nullptr);
LibraryIndex parse_index(const fs::path& path, std::vector<std::string>* warnings = nullptr);

/// root/Index.pl when present, otherwise an in-memory mkindex.
LibraryIndex load_index(const fs::path& root, const MkindexOptions& options = {},
                        std::vector<std::string>* warnings = nullptr);

/// Entries whose file does not resolve to a source file under the root.
std::vector<IndexEntry> dangling_entries(const LibraryIndex& index,
                                         std::span<const std::string> extensions =
                                             default_extensions());

}  // namespace exlibris
