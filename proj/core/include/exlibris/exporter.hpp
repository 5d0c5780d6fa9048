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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exlibris/directives.hpp"
#include "exlibris/engine.hpp"
#include "exlibris/error.hpp"
#include "exlibris/index.hpp"
#include "exlibris/resolver.hpp"
#include "exlibris/splice.hpp"

namespace exlibris {

enum class CopyMode { selective, recursive };

struct ExportOptions {
  fs::path dest;
  /// Entry files, or directories whose source files are all entry files.
  std::vector<fs::path> sources;
  CopyMode copy = CopyMode::selective;
  std::vector<fs::path> syslibs;
  std::vector<fs::path> homelibs;
  /// Local library, relative to the project base and to `dest`.
  fs::path loclib = "lib";
  EngineSelection pls = EngineSelection::all();
  /// Refuse to export while any required functor is unresolved.
  bool strict = false;
  std::vector<std::string> extensions = default_extensions();
};

/// Thrown by plan_export in strict mode when functors stay unresolved.
struct StrictModeError : ExportError {
  using ExportError::ExportError;
};

struct FileCopy {
  fs::path from;
  /// Relative to the destination.
  fs::path to;
};

struct FileRewrite {
  fs::path target;
  std::vector<Edit> edits;
};

struct IndexWrite {
  fs::path target;
  LibraryIndex index;
};

struct ExportPlan {
  fs::path dest;
  std::vector<FileCopy> copies;
  std::vector<FileRewrite> rewrites;
  std::vector<IndexWrite> index_writes;
  std::vector<std::string> warnings;
  DepClosure closure;
};

/// Directory that entry paths are made relative to: the common ancestor of
/// the source directories (a file source contributes its parent).
fs::path project_base(const ExportOptions& opts);

/// Libraries for an export: the configured system and home libraries plus
/// the project's own local library when it exists.
LibrarySet load_export_libraries(const ExportOptions& opts,
                                 std::vector<std::string>* warnings = nullptr);

/// Throws ExportError (destination exists, bad options, path collisions),
/// StrictModeError, or the errors of scanning sources.
ExportPlan plan_export(const ExportOptions& opts, const LibrarySet& libs);

/// Edits that turn a development entry file into its exported form.
std::vector<Edit> transform_entry(std::string_view text, const FileFacts& facts,
                                  std::string_view rel_to_loclib, const EngineSelection& pls);

struct ApplyReport {
  std::vector<std::string> completed;
  std::optional<std::string> error;

  bool ok() const { return !error; }
};

/// Performs the plan in order: copies, rewrites, index writes. Stops at the
/// first failure; completed steps stay on disk. An existing destination is
/// refused before anything is written.
ApplyReport apply_plan(const ExportPlan& plan);

/// One line per copy, rewrite, index write, and warning.
std::vector<std::string> describe(const ExportPlan& plan);

}  // namespace exlibris
