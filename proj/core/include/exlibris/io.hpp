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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exlibris/directives.hpp"

namespace exlibris {

namespace fs = std::filesystem;

/// Throws IoError.
std::string read_file(const fs::path& path);
/// Creates parent directories. Throws IoError.
void write_file(const fs::path& path, std::string_view contents);

/// Reads, parses and extracts one source file. Errors carry the path.
FileFacts scan_file(const fs::path& path);

/// `base/rel` with the first extension that names a regular file; `rel`
/// itself is tried first when it already has an extension.
std::optional<fs::path> locate_source(const fs::path& base, std::string_view rel,
                                      std::span<const std::string> extensions);

/// Relative path with '/' separators and the extension removed.
std::string strip_extension(std::string_view rel);

inline const std::vector<std::string>& default_extensions() {
  static const std::vector<std::string> exts{".pl"};
  return exts;
}

}  // namespace exlibris
