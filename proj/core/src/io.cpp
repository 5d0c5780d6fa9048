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

#include "exlibris/io.hpp"

#include <fstream>
#include <sstream>

#include "exlibris/error.hpp"
#include "exlibris/reader.hpp"

namespace exlibris {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed", path.string());
  return ss.str();
}

void write_file(const fs::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(ec.message(), path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("write failed", path.string());
}

FileFacts scan_file(const fs::path& path) {
  std::string text = read_file(path);
  auto terms = read_terms(text, path.string());
  return extract(terms, path.string());
}

std::optional<fs::path> locate_source(const fs::path& base, std::string_view rel,
                                      std::span<const std::string> extensions) {
  fs::path stem = base / fs::path(std::string(rel));
  std::error_code ec;
  if (stem.has_extension() && fs::is_regular_file(stem, ec)) return stem;
  for (const auto& ext : extensions) {
    fs::path candidate = stem;
    candidate += ext;
    if (fs::is_regular_file(candidate, ec)) return candidate;
  }
  if (fs::is_regular_file(stem, ec)) return stem;
  return std::nullopt;
}

std::string strip_extension(std::string_view rel) {
  std::string out(rel);
  for (char& c : out) {
    if (c == '\\') c = '/';
  }
  for (const auto& ext : default_extensions()) {
    if (out.size() > ext.size() && out.ends_with(ext)) {
      out.resize(out.size() - ext.size());
      break;
    }
  }
  return out;
}

}  // namespace exlibris
