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

#include "exlibris/index.hpp"

#include <algorithm>

#include "exlibris/error.hpp"
#include "exlibris/reader.hpp"
#include "exlibris/writer.hpp"

namespace exlibris {
namespace {

bool has_extension(const fs::path& p, std::span<const std::string> exts) {
  std::string ext = p.extension().string();
  return std::find(exts.begin(), exts.end(), ext) != exts.end();
}

std::vector<fs::path> source_files(const fs::path& root, const MkindexOptions& options) {
  std::vector<fs::path> out;
  auto consider = [&](const fs::directory_entry& e) {
    if (!e.is_regular_file()) return;
    if (e.path().filename() == kIndexFileName) return;
    if (has_extension(e.path(), options.extensions)) out.push_back(e.path());
  };
  std::error_code ec;
  if (options.follow_subdirs) {
    for (auto it = fs::recursive_directory_iterator(root, ec); !ec && it != fs::end(it);
         it.increment(ec)) {
      consider(*it);
    }
  } else {
    for (auto it = fs::directory_iterator(root, ec); !ec && it != fs::end(it); it.increment(ec)) {
      consider(*it);
    }
  }
  if (ec) throw IoError(ec.message(), root.string());
  std::sort(out.begin(), out.end(), [&](const fs::path& a, const fs::path& b) {
    return a.lexically_relative(root).generic_string() < b.lexically_relative(root).generic_string();
  });
  return out;
}

std::string relative_stem(const fs::path& file, const fs::path& root) {
  fs::path rel = file.lexically_relative(root);
  rel.replace_extension();
  return rel.generic_string();
}

}  // namespace

LibraryIndex mkindex(const fs::path& root, const MkindexOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("not a directory", root.string());

  LibraryIndex index{root, {}};
  for (const fs::path& path : source_files(root, options)) {
    FileFacts facts = scan_file(path);
    std::string file = relative_stem(path, root);
    if (facts.module_decl) {
      for (const auto& f : facts.module_decl->exports) {
        index.entries.push_back({f, IfPls::always(), facts.module_decl->name, file});
      }
    } else if (!facts.defines.empty()) {
      std::string module = facts.defines_module.value_or("user");
      for (const auto& d : facts.defines) {
        for (const auto& f : d.functors) index.entries.push_back({f, d.cond, module, file});
      }
    } else if (options.clause_fallback) {
      for (const auto& f : facts.clause_heads) {
        index.entries.push_back({f, IfPls::always(), "user", file});
      }
    }
  }
  std::stable_sort(index.entries.begin(), index.entries.end(),
                   [](const IndexEntry& a, const IndexEntry& b) { return a.functor < b.functor; });
  return index;
}

Term index_fact(const IndexEntry& e) {
  return Term::compound("index", {Term::atom(e.functor.name), Term::integer(e.functor.arity),
                                  to_term(e.cond), Term::atom(e.module), Term::atom(e.file)});
}

std::string format_index(const LibraryIndex& index) {
  std::string out(kIndexHeader);
  for (const auto& e : index.entries) {
    out += render_clause(index_fact(e));
    out += '\n';
  }
  return out;
}

void write_index(const LibraryIndex& index) {
  write_file(index.root / kIndexFileName, format_index(index));
}

LibraryIndex parse_index_text(std::string_view text, const fs::path& root,
                              const std::string& file, std::vector<std::string>* warnings) {
  LibraryIndex index{root, {}};
  std::string where = file.empty() ? std::string() : file + ":";
  for (const SourceTerm& st : read_terms(text, file)) {
    const Term& t = st.term;
    if (t.is_compound(":-", 1) || t.is_compound(":-", 2)) continue;
    if (!t.is_compound("index", 5)) {
      if (warnings) {
        warnings->push_back(where + std::to_string(st.span.line) + ": ignoring non-index fact " +
                            render_term(t));
      }
      continue;
    }
    const Term& name = t.arg(0);
    const Term& arity = t.arg(1);
    const Term& module = t.arg(3);
    const Term& path = t.arg(4);
    if (!name.is_atom() || !arity.is_integer() || arity.value() < 0 || !module.is_atom() ||
        !path.is_atom()) {
      throw Error(where + std::to_string(st.span.line) + ": malformed index/5 fact " +
                  render_term(t));
    }
    IfPls cond = [&] {
      try {
        return parse_if_pls(t.arg(2));
      } catch (const MalformedCondition& e) {
        throw Error(where + std::to_string(st.span.line) + ": " + e.what());
      }
    }();
    index.entries.push_back(
        {FunctorRef{name.name(), arity.value()}, std::move(cond), module.name(), path.name()});
  }
  return index;
}

LibraryIndex parse_index(const fs::path& path, std::vector<std::string>* warnings) {
  return parse_index_text(read_file(path), path.parent_path(), path.string(), warnings);
}

LibraryIndex load_index(const fs::path& root, const MkindexOptions& options,
                        std::vector<std::string>* warnings) {
  fs::path file = root / kIndexFileName;
  std::error_code ec;
  if (fs::is_regular_file(file, ec)) {
    LibraryIndex index = parse_index(file, warnings);
    index.root = root;
    return index;
  }
  return mkindex(root, options);
}

std::vector<IndexEntry> dangling_entries(const LibraryIndex& index,
                                         std::span<const std::string> extensions) {
  std::vector<IndexEntry> out;
  for (const auto& e : index.entries) {
    if (!locate_source(index.root, e.file, extensions)) out.push_back(e);
  }
  return out;
}

}  // namespace exlibris
