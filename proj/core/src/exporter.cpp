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

#include "exlibris/exporter.hpp"

#include <algorithm>
#include <map>

#include "exlibris/reader.hpp"
#include "exlibris/writer.hpp"

namespace exlibris {
namespace {

fs::path canon(const fs::path& p) {
  std::error_code ec;
  fs::path c = fs::weakly_canonical(p, ec);
  return ec ? fs::absolute(p).lexically_normal() : c;
}

bool is_under(const fs::path& p, const fs::path& dir) {
  fs::path rel = canon(p).lexically_relative(canon(dir));
  if (rel.empty()) return false;
  auto first = *rel.begin();
  return first != "..";
}

bool has_extension(const fs::path& p, std::span<const std::string> exts) {
  return std::find(exts.begin(), exts.end(), p.extension().string()) != exts.end();
}

std::vector<fs::path> files_under(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string quoted_path(std::string_view rel) {
  std::string out = "'";
  for (char c : rel) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

// Widens a deletion to the whole line when the directive is alone on it, so
// removing it leaves no blank line behind.
Edit line_deletion(std::string_view text, std::size_t begin, std::size_t end) {
  std::size_t b = begin;
  while (b > 0 && (text[b - 1] == ' ' || text[b - 1] == '\t')) --b;
  std::size_t e = end;
  while (e < text.size() && (text[e] == ' ' || text[e] == '\t')) ++e;
  bool line_start = b == 0 || text[b - 1] == '\n';
  bool line_end = e == text.size() || text[e] == '\n' || text[e] == '\r';
  if (!line_start || !line_end) return {begin, end, ""};
  if (e < text.size() && text[e] == '\r') ++e;
  if (e < text.size() && text[e] == '\n') ++e;
  return {b, e, ""};
}

std::string directive_text(const Term& body) {
  return render_clause(Term::compound(":-", {body}));
}

class Planner {
 public:
  Planner(const ExportOptions& opts, const LibrarySet& libs)
      : opts_(opts), libs_(libs), base_(canon(project_base(opts))), dev_loclib_(base_ / opts.loclib) {}

  ExportPlan run() {
    validate();
    collect_entries();
    plan_.dest = opts_.dest;
    plan_.closure = closure(entries_, libs_, opts_.pls);
    report_diagnostics();
    plan_copies();
    plan_rewrites();
    plan_index();
    return std::move(plan_);
  }

 private:
  void validate() {
    if (opts_.dest.empty()) throw ExportError("no destination given");
    if (opts_.sources.empty()) throw ExportError("no sources given");
    if (opts_.loclib.empty() || opts_.loclib.is_absolute()) {
      throw ExportError("local library must be a relative path: " + opts_.loclib.string());
    }
    std::error_code ec;
    if (fs::exists(fs::symlink_status(opts_.dest, ec))) {
      throw ExportError("destination must not pre-exist: " + opts_.dest.string());
    }
  }

  void collect_entries() {
    std::set<fs::path> seen;
    auto add = [&](const fs::path& p) {
      fs::path c = canon(p);
      if (seen.insert(c).second) entries_.push_back(c);
    };
    for (const auto& src : opts_.sources) {
      std::error_code ec;
      if (fs::is_directory(src, ec)) {
        for (const auto& f : files_under(src)) {
          if (f.filename() == kIndexFileName || !has_extension(f, opts_.extensions)) continue;
          if (is_under(f, dev_loclib_)) continue;
          add(f);
        }
      } else if (fs::is_regular_file(src, ec)) {
        add(src);
      } else {
        throw ExportError("source not found: " + src.string());
      }
    }
  }

  void report_diagnostics() {
    const DepClosure& c = plan_.closure;
    std::vector<std::string> unresolved;
    for (const auto& u : c.unresolved) {
      std::string line = "unresolved " + u.functor.str() + " in " + u.file;
      if (u.engine) line += " for " + u.engine->str();
      unresolved.push_back(line);
    }
    if (opts_.strict && !unresolved.empty()) {
      std::string msg = "strict mode: unresolved functors";
      for (const auto& l : unresolved) msg += "\n  " + l;
      throw StrictModeError(msg);
    }
    plan_.warnings.insert(plan_.warnings.end(), unresolved.begin(), unresolved.end());
    for (const auto& d : c.dangling) {
      plan_.warnings.push_back("dangling reference " + d.ref.str() + " in " + d.file);
    }
  }

  fs::path rel_of(const fs::path& p) const { return canon(p).lexically_relative(base_); }

  void add_copy(const fs::path& from, const fs::path& to) {
    fs::path src = canon(from);
    std::string key = to.lexically_normal().generic_string();
    auto [it, fresh] = targets_.emplace(key, src);
    if (fresh) {
      plan_.copies.push_back({src, to.lexically_normal()});
    } else if (it->second != src) {
      throw ExportError("both " + it->second.string() + " and " + src.string() +
                        " would be exported to " + key);
    }
  }

  void plan_copies() {
    if (opts_.copy == CopyMode::recursive) {
      for (const auto& src : opts_.sources) {
        fs::path dir = fs::is_directory(src) ? src : src.parent_path();
        if (dir.empty()) dir = ".";
        for (const auto& f : files_under(dir)) {
          if (is_under(f, dev_loclib_)) continue;
          add_copy(f, rel_of(f));
        }
      }
    } else {
      for (const auto& e : entries_) add_copy(e, rel_of(e));
    }

    const DepClosure& c = plan_.closure;
    for (const auto& [root, rel] : c.home_files) {
      if (auto p = locate_source(root, rel, libs_.extensions)) {
        add_copy(*p, opts_.loclib / canon(*p).lexically_relative(canon(root)));
      }
    }
    if (libs_.loclib) {
      for (const auto& rel : c.local_files) {
        if (auto p = locate_source(libs_.loclib->root, rel, libs_.extensions)) {
          add_copy(*p, opts_.loclib / canon(*p).lexically_relative(canon(libs_.loclib->root)));
        }
      }
    }
    for (const auto& p : c.project_files) {
      if (is_under(p, base_)) {
        add_copy(p, rel_of(p));
      } else {
        plan_.warnings.push_back("not copied (outside the project): " + p.string());
      }
    }
  }

  void plan_rewrites() {
    for (const auto& e : entries_) {
      std::string text = read_file(e);
      FileFacts facts = extract(read_terms(text, e.string()), e.string());
      fs::path rel = rel_of(e);
      fs::path dir = rel.parent_path();
      std::string to_loclib = dir.empty() ? opts_.loclib.lexically_normal().generic_string()
                                          : opts_.loclib.lexically_relative(dir).generic_string();
      plan_.rewrites.push_back({rel, transform_entry(text, facts, to_loclib, opts_.pls)});
    }
  }

  void plan_index() {
    const DepClosure& c = plan_.closure;
    std::vector<IndexEntry> entries;
    auto selected = [&](const Library& lib, std::size_t i) {
      return c.selected_entries.count({lib.root.string(), i}) > 0;
    };
    if (libs_.loclib) {
      const auto& idx = libs_.loclib->index.entries;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (c.local_files.count(idx[i].file) || selected(*libs_.loclib, i)) entries.push_back(idx[i]);
      }
    }
    for (const auto& lib : libs_.homelibs) {
      for (std::size_t i = 0; i < lib.index.entries.size(); ++i) {
        if (selected(lib, i)) entries.push_back(lib.index.entries[i]);
      }
    }
    if (entries.empty()) return;
    std::stable_sort(entries.begin(), entries.end(),
                     [](const IndexEntry& a, const IndexEntry& b) { return a.functor < b.functor; });
    fs::path target = opts_.loclib / kIndexFileName;
    plan_.index_writes.push_back({target.lexically_normal(), {opts_.dest / opts_.loclib, entries}});
  }

  const ExportOptions& opts_;
  const LibrarySet& libs_;
  fs::path base_;
  fs::path dev_loclib_;
  std::vector<fs::path> entries_;
  std::map<std::string, fs::path> targets_;
  ExportPlan plan_;
};

}  // namespace

fs::path project_base(const ExportOptions& opts) {
  std::optional<fs::path> base;
  for (const auto& src : opts.sources) {
    std::error_code ec;
    fs::path dir = fs::is_directory(src, ec) ? src : src.parent_path();
    if (dir.empty()) dir = ".";
    dir = canon(dir);
    if (!base) {
      base = dir;
      continue;
    }
    fs::path common;
    auto a = base->begin();
    auto b = dir.begin();
    for (; a != base->end() && b != dir.end() && *a == *b; ++a, ++b) common /= *a;
    base = common;
  }
  return base.value_or(canon("."));
}

LibrarySet load_export_libraries(const ExportOptions& opts, std::vector<std::string>* warnings) {
  MkindexOptions mk;
  mk.extensions = opts.extensions;
  std::optional<fs::path> loclib;
  if (!opts.sources.empty() && !opts.loclib.is_absolute()) {
    fs::path dev = project_base(opts) / opts.loclib;
    std::error_code ec;
    if (fs::is_directory(dev, ec)) loclib = dev;
  }
  return LibrarySet::load(opts.syslibs, opts.homelibs, loclib, warnings, mk);
}

ExportPlan plan_export(const ExportOptions& opts, const LibrarySet& libs) {
  return Planner(opts, libs).run();
}

std::vector<Edit> transform_entry(std::string_view text, const FileFacts& facts,
                                  std::string_view rel_to_loclib, const EngineSelection& pls) {
  std::map<std::size_t, Edit> by_begin;
  for (const auto& dir : facts.library_dirs) {
    if (by_begin.count(dir.span.begin)) continue;
    by_begin[dir.span.begin] = dir.remainder
                                   ? Edit{dir.span.begin, dir.span.end, directive_text(*dir.remainder)}
                                   : line_deletion(text, dir.span.begin, dir.span.end);
  }
  for (const auto& c : facts.conditionals) {
    if (pls.any_match(c.cond) || by_begin.count(c.span.begin)) continue;
    by_begin[c.span.begin] = c.else_call
                                 ? Edit{c.span.begin, c.span.end, directive_text(*c.else_call)}
                                 : line_deletion(text, c.span.begin, c.span.end);
  }
  std::vector<Edit> edits;
  edits.push_back({0, 0, ":- library_directory( " + quoted_path(rel_to_loclib) + " ).\n"});
  for (auto& [_, e] : by_begin) edits.push_back(std::move(e));
  return edits;
}

ApplyReport apply_plan(const ExportPlan& plan) {
  ApplyReport report;
  std::error_code ec;
  if (fs::exists(fs::symlink_status(plan.dest, ec))) {
    report.error = "destination must not pre-exist: " + plan.dest.string();
    return report;
  }
  try {
    fs::create_directories(plan.dest);
    report.completed.push_back("create " + plan.dest.string());
    for (const auto& c : plan.copies) {
      fs::path to = plan.dest / c.to;
      fs::create_directories(to.parent_path());
      fs::copy_file(c.from, to);
      report.completed.push_back("copy " + c.from.string() + " -> " + c.to.generic_string());
    }
    for (const auto& r : plan.rewrites) {
      fs::path target = plan.dest / r.target;
      write_file(target, splice(read_file(target), r.edits));
      report.completed.push_back("rewrite " + r.target.generic_string());
    }
    for (const auto& w : plan.index_writes) {
      write_file(plan.dest / w.target, format_index(w.index));
      report.completed.push_back("index " + w.target.generic_string());
    }
  } catch (const fs::filesystem_error& e) {
    report.error = e.what();
  } catch (const Error& e) {
    report.error = e.what();
  }
  return report;
}

std::vector<std::string> describe(const ExportPlan& plan) {
  std::vector<std::string> out;
  for (const auto& c : plan.copies) {
    out.push_back("copy " + c.from.string() + " -> " + c.to.generic_string());
  }
  for (const auto& r : plan.rewrites) {
    out.push_back("rewrite " + r.target.generic_string() + " (" + std::to_string(r.edits.size()) +
                  " edits)");
  }
  for (const auto& w : plan.index_writes) {
    out.push_back("index " + w.target.generic_string() + " (" +
                  std::to_string(w.index.entries.size()) + " entries)");
  }
  for (const auto& w : plan.warnings) out.push_back("warning: " + w);
  return out;
}

}  // namespace exlibris
