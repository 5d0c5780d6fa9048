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

#include "exlibris/resolver.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "exlibris/error.hpp"

namespace exlibris {
namespace {

std::string canon(const fs::path& p) {
  std::error_code ec;
  fs::path c = fs::weakly_canonical(p, ec);
  return (ec ? fs::absolute(p).lexically_normal() : c).string();
}

// Path of `p` below `root`, without extension; nullopt when outside.
std::optional<std::string> within(const fs::path& p, const fs::path& root) {
  fs::path rel = fs::path(canon(p)).lexically_relative(canon(root));
  if (rel.empty()) return std::nullopt;
  std::string s = rel.generic_string();
  if (s == ".." || s.starts_with("../") || s == ".") return std::nullopt;
  return strip_extension(s);
}

std::string with_condition(std::string label, const IfPls& cond) {
  if (!cond.is_always()) label += " if " + render(cond);
  return label;
}

const Library* find_library(const LibrarySet& libs, const fs::path& root) {
  for (const Library* lib : libs.search_order()) {
    if (lib->root == root) return lib;
  }
  return nullptr;
}

ResolvedTarget target_for(const Library& lib, std::size_t i, const LibrarySet& libs) {
  const IndexEntry& e = lib.index.entries[i];
  ResolvedTarget t;
  t.library = lib.kind;
  t.root = lib.root;
  t.file = e.file;
  t.entry = i;
  if (e.is_built_in()) {
    t.kind = ResolvedTarget::Kind::built_in;
  } else if (locate_source(lib.root, e.file, libs.extensions)) {
    t.kind = ResolvedTarget::Kind::load_file;
  } else {
    return ResolvedTarget::unresolved();
  }
  return t;
}

// A file reached by a loading call, may_load, or a resolved functor.
struct FileHit {
  std::optional<LibraryKind> library;  // nullopt: project file
  fs::path root;
  std::string rel;
  fs::path path;
};

// Node naming and file-reference resolution shared by closure and trace.
class Resolution {
 public:
  Resolution(const LibrarySet& libs, fs::path base) : libs_(libs), base_(std::move(base)) {}

  void add_entry(const fs::path& p) { entry_ids_[canon(p)] = "entry:" + project_rel(p); }

  std::string id_of(const FileHit& hit) const {
    if (hit.library) return std::string(kind_name(*hit.library)) + ":" + hit.rel;
    auto it = entry_ids_.find(canon(hit.path));
    if (it != entry_ids_.end()) return it->second;
    return "project:" + hit.rel;
  }

  std::string id_of_path(const fs::path& p) const {
    auto it = entry_ids_.find(canon(p));
    if (it != entry_ids_.end()) return it->second;
    return "project:" + project_rel(p);
  }

  std::optional<FileHit> resolve(const FileRef& ref, const fs::path& from_dir) const {
    if (ref.kind == FileRef::Kind::library) {
      for (const Library* lib : libs_.search_order()) {
        if (auto p = locate_source(lib->root, ref.path, libs_.extensions)) {
          return FileHit{lib->kind, lib->root, strip_extension(ref.path), *p};
        }
      }
      return std::nullopt;
    }
    auto p = locate_source(from_dir, ref.path, libs_.extensions);
    if (!p) return std::nullopt;
    for (const Library* lib : libs_.search_order()) {
      if (auto rel = within(*p, lib->root)) return FileHit{lib->kind, lib->root, *rel, *p};
    }
    return FileHit{std::nullopt, {}, project_rel(*p), *p};
  }

  std::optional<FileHit> hit_for(const ResolvedTarget& t) const {
    if (t.is_unresolved()) return std::nullopt;
    auto p = locate_source(t.root, t.file, libs_.extensions);
    if (!p) return std::nullopt;
    return FileHit{t.library, t.root, t.file, *p};
  }

  std::string project_rel(const fs::path& p) const {
    if (auto rel = within(p, base_)) return *rel;
    return strip_extension(fs::path(canon(p)).generic_string());
  }

  const IndexEntry& entry_of(const ResolvedTarget& t) const {
    return find_library(libs_, t.root)->index.entries[t.entry];
  }

 private:
  const LibrarySet& libs_;
  fs::path base_;
  std::map<std::string, std::string> entry_ids_;
};

class ClosureBuilder {
 public:
  ClosureBuilder(const LibrarySet& libs, const EngineSelection& engines, fs::path base)
      : libs_(libs), engines_(engines), res_(libs, std::move(base)) {}

  DepClosure run(const std::vector<fs::path>& entries) {
    for (const auto& e : entries) res_.add_entry(e);
    for (const auto& e : entries) {
      std::string id = res_.id_of_path(e);
      out_.nodes.insert(id);
      enqueue(e, id);
    }
    while (!queue_.empty()) {
      auto [path, id] = std::move(queue_.front());
      queue_.pop_front();
      process(path, id);
    }
    return std::move(out_);
  }

 private:
  void enqueue(const fs::path& path, const std::string& id) {
    if (queued_.insert(canon(path)).second) queue_.emplace_back(path, id);
  }

  void process(const fs::path& path, const std::string& id) {
    FileFacts facts = scan_file(path);
    fs::path dir = path.parent_path();

    for (const auto& req : facts.required) {
      if (engines_.is_all()) {
        auto targets = candidates(req.functor, engines_, libs_);
        if (targets.empty()) out_.unresolved.insert({id, req.functor, std::nullopt});
        for (const auto& t : targets) record(id, req.functor, std::nullopt, t);
      } else {
        for (const PlId& e : engines_.engines()) {
          record(id, req.functor, e, resolve_functor(req.functor, e, libs_));
        }
      }
    }
    for (const auto& load : facts.loads) {
      if (!engines_.any_match(load.guard)) continue;
      reach_file(id, load.file, dir,
                 with_condition(load.predicate + " " + load.file.str(), load.guard));
    }
    for (const auto& may : facts.may_load) {
      reach_file(id, may.file, dir, "may_load " + may.file.str());
    }
  }

  void record(const std::string& from, const FunctorRef& f, const std::optional<PlId>& engine,
              const ResolvedTarget& t) {
    auto& slot = out_.resolutions[{f, engine}];
    if (std::find(slot.begin(), slot.end(), t) == slot.end()) slot.push_back(t);
    if (t.is_unresolved()) {
      out_.unresolved.insert({from, f, engine});
      return;
    }
    out_.selected_entries.insert({t.root.string(), t.entry});
    auto hit = res_.hit_for(t);
    if (!hit) return;  // built-in whose declaring file is absent
    std::string label = with_condition("requires " + f.str(), res_.entry_of(t).cond);
    if (t.kind == ResolvedTarget::Kind::built_in) label += " (built-in)";
    reach(from, *hit, label);
  }

  void reach_file(const std::string& from, const FileRef& ref, const fs::path& dir,
                  const std::string& label) {
    auto hit = res_.resolve(ref, dir);
    if (!hit) {
      out_.dangling.insert({from, ref});
      return;
    }
    reach(from, *hit, label);
  }

  void reach(const std::string& from, const FileHit& hit, const std::string& label) {
    std::string id = res_.id_of(hit);
    out_.nodes.insert(id);
    out_.edges.insert({from, id, label});
    if (!hit.library) {
      if (!id.starts_with("entry:")) out_.project_files.insert(fs::path(canon(hit.path)));
      enqueue(hit.path, id);
      return;
    }
    switch (*hit.library) {
      case LibraryKind::system:
        return;
      case LibraryKind::home:
        out_.home_files.insert({hit.root.string(), hit.rel});
        break;
      case LibraryKind::local:
        out_.local_files.insert(hit.rel);
        break;
    }
    enqueue(hit.path, id);
  }

  const LibrarySet& libs_;
  const EngineSelection& engines_;
  Resolution res_;
  DepClosure out_;
  std::set<std::string> queued_;
  std::deque<std::pair<fs::path, std::string>> queue_;
};

class Tracer {
 public:
  Tracer(const LibrarySet& libs, const PlId& engine, fs::path base)
      : libs_(libs), engine_(engine), res_(libs, std::move(base)) {}

  std::vector<std::string> run(const fs::path& entry) {
    res_.add_entry(entry);
    visited_.insert(canon(entry));
    visit(entry, 0);
    return std::move(lines_);
  }

 private:
  struct Event {
    std::size_t offset;
    enum { require, load, may_load } kind;
    std::size_t index;
  };

  void visit(const fs::path& path, int depth) {
    std::string key = canon(path);
    stack_.insert(key);
    FileFacts facts = scan_file(path);
    fs::path dir = path.parent_path();

    std::vector<Event> events;
    for (std::size_t i = 0; i < facts.required.size(); ++i) {
      events.push_back({facts.required[i].span.begin, Event::require, i});
    }
    for (std::size_t i = 0; i < facts.loads.size(); ++i) {
      events.push_back({facts.loads[i].span.begin, Event::load, i});
    }
    for (std::size_t i = 0; i < facts.may_load.size(); ++i) {
      events.push_back({facts.may_load[i].span.begin, Event::may_load, i});
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.offset < b.offset; });

    for (const Event& ev : events) {
      switch (ev.kind) {
        case Event::require: {
          const FunctorRef& f = facts.required[ev.index].functor;
          ResolvedTarget t = resolve_functor(f, engine_, libs_);
          std::string subject = "requires " + f.str();
          if (t.is_unresolved()) {
            emit(depth, subject + ": unresolved");
          } else if (t.kind == ResolvedTarget::Kind::built_in) {
            emit(depth, subject + ": built-in " + std::string(kind_name(t.library)) + " " + t.file);
          } else {
            auto hit = res_.hit_for(t);
            enter(depth, subject, *hit);
          }
          break;
        }
        case Event::load: {
          const LoadDecl& load = facts.loads[ev.index];
          std::string subject = load.predicate + " " + load.file.str();
          if (!matches(load.guard, engine_)) {
            emit(depth, subject + ": skip (guard " + render(load.guard) + " failed)");
          } else if (auto hit = res_.resolve(load.file, dir)) {
            enter(depth, subject, *hit);
          } else {
            emit(depth, subject + ": unresolved");
          }
          break;
        }
        case Event::may_load: {
          const MayLoadDecl& may = facts.may_load[ev.index];
          std::string subject = "may_load " + may.file.str();
          if (auto hit = res_.resolve(may.file, dir)) {
            enter(depth, subject, *hit);
          } else {
            emit(depth, subject + ": unresolved");
          }
          break;
        }
      }
    }
    stack_.erase(key);
  }

  void enter(int depth, const std::string& subject, const FileHit& hit) {
    std::string kind = hit.library ? std::string(kind_name(*hit.library)) : "project";
    std::string line = subject + ": load " + kind + " " + hit.rel;
    if (hit.library == LibraryKind::system) {
      emit(depth, line);
      return;
    }
    std::string key = canon(hit.path);
    if (stack_.count(key)) {
      emit(depth, line + " (cycle)");
    } else if (!visited_.insert(key).second) {
      emit(depth, line + " (already loaded)");
    } else {
      emit(depth, line);
      visit(hit.path, depth + 1);
    }
  }

  void emit(int depth, std::string line) {
    lines_.push_back(std::string(static_cast<std::size_t>(depth) * 2, ' ') + std::move(line));
  }

  const LibrarySet& libs_;
  const PlId& engine_;
  Resolution res_;
  std::set<std::string> visited_;
  std::set<std::string> stack_;
  std::vector<std::string> lines_;
};

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view kind_name(LibraryKind kind) {
  switch (kind) {
    case LibraryKind::system: return "system";
    case LibraryKind::local: return "local";
    case LibraryKind::home: return "home";
  }
  return "?";
}

LibrarySet LibrarySet::load(const std::vector<fs::path>& syslibs,
                            const std::vector<fs::path>& homelibs,
                            const std::optional<fs::path>& loclib,
                            std::vector<std::string>* warnings, const MkindexOptions& options) {
  LibrarySet set;
  set.extensions = options.extensions;
  std::map<std::string, std::string> seen;
  auto add = [&](const fs::path& root, LibraryKind kind) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw IoError("library directory not found", root.string());
    auto [it, fresh] = seen.emplace(canon(root), std::string(kind_name(kind)));
    if (!fresh) {
      throw Error(root.string() + " is listed as both a " + it->second + " and a " +
                  std::string(kind_name(kind)) + " library");
    }
    return Library{kind, root, load_index(root, options, warnings)};
  };
  for (const auto& r : syslibs) set.syslibs.push_back(add(r, LibraryKind::system));
  for (const auto& r : homelibs) set.homelibs.push_back(add(r, LibraryKind::home));
  if (loclib) set.loclib = add(*loclib, LibraryKind::local);
  return set;
}

std::vector<const Library*> LibrarySet::search_order() const {
  std::vector<const Library*> out;
  if (loclib) out.push_back(&*loclib);
  for (const auto& l : syslibs) out.push_back(&l);
  for (const auto& l : homelibs) out.push_back(&l);
  return out;
}

std::string ResolvedTarget::str() const {
  switch (kind) {
    case Kind::built_in: return "built-in " + std::string(kind_name(library)) + " " + file;
    case Kind::load_file: return "load " + std::string(kind_name(library)) + " " + file;
    case Kind::unresolved: return "unresolved";
  }
  return "?";
}

std::strong_ordering ResolvedTarget::operator<=>(const ResolvedTarget& other) const {
  if (auto c = std::tie(kind, library, file, entry) <=>
               std::tie(other.kind, other.library, other.file, other.entry);
      c != 0) {
    return c;
  }
  return root.generic_string() <=> other.root.generic_string();
}

ResolvedTarget resolve_functor(const FunctorRef& f, const PlId& engine, const LibrarySet& libs) {
  for (const Library* lib : libs.search_order()) {
    const auto& entries = lib->index.entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].functor == f && matches(entries[i].cond, engine)) {
        return target_for(*lib, i, libs);
      }
    }
  }
  return ResolvedTarget::unresolved();
}

std::vector<ResolvedTarget> candidates(const FunctorRef& f, const EngineSelection& engines,
                                       const LibrarySet& libs) {
  std::vector<ResolvedTarget> out;
  auto add = [&](ResolvedTarget t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  };
  if (!engines.is_all()) {
    for (const PlId& e : engines.engines()) {
      ResolvedTarget t = resolve_functor(f, e, libs);
      if (!t.is_unresolved()) add(std::move(t));
    }
    return out;
  }
  for (const Library* lib : libs.search_order()) {
    const auto& entries = lib->index.entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].functor != f || !satisfiable(entries[i].cond)) continue;
      add(target_for(*lib, i, libs));
      if (always_matches(entries[i].cond)) return out;
    }
  }
  return out;
}

DepClosure closure(const std::vector<fs::path>& entries, const LibrarySet& libs,
                   const EngineSelection& engines) {
  fs::path base = entries.empty() ? fs::path(".") : entries.front().parent_path();
  if (base.empty()) base = ".";
  return ClosureBuilder(libs, engines, base).run(entries);
}

std::vector<std::string> trace(const fs::path& entry, const PlId& engine, const LibrarySet& libs) {
  fs::path base = entry.parent_path();
  if (base.empty()) base = ".";
  return Tracer(libs, engine, base).run(entry);
}

std::string format_dot(const DepClosure& c) {
  std::string out = "digraph exlibris {\n";
  for (const auto& n : c.nodes) out += "  " + dot_quote(n) + ";\n";
  for (const auto& e : c.edges) {
    out += "  " + dot_quote(e.from) + " -> " + dot_quote(e.to) + " [label=" + dot_quote(e.label) +
           "];\n";
  }
  return out + "}\n";
}

}  // namespace exlibris
