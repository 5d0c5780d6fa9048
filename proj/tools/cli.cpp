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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "exlibris/error.hpp"
#include "exlibris/exporter.hpp"
#include "exlibris/index.hpp"
#include "exlibris/resolver.hpp"

namespace exlibris::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

// Library flags shared by export, trace and graph.
struct LibraryFlags {
  std::vector<std::string> syslibs;
  std::vector<std::string> homelibs;
  std::string loclib = "lib";
  std::vector<std::string> extensions;
  std::string config;

  void attach(CLI::App& cmd) {
    cmd.add_option("--syslib", syslibs, "System library directory (repeatable)");
    cmd.add_option("--homelib", homelibs, "Home library directory (repeatable)");
    cmd.add_option("--loclib", loclib, "Local library, relative to the project")
        ->capture_default_str();
    cmd.add_option("--ext", extensions, "Source file extension (repeatable)");
    cmd.add_option("--config", config, "key=value file with syslib, homelib, extensions");
  }
};

struct Config {
  std::vector<fs::path> syslibs;
  std::vector<fs::path> homelibs;
  std::vector<std::string> extensions;
};

std::string trim(std::string s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

Config read_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file", path.string());
  Config cfg;
  fs::path dir = path.parent_path();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "syslib") {
      cfg.syslibs.push_back(dir / value);
    } else if (key == "homelib") {
      cfg.homelibs.push_back(dir / value);
    } else if (key == "extensions") {
      std::stringstream ss(value);
      std::string ext;
      while (std::getline(ss, ext, ',')) {
        ext = trim(ext);
        if (!ext.empty()) cfg.extensions.push_back(ext);
      }
    } else {
      throw UsageError(path.string() + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  return cfg;
}

struct ResolvedFlags {
  std::vector<fs::path> syslibs;
  std::vector<fs::path> homelibs;
  fs::path loclib;
  std::vector<std::string> extensions;
};

ResolvedFlags resolve_flags(const LibraryFlags& flags) {
  ResolvedFlags r;
  std::string config_path = flags.config;
  if (config_path.empty()) {
    if (const char* env = std::getenv("EXLIBRIS_CONFIG")) config_path = env;
  }
  Config cfg;
  if (!config_path.empty()) cfg = read_config(config_path);
  if (flags.syslibs.empty()) {
    r.syslibs = cfg.syslibs;
  } else {
    r.syslibs.assign(flags.syslibs.begin(), flags.syslibs.end());
  }
  if (flags.homelibs.empty()) {
    r.homelibs = cfg.homelibs;
  } else {
    r.homelibs.assign(flags.homelibs.begin(), flags.homelibs.end());
  }
  r.extensions = !flags.extensions.empty() ? flags.extensions
                 : !cfg.extensions.empty() ? cfg.extensions
                                           : default_extensions();
  for (auto& e : r.extensions) {
    if (!e.starts_with(".")) e = "." + e;
  }
  r.loclib = flags.loclib;
  if (r.loclib.is_absolute()) throw UsageError("--loclib must be a relative path");
  return r;
}

PlId parse_engine(const std::string& text) {
  try {
    return PlId::parse(text);
  } catch (const MalformedCondition& e) {
    throw UsageError(std::string("bad --pl value: ") + e.what());
  }
}

EngineSelection parse_engines(const std::vector<std::string>& texts) {
  if (texts.empty()) return EngineSelection::all();
  std::vector<PlId> engines;
  for (const auto& t : texts) engines.push_back(parse_engine(t));
  return EngineSelection::of(std::move(engines));
}

LibrarySet load_libraries(const ResolvedFlags& flags, const fs::path& project_dir,
                          std::ostream& err) {
  MkindexOptions mk;
  mk.extensions = flags.extensions;
  std::optional<fs::path> loclib;
  fs::path candidate = project_dir / flags.loclib;
  std::error_code ec;
  if (fs::is_directory(candidate, ec)) loclib = candidate;
  std::vector<std::string> warnings;
  LibrarySet libs = LibrarySet::load(flags.syslibs, flags.homelibs, loclib, &warnings, mk);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return libs;
}

fs::path dir_of(const fs::path& file) {
  fs::path dir = file.parent_path();
  return dir.empty() ? fs::path(".") : dir;
}

int run_export(const LibraryFlags& lib_flags, const std::string& dest,
               const std::vector<std::string>& sources, const std::string& copy,
               const std::vector<std::string>& pls, bool strict, std::ostream& out,
               std::ostream& err) {
  ResolvedFlags flags = resolve_flags(lib_flags);
  ExportOptions opts;
  opts.dest = dest;
  opts.sources.assign(sources.begin(), sources.end());
  opts.copy = copy == "recursive" ? CopyMode::recursive : CopyMode::selective;
  opts.syslibs = flags.syslibs;
  opts.homelibs = flags.homelibs;
  opts.loclib = flags.loclib;
  opts.pls = parse_engines(pls);
  opts.strict = strict;
  opts.extensions = flags.extensions;

  std::error_code ec;
  if (fs::exists(fs::symlink_status(opts.dest, ec))) {
    err << "exlibris: destination must not pre-exist: " << opts.dest.string() << '\n';
    return kFailure;
  }
  std::vector<std::string> warnings;
  LibrarySet libs = load_export_libraries(opts, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  ExportPlan plan = plan_export(opts, libs);
  for (const auto& line : describe(plan)) out << line << '\n';
  ApplyReport report = apply_plan(plan);
  if (!report.ok()) {
    err << "exlibris: export failed: " << *report.error << '\n';
    err << "completed steps:\n";
    for (const auto& s : report.completed) err << "  " << s << '\n';
    return kFailure;
  }
  out << "exported " << plan.copies.size() << " files to " << opts.dest.string() << '\n';
  return kOk;
}

int run_mkindex(const std::string& dir, bool clause_fallback, bool no_subdirs,
                const std::vector<std::string>& exts, std::ostream& out) {
  MkindexOptions opts;
  opts.clause_fallback = clause_fallback;
  opts.follow_subdirs = !no_subdirs;
  if (!exts.empty()) {
    opts.extensions = exts;
    for (auto& e : opts.extensions) {
      if (!e.starts_with(".")) e = "." + e;
    }
  }
  LibraryIndex index = mkindex(dir, opts);
  write_index(index);
  for (const auto& e : dangling_entries(index, opts.extensions)) {
    out << "warning: " << e.functor.str() << " names missing file " << e.file << '\n';
  }
  out << "wrote " << (index.root / kIndexFileName).string() << " (" << index.entries.size()
      << " entries)\n";
  return kOk;
}

int run_trace(const LibraryFlags& lib_flags, const std::string& entry, const std::string& pl,
              std::ostream& out, std::ostream& err) {
  ResolvedFlags flags = resolve_flags(lib_flags);
  PlId engine = parse_engine(pl);
  LibrarySet libs = load_libraries(flags, dir_of(entry), err);
  for (const auto& line : trace(entry, engine, libs)) out << line << '\n';
  return kOk;
}

int run_graph(const LibraryFlags& lib_flags, const std::vector<std::string>& entries,
              const std::vector<std::string>& pls, std::ostream& out, std::ostream& err) {
  ResolvedFlags flags = resolve_flags(lib_flags);
  EngineSelection engines = parse_engines(pls);
  std::vector<fs::path> files(entries.begin(), entries.end());
  LibrarySet libs = load_libraries(flags, dir_of(files.front()), err);
  out << format_dot(closure(files, libs, engines));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index Prolog libraries, resolve engine-specific dependencies, export projects",
               "exlibris"};
  app.require_subcommand(1);

  LibraryFlags export_libs;
  std::string dest;
  std::vector<std::string> sources;
  std::string copy = "selective";
  std::vector<std::string> export_pls;
  bool strict = false;
  auto* exp = app.add_subcommand("export", "Export a project with its home dependencies vendored");
  exp->add_option("--dest", dest, "Destination directory (must not exist)")->required();
  exp->add_option("--source", sources, "Entry file or directory (repeatable)")->required();
  exp->add_option("--copy", copy, "selective or recursive")
      ->check(CLI::IsMember({"selective", "recursive"}))
      ->capture_default_str();
  exp->add_option("--pl", export_pls, "Target engine name:v.v.v (repeatable; default all)");
  exp->add_flag("--strict", strict, "Fail when a required functor is unresolved");
  export_libs.attach(*exp);

  std::string index_dir;
  bool clause_fallback = false;
  bool no_subdirs = false;
  std::vector<std::string> index_exts;
  auto* mk = app.add_subcommand("mkindex", "Write Index.pl for a library directory");
  mk->add_option("dir", index_dir, "Library root")->required();
  mk->add_flag("--clause-fallback", clause_fallback, "Index clause heads of undeclared files");
  mk->add_flag("--no-subdirs", no_subdirs, "Only scan the top directory");
  mk->add_option("--ext", index_exts, "Source file extension (repeatable)");

  LibraryFlags trace_libs;
  std::string trace_entry;
  std::string trace_pl;
  auto* tr = app.add_subcommand("trace", "Report load decisions for one entry and engine");
  tr->add_option("entry", trace_entry, "Entry file")->required();
  tr->add_option("--pl", trace_pl, "Engine name:v.v.v")->required();
  trace_libs.attach(*tr);

  LibraryFlags graph_libs;
  std::vector<std::string> graph_entries;
  std::vector<std::string> graph_pls;
  auto* gr = app.add_subcommand("graph", "Print the dependency graph in DOT format");
  gr->add_option("entries", graph_entries, "Entry files")->required();
  gr->add_option("--pl", graph_pls, "Target engine name:v.v.v (repeatable; default all)");
  graph_libs.attach(*gr);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "exlibris: " << e.what() << '\n';
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kUsage;
  }

  try {
    if (*exp) return run_export(export_libs, dest, sources, copy, export_pls, strict, out, err);
    if (*mk) return run_mkindex(index_dir, clause_fallback, no_subdirs, index_exts, out);
    if (*tr) return run_trace(trace_libs, trace_entry, trace_pl, out, err);
    if (*gr) return run_graph(graph_libs, graph_entries, graph_pls, out, err);
  } catch (const UsageError& e) {
    err << "exlibris: " << e.what() << '\n';
    return kUsage;
  } catch (const StrictModeError& e) {
    err << "exlibris: " << e.what() << '\n';
    return kUnresolved;
  } catch (const Error& e) {
    err << "exlibris: " << e.what() << '\n';
    return kFailure;
  } catch (const fs::filesystem_error& e) {
    err << "exlibris: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace exlibris::cli
