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

#include <gtest/gtest.h>

#include "exlibris/reader.hpp"
#include "testing.hpp"

namespace exlibris {
namespace {

using testing::fixture;
using testing::put;
using testing::slurp;
using testing::snapshot;
using testing::TempDir;

const PlId kSwi{"swi", {5, 0, 7}};
const PlId kSicstus{"sicstus", {3, 9, 0}};

std::string transformed(const std::string& text, const EngineSelection& pls,
                        std::string_view rel = "lib") {
  FileFacts facts = extract(read_terms(text));
  return splice(text, transform_entry(text, facts, rel, pls));
}

ExportOptions example_options(const fs::path& dest) {
  ExportOptions opts;
  opts.dest = dest;
  opts.sources = {fixture("example/project1/file1.pl")};
  opts.syslibs = {fixture("example/SysLib")};
  opts.homelibs = {fixture("example/HomeLib")};
  return opts;
}

ExportPlan plan_for(const ExportOptions& opts) {
  return plan_export(opts, load_export_libraries(opts));
}

void export_tree(const ExportOptions& opts) {
  ApplyReport report = apply_plan(plan_for(opts));
  ASSERT_TRUE(report.ok()) << *report.error;
}

TEST(TransformEntry, InsertsLibraryDirectoryAtTop) {
  EXPECT_EQ(transformed("p.\n", EngineSelection::all()), ":- library_directory( 'lib' ).\np.\n");
  EXPECT_EQ(transformed("p.\n", EngineSelection::all(), "../lib"),
            ":- library_directory( '../lib' ).\np.\n");
}

TEST(TransformEntry, DeletesLibraryDirectoryDefinitions) {
  std::string text =
      "% top\n"
      ":- library_directory('/home/me/HomeLib').\n"
      "p.\n"
      "library_directory(x). % trailing\n"
      ":- library_directory(y), ensure_loaded(library(z)).\n";
  EXPECT_EQ(transformed(text, EngineSelection::all()),
            ":- library_directory( 'lib' ).\n"
            "% top\n"
            "p.\n"
            " % trailing\n"
            ":- ensure_loaded( library(z) ).\n");
}

TEST(TransformEntry, PrunesIfPlWithNoMatchingTarget) {
  std::string text =
      ":- if_pl(yap(_), consult(y)).\n"
      ":- if_pl(swi(_), consult(s)).\n"
      ":- if_pl(sicstus(_), consult(a), consult(b)).\n";
  EXPECT_EQ(transformed(text, EngineSelection::of({kSwi})),
            ":- library_directory( 'lib' ).\n"
            ":- if_pl(swi(_), consult(s)).\n"
            ":- consult( b ).\n");
  EXPECT_EQ(transformed(text, EngineSelection::all()),
            ":- library_directory( 'lib' ).\n" + text);
}

TEST(TransformEntry, BytesOutsideEditsUnchanged) {
  std::string text = "/* keep\n me */ :- if_pl(yap(_), consult(y)).   p(  'x' ).\n";
  EXPECT_EQ(transformed(text, EngineSelection::of({kSwi})),
            ":- library_directory( 'lib' ).\n/* keep\n me */    p(  'x' ).\n");
}

TEST(PlanExport, ExampleScenarioDefaults) {
  TempDir tmp;
  ExportPlan plan = plan_for(example_options(tmp / "out"));
  std::set<std::string> targets;
  for (const auto& c : plan.copies) targets.insert(c.to.generic_string());
  EXPECT_EQ(targets, (std::set<std::string>{"file1.pl", "lib/meta/maplist.pl",
                                            "lib/list/flatten.pl", "lib/compat/swi/built_ins.pl"}));
  ASSERT_EQ(plan.rewrites.size(), 1u);
  EXPECT_EQ(plan.rewrites[0].target, "file1.pl");
  ASSERT_EQ(plan.index_writes.size(), 1u);
  EXPECT_EQ(plan.index_writes[0].target, "lib/Index.pl");
  EXPECT_EQ(plan.index_writes[0].index.entries.size(), 4u);
  EXPECT_TRUE(plan.warnings.empty());
  EXPECT_FALSE(fs::exists(tmp / "out"));
}

TEST(PlanExport, SwiOnlyOmitsHomeFlatten) {
  TempDir tmp;
  ExportOptions opts = example_options(tmp / "out");
  opts.pls = EngineSelection::of({kSwi});
  export_tree(opts);
  EXPECT_FALSE(fs::exists(tmp / "out/lib/list/flatten.pl"));
  EXPECT_TRUE(fs::exists(tmp / "out/lib/compat/swi/built_ins.pl"));
  EXPECT_EQ(slurp(tmp / "out/lib/Index.pl"),
            "% generated by exlibris mkindex\n"
            "index( flatten, 2, swi(_), built_in, 'compat/swi/built_ins' ).\n"
            "index( maplist, 3, any, user, 'meta/maplist' ).\n"
            "index( member, 2, swi(_), built_in, 'compat/swi/built_ins' ).\n");
}

TEST(PlanExport, ExistingDestinationRefused) {
  TempDir tmp;
  fs::create_directories(tmp / "out");
  EXPECT_THROW(plan_for(example_options(tmp / "out")), ExportError);
}

TEST(PlanExport, StrictModeEscalatesUnresolved) {
  TempDir tmp;
  put(tmp / "p/main.pl", ":- requires(nowhere/0).\n");
  ExportOptions opts;
  opts.dest = tmp / "out";
  opts.sources = {tmp / "p/main.pl"};
  ExportPlan lax = plan_for(opts);
  ASSERT_EQ(lax.warnings.size(), 1u);
  EXPECT_EQ(lax.warnings[0], "unresolved nowhere/0 in entry:main");
  opts.strict = true;
  EXPECT_THROW(plan_for(opts), StrictModeError);
}

TEST(PlanExport, DirectorySourceMakesEveryFileAnEntry) {
  TempDir tmp;
  put(tmp / "p/a.pl", "a.\n");
  put(tmp / "p/sub/b.pl", "b.\n");
  put(tmp / "p/notes.txt", "hello\n");
  put(tmp / "p/lib/Index.pl", "% none\n");
  put(tmp / "p/lib/unused.pl", "u.\n");
  ExportOptions opts;
  opts.dest = tmp / "out";
  opts.sources = {tmp / "p"};
  export_tree(opts);
  auto tree = snapshot(tmp / "out");
  EXPECT_EQ(tree.size(), 2u);
  EXPECT_EQ(tree["a.pl"], ":- library_directory( 'lib' ).\na.\n");
  EXPECT_EQ(tree["sub/b.pl"], ":- library_directory( '../lib' ).\nb.\n");
}

TEST(PlanExport, RecursiveCopyMirrorsTree) {
  TempDir tmp;
  put(tmp / "p/a.pl", "a.\n");
  put(tmp / "p/notes.txt", "hello\n");
  put(tmp / "p/data/blob.bin", std::string("\0\1\2", 3));
  put(tmp / "p/lib/unused.pl", "u.\n");
  ExportOptions opts;
  opts.dest = tmp / "out";
  opts.sources = {tmp / "p"};
  opts.copy = CopyMode::recursive;
  export_tree(opts);
  auto tree = snapshot(tmp / "out");
  EXPECT_EQ(tree.size(), 3u);
  EXPECT_EQ(tree["notes.txt"], "hello\n");
  EXPECT_EQ(tree["data/blob.bin"], std::string("\0\1\2", 3));
  EXPECT_EQ(tree["a.pl"], ":- library_directory( 'lib' ).\na.\n");
}

TEST(PlanExport, CollisionBetweenHomeAndLocalFiles) {
  TempDir tmp;
  put(tmp / "home/Index.pl", "index( q, 0, any, user, 'u' ).\n");
  put(tmp / "home/u.pl", "q.\n");
  put(tmp / "p/lib/Index.pl", "index( r, 0, any, user, 'u' ).\n");
  put(tmp / "p/lib/u.pl", "r.\n");
  put(tmp / "p/main.pl", ":- requires([q/0, r/0]).\n");
  ExportOptions opts;
  opts.dest = tmp / "out";
  opts.sources = {tmp / "p/main.pl"};
  opts.homelibs = {tmp / "home"};
  EXPECT_THROW(plan_for(opts), ExportError);
}

TEST(PlanExport, ProjectFilesLoadedByPathAreCopied) {
  TempDir tmp;
  put(tmp / "p/main.pl", ":- consult(util/h).\n");
  put(tmp / "p/util/h.pl", "h.\n");
  put(tmp / "p/util/unused.pl", "x.\n");
  ExportOptions opts;
  opts.dest = tmp / "out";
  opts.sources = {tmp / "p/main.pl"};
  export_tree(opts);
  auto tree = snapshot(tmp / "out");
  EXPECT_EQ(tree.size(), 2u);
  EXPECT_EQ(tree["util/h.pl"], "h.\n");
}

TEST(ApplyPlan, EmptyPlanCreatesDestination) {
  TempDir tmp;
  ExportPlan plan;
  plan.dest = tmp / "fresh";
  ApplyReport report = apply_plan(plan);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(fs::is_directory(tmp / "fresh"));
  EXPECT_TRUE(fs::is_empty(tmp / "fresh"));
}

TEST(ApplyPlan, NowExistingDestinationRefusedWithZeroWrites) {
  TempDir tmp;
  ExportPlan plan = plan_for(example_options(tmp / "out"));
  fs::create_directories(tmp / "out");
  ApplyReport report = apply_plan(plan);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.completed.empty());
  EXPECT_TRUE(fs::is_empty(tmp / "out"));
}

TEST(ApplyPlan, PartialFailureNamesCompletedSteps) {
  TempDir tmp;
  ExportPlan plan = plan_for(example_options(tmp / "out"));
  plan.copies.push_back({tmp / "vanished.pl", "vanished.pl"});
  ApplyReport report = apply_plan(plan);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.completed.size(), 5u);
  EXPECT_TRUE(fs::exists(tmp / "out/file1.pl"));
}

}  // namespace
}  // namespace exlibris
