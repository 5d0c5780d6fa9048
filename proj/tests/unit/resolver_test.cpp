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

#include <gtest/gtest.h>

#include "exlibris/error.hpp"
#include "testing.hpp"

namespace exlibris {
namespace {

using testing::fixture;
using testing::put;
using testing::TempDir;

const PlId kSwi{"swi", {5, 0, 7}};
const PlId kSicstus{"sicstus", {3, 9, 0}};

LibrarySet example_libs() {
  return LibrarySet::load({fixture("example/SysLib")}, {fixture("example/HomeLib")},
                          fixture("example/project1/lib"));
}

fs::path file1() { return fixture("example/project1/file1.pl"); }

std::set<std::pair<std::string, std::string>> home(std::initializer_list<const char*> files) {
  std::set<std::pair<std::string, std::string>> out;
  for (const char* f : files) out.insert({fixture("example/HomeLib").string(), f});
  return out;
}

TEST(ResolveFunctor, ExampleExamples) {
  LibrarySet libs = example_libs();
  ResolvedTarget flatten_swi = resolve_functor({"flatten", 2}, kSwi, libs);
  EXPECT_EQ(flatten_swi.kind, ResolvedTarget::Kind::built_in);
  EXPECT_EQ(flatten_swi.file, "compat/swi/built_ins");

  ResolvedTarget flatten_sics = resolve_functor({"flatten", 2}, kSicstus, libs);
  EXPECT_EQ(flatten_sics.kind, ResolvedTarget::Kind::load_file);
  EXPECT_EQ(flatten_sics.library, LibraryKind::home);
  EXPECT_EQ(flatten_sics.file, "list/flatten");

  ResolvedTarget member_sics = resolve_functor({"member", 2}, kSicstus, libs);
  EXPECT_EQ(member_sics.library, LibraryKind::system);
  EXPECT_EQ(member_sics.file, "lists");
  EXPECT_EQ(member_sics.str(), "load system lists");

  for (const PlId& e : {kSwi, kSicstus}) {
    ResolvedTarget maplist = resolve_functor({"maplist", 3}, e, libs);
    EXPECT_EQ(maplist.library, LibraryKind::local);
    EXPECT_EQ(maplist.file, "meta/maplist");
  }
  EXPECT_TRUE(resolve_functor({"nope", 1}, kSwi, libs).is_unresolved());
  EXPECT_TRUE(resolve_functor({"member", 2}, PlId{"yap", {4}}, libs).is_unresolved());
}

TEST(ResolveFunctor, MissingFileIsUnresolved) {
  TempDir tmp;
  put(tmp / "lib/Index.pl", "index( p, 0, any, user, gone ).\n");
  LibrarySet libs = LibrarySet::load({}, {tmp / "lib"}, std::nullopt);
  EXPECT_TRUE(resolve_functor({"p", 0}, kSwi, libs).is_unresolved());
}

TEST(LibrarySet, SearchOrderAndDisjointness) {
  LibrarySet libs = example_libs();
  auto order = libs.search_order();
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0]->kind, LibraryKind::local);
  EXPECT_EQ(order[1]->kind, LibraryKind::system);
  EXPECT_EQ(order[2]->kind, LibraryKind::home);
  EXPECT_THROW(LibrarySet::load({fixture("example/HomeLib")}, {fixture("example/HomeLib/")},
                                std::nullopt),
               Error);
  EXPECT_THROW(LibrarySet::load({fixture("nowhere")}, {}, std::nullopt), IoError);
}

TEST(Closure, BothEngines) {
  DepClosure c = closure({file1()}, example_libs(), EngineSelection::of({kSwi, kSicstus}));
  EXPECT_EQ(c.home_files, home({"list/flatten", "compat/swi/built_ins"}));
  EXPECT_TRUE(c.local_files.count("meta/maplist"));
  EXPECT_TRUE(c.unresolved.empty());
  EXPECT_EQ(c.resolutions.size(), 6u);
}

TEST(Closure, SicstusOnly) {
  DepClosure c = closure({file1()}, example_libs(), EngineSelection::of({kSicstus}));
  EXPECT_EQ(c.home_files, home({"list/flatten"}));
}

TEST(Closure, SwiOnly) {
  DepClosure c = closure({file1()}, example_libs(), EngineSelection::of({kSwi}));
  EXPECT_EQ(c.home_files, home({"compat/swi/built_ins"}));
}

TEST(Closure, AllEnginesCoversEveryCandidate) {
  DepClosure c = closure({file1()}, example_libs(), EngineSelection::all());
  EXPECT_EQ(c.home_files, home({"list/flatten", "compat/swi/built_ins"}));
  auto member = c.resolutions.at({{"member", 2}, std::nullopt});
  EXPECT_EQ(member.size(), 2u);
}

TEST(Closure, NoDirectives) {
  TempDir tmp;
  put(tmp / "main.pl", "main :- true.\n");
  DepClosure c = closure({tmp / "main.pl"}, example_libs(), EngineSelection::of({kSwi}));
  EXPECT_TRUE(c.home_files.empty());
  EXPECT_TRUE(c.unresolved.empty());
}

TEST(Closure, FollowsGuardedLoadsAndMayLoadTransitively) {
  TempDir tmp;
  put(tmp / "home/a.pl", ":- may_load(b).\n");
  put(tmp / "home/b.pl", ":- requires(c/0).\n");
  put(tmp / "home/c.pl", ":- defines([c/0]).\n");
  put(tmp / "home/y.pl", "y.\n");
  put(tmp / "proj/main.pl",
      ":- if_pl(swi(_), ensure_loaded(library(a))).\n"
      ":- if_pl(yap(_), ensure_loaded(library(y))).\n"
      ":- requires(missing/3).\n");
  LibrarySet libs = LibrarySet::load({}, {tmp / "home"}, std::nullopt);
  DepClosure c = closure({tmp / "proj/main.pl"}, libs, EngineSelection::of({kSwi}));
  std::set<std::string> files;
  for (const auto& [root, f] : c.home_files) files.insert(f);
  EXPECT_EQ(files, (std::set<std::string>{"a", "b", "c"}));
  ASSERT_EQ(c.unresolved.size(), 1u);
  EXPECT_EQ(c.unresolved.begin()->functor, (FunctorRef{"missing", 3}));
  EXPECT_EQ(c.unresolved.begin()->file, "entry:main");
}

TEST(Closure, DanglingReferencesRecorded) {
  TempDir tmp;
  put(tmp / "main.pl", ":- ensure_loaded(library(nowhere)).\n:- consult(gone).\n");
  LibrarySet libs = LibrarySet::load({}, {}, std::nullopt);
  DepClosure c = closure({tmp / "main.pl"}, libs, EngineSelection::all());
  EXPECT_EQ(c.dangling.size(), 2u);
}

TEST(Closure, ProjectFilesByRelativePath) {
  TempDir tmp;
  put(tmp / "main.pl", ":- consult(util/helpers).\n");
  put(tmp / "util/helpers.pl", ":- consult('../main').\n");
  LibrarySet libs = LibrarySet::load({}, {}, std::nullopt);
  DepClosure c = closure({tmp / "main.pl"}, libs, EngineSelection::all());
  EXPECT_EQ(c.project_files.size(), 1u);
  EXPECT_TRUE(c.nodes.count("project:util/helpers"));
  EXPECT_TRUE(c.edges.count({"project:util/helpers", "entry:main", "consult ../main"}));
}

TEST(Trace, ExampleSwi) {
  EXPECT_EQ(trace(file1(), kSwi, example_libs()),
            (std::vector<std::string>{
                "requires member/2: built-in home compat/swi/built_ins",
                "requires maplist/3: load local meta/maplist",
                "requires flatten/2: built-in home compat/swi/built_ins",
            }));
}

TEST(Trace, ExampleSicstus) {
  EXPECT_EQ(trace(file1(), kSicstus, example_libs()),
            (std::vector<std::string>{
                "requires member/2: load system lists",
                "requires maplist/3: load local meta/maplist",
                "requires flatten/2: load home list/flatten",
            }));
}

TEST(Trace, SelfLoadIsACycle) {
  TempDir tmp;
  put(tmp / "self.pl", ":- may_load(self).\n");
  LibrarySet libs = LibrarySet::load({}, {}, std::nullopt);
  EXPECT_EQ(trace(tmp / "self.pl", kSwi, libs),
            (std::vector<std::string>{"may_load self: load project self (cycle)"}));
}

TEST(Trace, NestedDecisions) {
  TempDir tmp;
  put(tmp / "home/a.pl", ":- requires(b/0).\n:- ensure_loaded(library(a)).\n");
  put(tmp / "home/b.pl", ":- defines([b/0]).\n");
  put(tmp / "main.pl",
      ":- if_pl(yap(_), consult(y)).\n"
      ":- use_module(library(a)).\n"
      ":- requires([b/0, zz/1]).\n");
  LibrarySet libs = LibrarySet::load({}, {tmp / "home"}, std::nullopt);
  EXPECT_EQ(trace(tmp / "main.pl", kSwi, libs),
            (std::vector<std::string>{
                "consult y: skip (guard yap(_) failed)",
                "use_module library(a): load home a",
                "  requires b/0: load home b",
                "  ensure_loaded library(a): load home a (cycle)",
                "requires b/0: load home b (already loaded)",
                "requires zz/1: unresolved",
            }));
}

TEST(FormatDot, ExampleGraph) {
  DepClosure c = closure({file1()}, example_libs(), EngineSelection::of({kSicstus}));
  EXPECT_EQ(format_dot(c),
            "digraph exlibris {\n"
            "  \"entry:file1\";\n"
            "  \"home:list/flatten\";\n"
            "  \"local:meta/maplist\";\n"
            "  \"system:lists\";\n"
            "  \"entry:file1\" -> \"home:list/flatten\" [label=\"requires flatten/2 if "
            "not(swi(_))\"];\n"
            "  \"entry:file1\" -> \"local:meta/maplist\" [label=\"requires maplist/3\"];\n"
            "  \"entry:file1\" -> \"system:lists\" [label=\"requires member/2 if sicstus(_)\"];\n"
            "}\n");
}

}  // namespace
}  // namespace exlibris
