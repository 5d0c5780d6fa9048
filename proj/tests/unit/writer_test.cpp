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

#include "exlibris/writer.hpp"

#include <gtest/gtest.h>

#include "exlibris/reader.hpp"

namespace exlibris {
namespace {

Term A(const char* s) { return Term::atom(s); }
Term I(std::int64_t v) { return Term::integer(v); }
Term C(const char* f, std::vector<Term> args) { return Term::compound(f, std::move(args)); }

TEST(RenderTerm, FunctorIndicatorUsesOperatorNotation) {
  EXPECT_EQ(render_term(C("/", {A("member"), I(2)})), "member/2");
}

TEST(RenderTerm, AtomsQuotedOnlyWhenNeeded) {
  EXPECT_EQ(render_term(A("list/flatten")), "'list/flatten'");
  EXPECT_EQ(render_term(A("lists")), "lists");
  EXPECT_EQ(render_term(A("[]")), "[]");
  EXPECT_EQ(render_term(A("Abc")), "'Abc'");
  EXPECT_EQ(render_term(A("")), "''");
  EXPECT_EQ(render_term(A("it's")), "'it\\'s'");
  EXPECT_EQ(render_term(A("=..")), "=..");
}

TEST(RenderClause, IndexFactHouseStyle) {
  Term fact = C("index", {A("maplist"), I(3), A("any"), A("user"), A("meta/maplist")});
  EXPECT_EQ(render_clause(fact), "index( maplist, 3, any, user, 'meta/maplist' ).");
}

TEST(RenderClause, NestedConditionsStayCompact) {
  Term fact = C("index", {A("flatten"), I(2), C("not", {C("swi", {Term::variable("_")})}),
                          A("user"), A("list/flatten")});
  EXPECT_EQ(render_clause(fact), "index( flatten, 2, not(swi(_)), user, 'list/flatten' ).");
}

TEST(RenderClause, Directive) {
  Term d = C(":-", {C("ensure_loaded", {C("library", {A("lists")})})});
  EXPECT_EQ(render_clause(d), ":- ensure_loaded( library(lists) ).");
}

TEST(RenderTerm, ParenthesisesByPriority) {
  EXPECT_EQ(render_term(C("-", {A("a"), C("-", {A("b"), A("c")})})), "a - (b - c)");
  EXPECT_EQ(render_term(C("-", {C("-", {A("a"), A("b")}), A("c")})), "a - b - c");
  EXPECT_EQ(render_term(C("f", {C(",", {A("a"), A("b")})})), "f((a, b))");
}

TEST(RenderTerm, NegativeNumbersAndMinusCompounds) {
  EXPECT_EQ(render_term(I(-3)), "-3");
  EXPECT_EQ(parse_term(render_term(C("-", {I(3)}))), C("-", {I(3)}));
  EXPECT_EQ(parse_term(render_term(C("-", {A("a"), I(-3)}))), C("-", {A("a"), I(-3)}));
}

TEST(RenderTerm, Lists) {
  EXPECT_EQ(render_term(Term::list({A("a"), I(1)})), "[a,1]");
  EXPECT_EQ(render_term(Term::list({A("a")}, Term::variable("T"))), "[a|T]");
}

}  // namespace
}  // namespace exlibris
