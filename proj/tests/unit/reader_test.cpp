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

#include "exlibris/reader.hpp"

#include <gtest/gtest.h>

#include "exlibris/error.hpp"

namespace exlibris {
namespace {

Term A(const char* s) { return Term::atom(s); }
Term I(std::int64_t v) { return Term::integer(v); }
Term V(const char* s) { return Term::variable(s); }
Term C(const char* f, std::vector<Term> args) { return Term::compound(f, std::move(args)); }

TEST(ReadTerms, RequiresDirective) {
  auto terms = read_terms(":- requires( [member/2] ).");
  ASSERT_EQ(terms.size(), 1u);
  Term expected = C(":-", {C("requires", {Term::list({C("/", {A("member"), I(2)})})})});
  EXPECT_EQ(terms[0].term, expected);
}

TEST(ReadTerms, IndexFactWithAnonymousVariable) {
  auto terms = read_terms("index( member, 2, sicstus(_), lists, lists ).");
  ASSERT_EQ(terms.size(), 1u);
  const Term& t = terms[0].term;
  ASSERT_TRUE(t.is_compound("index", 5));
  EXPECT_EQ(t.arg(2), C("sicstus", {V("_")}));
  EXPECT_EQ(t.arg(4), A("lists"));
}

TEST(ReadTerms, EmptyTextHasNoTerms) { EXPECT_TRUE(read_terms("").empty()); }

TEST(ReadTerms, OnlyCommentsHasNoTerms) {
  EXPECT_TRUE(read_terms("% a\n/* b\n c */\n  % d").empty());
}

TEST(ReadTerms, QuotedAtomKeepsText) {
  auto terms = read_terms("p('meta/maplist', 'it''s', 'a\\nb').");
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].term.arg(0), A("meta/maplist"));
  EXPECT_EQ(terms[0].term.arg(1), A("it's"));
  EXPECT_EQ(terms[0].term.arg(2), A("a\nb"));
}

TEST(ReadTerms, VersionChainIsRightNested) {
  Term t = parse_term("sicstus(3:9:0)");
  EXPECT_EQ(t, C("sicstus", {C(":", {I(3), C(":", {I(9), I(0)})})}));
}

TEST(ReadTerms, OperatorPrecedence) {
  EXPECT_EQ(parse_term("a :- b, c ; d"),
            C(":-", {A("a"), C(";", {C(",", {A("b"), A("c")}), A("d")})}));
  EXPECT_EQ(parse_term("a - b - c"), C("-", {C("-", {A("a"), A("b")}), A("c")}));
  EXPECT_EQ(parse_term("a -> b ; c"), C(";", {C("->", {A("a"), A("b")}), A("c")}));
  EXPECT_EQ(parse_term("not a = b"), C("not", {C("=", {A("a"), A("b")})}));
  EXPECT_EQ(parse_term("X = f(Y)"), C("=", {V("X"), C("f", {V("Y")})}));
}

TEST(ReadTerms, NegativeNumbers) {
  EXPECT_EQ(parse_term("-3"), I(-3));
  EXPECT_EQ(parse_term("- 3"), C("-", {I(3)}));
  EXPECT_EQ(parse_term("-(3)"), C("-", {I(3)}));
  EXPECT_EQ(parse_term("a - 3"), C("-", {A("a"), I(3)}));
  EXPECT_EQ(parse_term("-9223372036854775808"), I(std::numeric_limits<std::int64_t>::min()));
}

TEST(ReadTerms, OperatorsAsAtoms) {
  EXPECT_EQ(parse_term("f(-, +)"), C("f", {A("-"), A("+")}));
  EXPECT_EQ(parse_term("[-]"), Term::list({A("-")}));
  EXPECT_EQ(parse_term("- = x"), C("=", {A("-"), A("x")}));
}

TEST(ReadTerms, ListsWithTail) {
  EXPECT_EQ(parse_term("[a, b|T]"), Term::list({A("a"), A("b")}, V("T")));
  EXPECT_EQ(parse_term("[]"), Term::nil());
  EXPECT_EQ(parse_term("'[]'"), Term::nil());
}

TEST(ReadTerms, ClausesInOrderWithContiguousSpans) {
  std::string text = "p(1).\n% c\np(2) :- q.\n:- r.\n";
  auto terms = read_terms(text);
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].span.line, 1);
  EXPECT_EQ(terms[1].span.line, 3);
  EXPECT_EQ(terms[2].span.line, 4);
  EXPECT_EQ(text.substr(terms[1].span.begin, terms[1].span.end - terms[1].span.begin),
            "p(2) :- q.");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    EXPECT_LE(terms[i - 1].span.end, terms[i].span.begin);
  }
}

TEST(ReadTerms, EndTokenNeedsLayout) {
  auto terms = read_terms("a.%c\nb.");
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[1].term, A("b"));
  EXPECT_THROW(read_terms("a.b.\nc."), SyntaxError);
}

TEST(ReadTerms, SyntaxErrorCarriesPosition) {
  try {
    read_terms("p(a).\nq(b c).", "f.pl");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 5);
    EXPECT_EQ(e.file(), "f.pl");
  }
}

TEST(ReadTerms, UnterminatedQuotedAtomReportedAtOpening) {
  try {
    read_terms("p.\n  q('abc).\n");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(ReadTerms, UnterminatedBlockCommentReportedAtOpening) {
  try {
    read_terms("p.\n /* never closed\n q.\n");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 2);
  }
}

TEST(ReadTerms, RejectsUnsupportedSyntax) {
  EXPECT_THROW(read_terms("p(1.5)."), SyntaxError);
  EXPECT_THROW(read_terms("p({a})."), SyntaxError);
  EXPECT_THROW(read_terms("p(0'a)."), SyntaxError);
  EXPECT_THROW(read_terms("p(a"), SyntaxError);
  EXPECT_THROW(read_terms("p(a)"), SyntaxError);
  EXPECT_THROW(read_terms("p :- :- q."), SyntaxError);
  EXPECT_THROW(read_terms("p(99999999999999999999)."), SyntaxError);
}

TEST(ReadTerms, MissingPeriodAtEndIsAnError) {
  EXPECT_THROW(read_terms("p.\nq"), SyntaxError);
}

}  // namespace
}  // namespace exlibris
