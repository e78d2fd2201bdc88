// Copyright 2026 The viqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "testing.h"
#include "viqa/grammar.h"
#include "viqa/lexicon.h"
#include "viqa/parser.h"
#include "viqa/semantics.h"
#include "viqa/time.h"

namespace viqa {
namespace {

using testing::BuiltinGrammar;
using testing::kS1;
using testing::kS2;
using testing::SeedLexicon;

SemanticNode SemanticsOf(const std::string &query) {
  std::vector<ParseResult> parses =
      Parse(query, BuiltinGrammar(), SeedLexicon());
  REQUIRE(!parses.empty());
  return Transform(parses.front());
}

std::vector<ParseResult> Corpus() {
  std::vector<ParseResult> out;
  for (const SyntacticRule &rule : BuiltinGrammar().rules()) {
    for (int seed = 0; seed < 20; ++seed) {
      std::string s = Sample(BuiltinGrammar(), rule.id, 500 + seed,
                             SeedLexicon());
      for (ParseResult &p : Parse(s, BuiltinGrammar(), SeedLexicon())) {
        if (p.rule_id == rule.id) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

TEST_CASE("transform S1") {
  SemanticNode sem = SemanticsOf(kS1);
  CHECK(sem.predicate == "verb_write");
  CHECK(sem.focused);
  REQUIRE(sem.args.size() == 3);
  CHECK(sem.args[0].role == Role::kAuthor);
  CHECK(sem.args[0].value == "A");
  CHECK(sem.args[0].relation == Relation::kSub);
  CHECK(sem.args[1].role == Role::kBook);
  CHECK(sem.args[1].value == "B");
  CHECK(sem.args[1].relation == Relation::kObj);
  CHECK(sem.args[2].kind == Argument::Kind::kTime);
  CHECK(sem.args[2].year == 2008);
  CHECK(sem.args[2].time_relation == TimeRelation::kIn);
  CHECK(sem.args[2].relation == Relation::kTime2);
}

TEST_CASE("transform S2") {
  SemanticNode sem = SemanticsOf(kS2);
  CHECK(sem.predicate == "verb_publish");
  CHECK(!sem.focused);
  REQUIRE(sem.args.size() == 3);
  CHECK(sem.args[0].role == Role::kPublisher);
  CHECK(sem.args[0].focused);
  CHECK(!sem.args[0].value);
  CHECK(sem.args[1].value == "B");
  CHECK(sem.args[2].year == 2009);
}

TEST_CASE("renderers") {
  CHECK(RenderSkeleton(SemanticsOf(kS1)) ==
        "(verb_write? ((author, rel_sub), (book, rel_obj), (APT, rel_time2)))");
  CHECK(RenderSkeleton(SemanticsOf(kS2)) ==
        "(verb_publish ((publisher?, rel_sub), (book, rel_obj), "
        "(APT, rel_time2)))");
  CHECK(RenderSkeleton(SemanticsOf("Tác giả A có viết sách B không?")) ==
        "(verb_write? ((author, rel_sub), (book, rel_obj)))");
  CHECK(RenderFull(SemanticsOf(kS1)) ==
        "(verb_write? ((author=\"A\", rel_sub), (book=\"B\", rel_obj), "
        "(year=2008, rel_time2)))");
  CHECK(RenderFull(SemanticsOf(kS2)) ==
        "(verb_publish ((publisher?, rel_sub), (book=\"B\", rel_obj), "
        "(year=2009, rel_time2)))");
  CHECK(RenderFull(SemanticsOf("Ai đã viết sách Chí Phèo và sách Số Đỏ?")) ==
        "(verb_write ((author?, rel_sub), (book=\"Chí Phèo\", rel_obj), "
        "(book=\"Số Đỏ\", rel_obj)))");
}

TEST_CASE("quotes in values are escaped") {
  SemanticNode node;
  node.predicate = "verb_cost";
  Argument book;
  book.role = Role::kBook;
  book.value = "Say \"hi\"";
  node.args.push_back(book);
  CHECK(RenderFull(node) == "(verb_cost ((book=\"Say \\\"hi\\\"\", rel_sub)))");
}

TEST_CASE("resolve time") {
  CHECK(ResolveTime(TimeValue{"vào", 2008}) ==
        TimeConstraint{2008, TimeRelation::kIn});
  CHECK(ResolveTime(TimeValue{"trước", 2000}) ==
        TimeConstraint{2000, TimeRelation::kBefore});
  CHECK(ResolveTime(TimeValue{"sau", 1999}) ==
        TimeConstraint{1999, TimeRelation::kAfter});
  CHECK(ResolveTime(TimeValue{"trong", 1999}).relation == TimeRelation::kIn);
  try {
    ResolveTime(TimeValue{"khi", 2000});
    FAIL("expected TimeError");
  } catch (const TimeError &e) {
    CHECK(std::string(e.what()).find("khi") != std::string::npos);
  }
  CHECK_THROWS_AS(ResolveTime(TimeValue{"vào", 99}), TimeError);
}

TEST_CASE("resolve time is a bijection on lemma classes") {
  std::set<TimeRelation> seen;
  for (const char *prep : {"trước", "vào", "sau"}) {
    seen.insert(ResolveTime(TimeValue{prep, 2000}).relation);
  }
  CHECK(seen.size() == 3);
  CHECK(ResolveTime(TimeValue{"vào", 2000}).relation ==
        ResolveTime(TimeValue{"trong", 2000}).relation);
  CHECK(RelationFor(TimeRelation::kBefore) == Relation::kTime1);
  CHECK(RelationFor(TimeRelation::kIn) == Relation::kTime2);
  CHECK(RelationFor(TimeRelation::kAfter) == Relation::kTime3);
}

TEST_CASE("classify") {
  QuestionType s1 = Classify(SemanticsOf(kS1));
  CHECK(s1.kind == QuestionType::Kind::kYesNo);
  CHECK(s1.focus_path.empty());

  QuestionType s2 = Classify(SemanticsOf(kS2));
  CHECK(s2.kind == QuestionType::Kind::kWh);
  CHECK(s2.focus_path == std::vector<int>{0});

  SemanticNode q14 = SemanticsOf("Sách B được tác giả A viết vào năm nào?");
  QuestionType t = Classify(q14);
  CHECK(t.kind == QuestionType::Kind::kWh);
  REQUIRE(FocusedArgument(q14) != nullptr);
  CHECK(FocusedArgument(q14)->kind == Argument::Kind::kTime);
  CHECK(RenderSkeleton(q14) ==
        "(verb_write ((author, rel_sub), (book, rel_obj), "
        "(year?, rel_time2)))");

  SemanticNode two = SemanticsOf(kS1);
  two.args[0].focused = true;
  CHECK_THROWS_AS(Classify(two), SemanticError);
}

TEST_CASE("nested focus path") {
  SemanticNode sem =
      SemanticsOf("Sách chủ đề Thiếu Nhi bởi nhà văn Tô Hoài là gì?");
  QuestionType t = Classify(sem);
  CHECK(t.kind == QuestionType::Kind::kWh);
  CHECK(t.focus_path == std::vector<int>{1, 0});
  REQUIRE(FocusedArgument(sem) != nullptr);
  CHECK(FocusedArgument(sem)->role == Role::kBook);
}

TEST_CASE("family specifics") {
  SemanticNode q12 = SemanticsOf(
      "Tác giả Nam Cao là người viết của sách Chí Phèo không?");
  CHECK(RenderFull(q12) ==
        "(verb_be? ((author=\"Nam Cao\", rel_sub), ((verb_possessive "
        "((author=\"Nam Cao\", rel_sub), (book=\"Chí Phèo\", rel_obj))), "
        "rel_obj)))");

  SemanticNode q71 = SemanticsOf("Bao nhiêu cuốn sách trong thư viện?");
  CHECK(RenderFull(q71) ==
        "(verb_have ((source=\"elib\", rel_sub), (book, rel_obj), "
        "(book_amount?, rel_amount)))");

  SemanticNode q52 = SemanticsOf("Nhà xuất bản Kim Đồng nằm ở đâu?");
  CHECK(RenderFull(q52) ==
        "(verb_locate ((publisher=\"Kim Đồng\", rel_sub), "
        "(location?, rel_obj)))");

  SemanticNode q32 = SemanticsOf("Sách Số Đỏ có thuộc chủ đề Văn Học không?");
  CHECK(Classify(q32).kind == QuestionType::Kind::kYesNo);
}

TEST_CASE("transform errors") {
  ParseResult unknown;
  unknown.rule_id = "Q9.9a";
  unknown.family = "Q9.9";
  CHECK_THROWS_AS(Transform(unknown), SemanticError);

  // Q4.1 demands a subject.
  ParseResult missing;
  missing.rule_id = "Q4.1a";
  missing.family = "Q4.1";
  CHECK_THROWS_AS(Transform(missing), SemanticError);
}

TEST_CASE("skeleton table") {
  const SemanticTable &table = SemanticTable::BuiltIn();
  CHECK(table.Families().size() == 19);
  for (const std::string &family : BuiltinGrammar().Families()) {
    REQUIRE(table.Find(family) != nullptr);
    const SkeletonNode &skeleton = *table.Find(family);
    std::string text = RenderSkeletonTable(skeleton);
    CHECK(RenderSkeletonTable(ParseSkeleton(text)) == text);
  }
  CHECK_THROWS_AS(ParseSkeleton("(verb_write ((author, rel_sub)"),
                  SemanticError);
  CHECK_THROWS_AS(ParseSkeleton("(verb_write ((writer, rel_sub)))"),
                  SemanticError);
  CHECK_THROWS_AS(ParseSkeleton("(verb_write ((author, rel_nope)))"),
                  SemanticError);

  SemanticTable custom;
  CHECK_THROWS_AS(
      custom.Register("X", "(verb_write? ((author?, rel_sub)))"),
      SemanticError);
  CHECK_THROWS_AS(custom.Register("X", "(verb_write ((author, rel_sub)))"),
                  SemanticError);
}

TEST_CASE("registered extension family") {
  Grammar grammar = BuiltinGrammar();
  grammar.Extend(Grammar::Parse("<Q8.1a> = <book> <verb_buy> <what_place> "
                                "\"?\"\n"));
  SemanticTable table = SemanticTable::BuiltIn();
  table.Register("Q8.1",
                 "(verb_buy ((book, rel_obj), (location?, rel_loc)))");
  std::vector<ParseResult> parses =
      Parse("Sách Số Đỏ mua ở đâu?", grammar, SeedLexicon());
  REQUIRE(!parses.empty());
  CHECK(parses.front().rule_id == "Q8.1a");
  CHECK(RenderFull(Transform(parses.front(), table)) ==
        "(verb_buy ((book=\"Số Đỏ\", rel_obj), (location?, rel_loc)))");
  CHECK_THROWS_AS(Transform(parses.front()), SemanticError);
}

TEST_CASE("corpus properties") {
  const std::set<Category> wh = {
      Category::kWhatAuthor,  Category::kWhatPublisher, Category::kWhatTime,
      Category::kWhatSubject, Category::kWhatPlace,     Category::kWhatPrice,
      Category::kHowMany};
  const std::set<std::string> erased = {"có", "không", "có phải", "là gì",
                                        "nào", "đã",   "được",    "những",
                                        "các", "và"};
  const std::set<std::string> predicates = {
      "verb_write", "verb_publish", "verb_be",   "verb_possessive",
      "is_of",      "verb_locate",  "verb_cost", "verb_have"};
  int checked = 0;
  for (const ParseResult &parse : Corpus()) {
    SemanticNode sem = Transform(parse);
    ++checked;
    CHECK(CountFocus(sem) == 1);

    bool asks = false;
    for (const ConstituentBinding &b : parse.bindings) {
      asks |= wh.count(b.category) > 0;
    }
    QuestionType type = Classify(sem);
    if (asks) CHECK(type.kind == QuestionType::Kind::kWh);
    if (parse.family == "Q1.3" || parse.family == "Q2.2" ||
        parse.family == "Q3.2") {
      CHECK(type.kind == QuestionType::Kind::kYesNo);
    }

    // No interrogative or auxiliary word survives into the tree.
    std::vector<const SemanticNode *> stack = {&sem};
    while (!stack.empty()) {
      const SemanticNode *node = stack.back();
      stack.pop_back();
      CHECK(predicates.count(node->predicate) == 1);
      for (const Argument &arg : node->args) {
        if (arg.value) CHECK(erased.count(*arg.value) == 0);
        if (arg.kind == Argument::Kind::kTime && arg.year) {
          CHECK(arg.relation != Relation::kTime);
        }
        for (const SemanticNode &n : arg.nested) stack.push_back(&n);
      }
    }
  }
  CHECK(checked >= 57 * 20);
}

}  // namespace
}  // namespace viqa
