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

#include <random>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.h"
#include "testing.h"
#include "viqa/catalog.h"
#include "viqa/parser.h"
#include "viqa/semantics.h"

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

BookRecord Record(std::string title, std::string author, std::string publisher,
                  int year) {
  BookRecord r;
  r.title = std::move(title);
  r.authors = {std::move(author)};
  r.publisher = std::move(publisher);
  r.year = year;
  return r;
}

int ErrorIndex(const std::string &document) {
  try {
    Catalog::Load(document);
  } catch (const CatalogError &e) {
    return e.index();
  }
  return -2;
}

TEST_CASE("load catalog") {
  Catalog c = Catalog::Load(R"([
    {"title": "B", "authors": ["A"], "publisher": "P", "year": 2008,
     "subject": "T", "place": "Huế", "price": 1000, "currency": "VND"},
    {"title": "C", "authors": ["A", "D"], "year": 1990},
    {"title": "E", "authors": ["F"], "year": 2001, "price": 2.5}
  ])");
  REQUIRE(c.size() == 3);
  CHECK(c.records()[1].authors.size() == 2);
  CHECK(!c.records()[1].price);
  CHECK(c.records()[2].price == 2.5);
  CHECK(Catalog::Load("[]").size() == 0);
  CHECK(Catalog::LoadFile(testing::DataPath("catalog_sample.json")).size() ==
        7);
}

TEST_CASE("catalog schema errors name the record") {
  CHECK(ErrorIndex(R"([{"title": "B", "authors": ["A"], "year": 2008},
                       {"authors": ["A"], "year": 2008}])") == 1);
  CHECK(ErrorIndex(R"([{"title": "", "authors": ["A"], "year": 2008}])") ==
        0);
  CHECK(ErrorIndex(R"([{"title": "B", "authors": [], "year": 2008}])") == 0);
  CHECK(ErrorIndex(R"([{"title": "B", "authors": ["A"], "year": 208}])") ==
        0);
  CHECK(ErrorIndex(R"([{"title": "B", "authors": ["A"], "year": "2008"}])") ==
        0);
  CHECK(ErrorIndex(
            R"([{"title": "B", "authors": ["A"], "year": 2008, "price": -1}])")
        == 0);
  CHECK(ErrorIndex(R"([1])") == 0);
  CHECK(ErrorIndex(R"({"title": "B"})") == -1);
  CHECK(ErrorIndex("[") == -1);
}

TEST_CASE("evaluate examples") {
  Catalog one({Record("B", "A", "P", 2008)});
  Answer s1 = Evaluate(SemanticsOf(kS1), one);
  CHECK(s1.kind == Answer::Kind::kBoolean);
  CHECK(s1.truth);

  Catalog publishers({Record("B", "A", "P", 2009), Record("B", "A", "Q", 2008),
                      Record("C", "A", "R", 2009)});
  Answer s2 = Evaluate(SemanticsOf(kS2), publishers);
  CHECK(s2.kind == Answer::Kind::kEntitySet);
  CHECK(s2.entities == std::vector<std::string>{"P"});

  Catalog empty;
  CHECK(!Evaluate(SemanticsOf(kS1), empty).truth);
  CHECK(Evaluate(SemanticsOf(kS2), empty).entities.empty());
  Answer count =
      Evaluate(SemanticsOf("Bao nhiêu cuốn sách trong thư viện?"), empty);
  CHECK(count.kind == Answer::Kind::kCount);
  CHECK(count.count == 0);
}

TEST_CASE("matching ignores case") {
  Catalog c({Record("Số Đỏ", "Vũ Trọng Phụng", "Văn Học", 1936)});
  CHECK(Evaluate(SemanticsOf("Tác giả vũ trọng phụng có viết sách SỐ ĐỎ "
                             "không?"),
                 c)
            .truth);
}

TEST_CASE("time relations filter years") {
  Catalog c({Record("B", "A", "P", 1990), Record("B", "A", "Q", 2000),
             Record("B", "A", "R", 2010)});
  auto publishers = [&](const std::string &prep) {
    return Evaluate(SemanticsOf("Nhà xuất bản nào đã xuất bản sách B " + prep +
                                " năm 2000?"),
                    c)
        .entities;
  };
  CHECK(publishers("trước") == std::vector<std::string>{"P"});
  CHECK(publishers("vào") == std::vector<std::string>{"Q"});
  CHECK(publishers("sau") == std::vector<std::string>{"R"});
}

TEST_CASE("focus fields") {
  Catalog c = Catalog::LoadFile(testing::DataPath("catalog_sample.json"));
  CHECK(FormatAnswer(Evaluate(SemanticsOf("Giá cuốn sách Tắt Đèn?"), c), {}) ==
        "52000.5 VND");
  CHECK(Evaluate(SemanticsOf("Sách Chí Phèo được tác giả Nam Cao viết vào năm "
                             "nào?"),
                 c)
            .entities == std::vector<std::string>{"1941"});
  CHECK(Evaluate(SemanticsOf("Nhà xuất bản Trẻ nằm ở đâu?"), c).entities ==
        std::vector<std::string>{"Huế"});
  CHECK(Evaluate(SemanticsOf("Ai đã viết sách B?"), c).entities ==
        std::vector<std::string>{"A"});
  CHECK(Evaluate(SemanticsOf("Tác giả A viết bao nhiêu cuốn sách?"), c)
            .count == 2);
}

TEST_CASE("source focus cannot be evaluated") {
  SemanticNode node;
  node.predicate = "verb_have";
  Argument source;
  source.role = Role::kSource;
  source.focused = true;
  node.args.push_back(source);
  CHECK_THROWS_AS(Evaluate(node, Catalog({Record("B", "A", "P", 2000)})),
                  EvaluationError);
}

TEST_CASE("format answer") {
  Answer yes;
  yes.truth = true;
  CHECK(FormatAnswer(yes, {QuestionType::Kind::kYesNo, {}}) == "Có.");
  Answer no;
  CHECK(FormatAnswer(no, {QuestionType::Kind::kYesNo, {}}) == "Không.");
  Answer none;
  none.kind = Answer::Kind::kEntitySet;
  CHECK(FormatAnswer(none, {QuestionType::Kind::kWh, {0}}) ==
        "Không tìm thấy.");
  Answer two = none;
  two.entities = {"Kim Đồng", "P"};
  CHECK(FormatAnswer(two, {QuestionType::Kind::kWh, {0}}) == "Kim Đồng, P");
  Answer three;
  three.kind = Answer::Kind::kCount;
  three.count = 3;
  CHECK(FormatAnswer(three, {QuestionType::Kind::kWh, {2}}) == "3");
  CHECK(FormatPrice(85000, "VND") == "85000 VND");
  CHECK(FormatPrice(2.5, "") == "2.5");
}

TEST_CASE("agrees with the linear-scan oracle and is monotone") {
  Catalog shipped = Catalog::LoadFile(testing::DataPath("catalog_sample.json"));
  std::mt19937_64 rng(3);
  int compared = 0;
  for (const SyntacticRule &rule : BuiltinGrammar().rules()) {
    for (int seed = 0; seed < 4; ++seed) {
      std::string s = Sample(BuiltinGrammar(), rule.id, seed, SeedLexicon());
      std::vector<ParseResult> parses =
          Parse(s, BuiltinGrammar(), SeedLexicon());
      REQUIRE(!parses.empty());
      SemanticNode sem = Transform(parses.front());
      std::vector<BookRecord> records = shipped.records();
      records.erase(records.begin() + rng() % records.size());
      Answer before = Evaluate(sem, Catalog(records));
      CHECK(before == testing::OracleEvaluate(sem, records));
      records.push_back(shipped.records()[rng() % shipped.size()]);
      Answer after = Evaluate(sem, Catalog(records));
      CHECK(after == testing::OracleEvaluate(sem, records));
      if (before.kind == Answer::Kind::kBoolean) {
        CHECK((!before.truth || after.truth));
      }
      CHECK(after.count >= before.count);
      CHECK(std::includes(after.entities.begin(), after.entities.end(),
                          before.entities.begin(), before.entities.end()));
      ++compared;
    }
  }
  CHECK(compared == 57 * 4);
}

}  // namespace
}  // namespace viqa
