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

// Syntactic rules as data. A rule is a flat pattern over category slots with
// optional [..] and zero-or-more {..} groups and quoted terminals:
//
//   <Q1.3a> = [<interrogative3>] <author> ... <book> {[<conjunction>] <book>}
//             [<time_phrase>] [<interrogative2>] "?"
//
// File order is priority order.

#ifndef VIQA_GRAMMAR_H_
#define VIQA_GRAMMAR_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "viqa/lexicon.h"

namespace viqa {

struct RuleTerm {
  enum class Kind { kLiteral, kCategory, kOptional, kGroup };

  Kind kind = Kind::kLiteral;
  std::string literal;          // kLiteral
  Category category{};          // kCategory
  std::vector<RuleTerm> body;   // kOptional (zero or one), kGroup (zero+)

  static RuleTerm Literal(std::string text);
  static RuleTerm Slot(Category category);
  static RuleTerm Optional(std::vector<RuleTerm> body);
  static RuleTerm Group(std::vector<RuleTerm> body);

  bool operator==(const RuleTerm &other) const;
};

struct SyntacticRule {
  std::string id;      // e.g. Q1.3a
  std::string family;  // e.g. Q1.3
  std::vector<RuleTerm> terms;

  bool operator==(const SyntacticRule &other) const = default;
};

// Family of a rule id: the id without its trailing variant letter.
std::string FamilyOf(std::string_view rule_id);

// Renders one rule as a DSL line.
std::string RenderRule(const SyntacticRule &rule);

class Grammar {
 public:
  Grammar() = default;

  // Parses the rule DSL. Throws LoadError with the offending line number.
  static Grammar Parse(std::string_view document);
  static Grammar LoadFile(const std::string &path);

  // Appends the rules of `other` after the existing ones. Throws LoadError on
  // a duplicate rule id.
  void Extend(const Grammar &other);

  const std::vector<SyntacticRule> &rules() const { return rules_; }
  const SyntacticRule *Find(std::string_view id) const;

  // Distinct families in first-appearance order.
  std::vector<std::string> Families() const;

  // DSL text that parses back to an identical grammar.
  std::string ToDsl() const;

  bool operator==(const Grammar &other) const = default;

 private:
  std::vector<SyntacticRule> rules_;
};

// Checks every rule against the lexicon. Returns one message per problem:
// a referenced category with nothing to realize it, or a rule that does not
// end in "?". Empty means the grammar is usable with this lexicon.
std::vector<std::string> Validate(const Grammar &grammar,
                                  const Lexicon &lexicon);

enum class OptionalPolicy { kRandom, kAllPresent, kAllAbsent };

// Generates a sentence from one rule. Under kRandom each optional item is
// present with probability 1/2 and each group repeats 0-2 times; the other
// policies force optionals on (groups once) or off (groups zero times).
// Deterministic for a fixed seed. Throws std::invalid_argument for an unknown
// rule and std::runtime_error when a category cannot be realized.
std::string Sample(const Grammar &grammar, std::string_view rule_id,
                   uint64_t seed, const Lexicon &lexicon,
                   OptionalPolicy policy = OptionalPolicy::kRandom);

}  // namespace viqa

#endif  // VIQA_GRAMMAR_H_
