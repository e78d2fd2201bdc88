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

// Restricted parser: a query is accepted by a rule only if the rule's term
// sequence consumes every token. Matching backtracks over optional items
// (present first) and groups (more repetitions first); the first complete
// assignment in that order is the rule's parse.

#ifndef VIQA_PARSER_H_
#define VIQA_PARSER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "viqa/grammar.h"
#include "viqa/lexicon.h"

namespace viqa {

struct ConstituentBinding {
  Category category{};
  ConstituentValue value;
  std::string surface;  // original spelling of the bound span
  int ordinal = 0;      // occurrence index of this category within the parse
  int start = 0;        // token range [start, end)
  int end = 0;

  bool operator==(const ConstituentBinding &) const = default;
};

struct ParseResult {
  std::string rule_id;
  std::string family;
  std::vector<ConstituentBinding> bindings;  // surface order

  bool operator==(const ParseResult &) const = default;

  // Bindings of one category in surface order.
  std::vector<const ConstituentBinding *> Bound(Category category) const;
  const ConstituentBinding *First(Category category) const;
};

// Raised for blank input; a well-formed call that matches no rule returns an
// empty list instead.
class QueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matches all tokens against one rule.
std::optional<ParseResult> MatchRule(const std::vector<Token> &tokens,
                                     const SyntacticRule &rule,
                                     const Lexicon &lexicon);

// Every rule's parse of the tokens, in rule priority order.
std::vector<ParseResult> ParseTokens(const std::vector<Token> &tokens,
                                     const Grammar &grammar,
                                     const Lexicon &lexicon);

// Normalizes, tokenizes and parses a raw query. Throws QueryError when the
// query is blank.
std::vector<ParseResult> Parse(std::string_view query, const Grammar &grammar,
                               const Lexicon &lexicon);

struct LabeledConstituent {
  std::string category;
  std::string surface;
  std::string value;
};

// Display form of a constituent value; time values print as "(2008,in)".
std::string FormatValue(const ConstituentValue &value);

// Bindings projected for display, in surface order.
std::vector<LabeledConstituent> Constituents(const ParseResult &parse);

}  // namespace viqa

#endif  // VIQA_PARSER_H_
