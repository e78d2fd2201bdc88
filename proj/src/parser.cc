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

#include "viqa/parser.h"

#include <functional>
#include <map>

#include "viqa/time.h"
#include "viqa/util.h"

namespace viqa {

namespace {

// Continuation-passing matcher. Each step is given the position after the
// term and a continuation for the rest of the rule; bindings are pushed on
// the way down and popped when a branch fails.
class Matcher {
 public:
  using Cont = std::function<bool(int)>;

  Matcher(const std::vector<Token> &tokens, const Lexicon &lexicon)
      : tokens_(tokens), lexicon_(lexicon),
        size_(static_cast<int>(tokens.size())) {}

  bool Run(const std::vector<RuleTerm> &terms) {
    bindings_.clear();
    return Sequence(terms, 0, 0, [this](int pos) { return pos == size_; });
  }

  std::vector<ConstituentBinding> TakeBindings() {
    return std::move(bindings_);
  }

 private:
  bool Sequence(const std::vector<RuleTerm> &terms, size_t i, int pos,
                const Cont &k) {
    if (i == terms.size()) return k(pos);
    const RuleTerm &term = terms[i];
    Cont rest = [&, i](int p) { return Sequence(terms, i + 1, p, k); };

    switch (term.kind) {
      case RuleTerm::Kind::kLiteral:
        if (pos < size_ && tokens_[pos].IsLiteral(term.literal)) {
          return rest(pos + 1);
        }
        return false;

      case RuleTerm::Kind::kCategory: {
        std::optional<ScannedConstituent> c =
            ScanConstituent(tokens_, pos, term.category, lexicon_);
        if (!c) return false;
        ConstituentBinding b;
        b.category = term.category;
        b.value = c->value;
        b.start = pos;
        b.end = c->next;
        for (int t = pos; t < c->next; ++t) {
          if (t > pos) b.surface += ' ';
          b.surface += tokens_[t].surface;
        }
        bindings_.push_back(std::move(b));
        if (rest(c->next)) return true;
        bindings_.pop_back();
        return false;
      }

      case RuleTerm::Kind::kOptional:
        if (Sequence(term.body, 0, pos, rest)) return true;
        return rest(pos);

      case RuleTerm::Kind::kGroup:
        return Repeat(term, pos, rest);
    }
    return false;
  }

  // Zero or more repetitions of the group body, longest first. A repetition
  // must consume at least one token.
  bool Repeat(const RuleTerm &group, int pos, const Cont &k) {
    Cont again = [&, pos](int p) { return p > pos && Repeat(group, p, k); };
    if (Sequence(group.body, 0, pos, again)) return true;
    return k(pos);
  }

  const std::vector<Token> &tokens_;
  const Lexicon &lexicon_;
  const int size_;
  std::vector<ConstituentBinding> bindings_;
};

}  // namespace

std::vector<const ConstituentBinding *> ParseResult::Bound(
    Category category) const {
  std::vector<const ConstituentBinding *> out;
  for (const ConstituentBinding &b : bindings) {
    if (b.category == category) out.push_back(&b);
  }
  return out;
}

const ConstituentBinding *ParseResult::First(Category category) const {
  for (const ConstituentBinding &b : bindings) {
    if (b.category == category) return &b;
  }
  return nullptr;
}

std::optional<ParseResult> MatchRule(const std::vector<Token> &tokens,
                                     const SyntacticRule &rule,
                                     const Lexicon &lexicon) {
  Matcher matcher(tokens, lexicon);
  if (!matcher.Run(rule.terms)) return std::nullopt;

  ParseResult result;
  result.rule_id = rule.id;
  result.family = rule.family;
  result.bindings = matcher.TakeBindings();
  std::map<Category, int> seen;
  for (ConstituentBinding &b : result.bindings) b.ordinal = seen[b.category]++;
  return result;
}

std::vector<ParseResult> ParseTokens(const std::vector<Token> &tokens,
                                     const Grammar &grammar,
                                     const Lexicon &lexicon) {
  std::vector<ParseResult> results;
  for (const SyntacticRule &rule : grammar.rules()) {
    if (auto parse = MatchRule(tokens, rule, lexicon)) {
      results.push_back(std::move(*parse));
    }
  }
  return results;
}

std::vector<ParseResult> Parse(std::string_view query, const Grammar &grammar,
                               const Lexicon &lexicon) {
  if (Normalize(query).empty()) throw QueryError("blank query");
  return ParseTokens(Tokenize(query, lexicon), grammar, lexicon);
}

std::string FormatValue(const ConstituentValue &value) {
  if (const auto *text = std::get_if<std::string>(&value)) return *text;
  const TimeValue &time = std::get<TimeValue>(value);
  std::optional<TimeRelation> relation = TimeRelationForPrep(time.prep);
  std::string rel = relation ? std::string(TimeRelationName(*relation))
                             : time.prep;
  return "(" + std::to_string(time.year) + "," + rel + ")";
}

std::vector<LabeledConstituent> Constituents(const ParseResult &parse) {
  std::vector<LabeledConstituent> out;
  out.reserve(parse.bindings.size());
  for (const ConstituentBinding &b : parse.bindings) {
    out.push_back({std::string(CategoryName(b.category)), b.surface,
                   FormatValue(b.value)});
  }
  return out;
}

}  // namespace viqa
