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

#include "viqa/grammar.h"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "viqa/util.h"

namespace viqa {

RuleTerm RuleTerm::Literal(std::string text) {
  RuleTerm t;
  t.kind = Kind::kLiteral;
  t.literal = std::move(text);
  return t;
}

RuleTerm RuleTerm::Slot(Category category) {
  RuleTerm t;
  t.kind = Kind::kCategory;
  t.category = category;
  return t;
}

RuleTerm RuleTerm::Optional(std::vector<RuleTerm> body) {
  RuleTerm t;
  t.kind = Kind::kOptional;
  t.body = std::move(body);
  return t;
}

RuleTerm RuleTerm::Group(std::vector<RuleTerm> body) {
  RuleTerm t;
  t.kind = Kind::kGroup;
  t.body = std::move(body);
  return t;
}

bool RuleTerm::operator==(const RuleTerm &other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::kLiteral: return literal == other.literal;
    case Kind::kCategory: return category == other.category;
    default: return body == other.body;
  }
}

std::string FamilyOf(std::string_view rule_id) {
  if (rule_id.size() >= 2 &&
      std::islower(static_cast<unsigned char>(rule_id.back())) &&
      std::isdigit(static_cast<unsigned char>(rule_id[rule_id.size() - 2]))) {
    rule_id.remove_suffix(1);
  }
  return std::string(rule_id);
}

namespace {

void RenderTerms(const std::vector<RuleTerm> &terms, std::string *out) {
  bool first = true;
  for (const RuleTerm &t : terms) {
    if (!first) *out += ' ';
    first = false;
    switch (t.kind) {
      case RuleTerm::Kind::kLiteral:
        *out += '"' + t.literal + '"';
        break;
      case RuleTerm::Kind::kCategory:
        *out += '<';
        *out += CategoryName(t.category);
        *out += '>';
        break;
      case RuleTerm::Kind::kOptional:
        *out += '[';
        RenderTerms(t.body, out);
        *out += ']';
        break;
      case RuleTerm::Kind::kGroup:
        *out += '{';
        RenderTerms(t.body, out);
        *out += '}';
        break;
    }
  }
}

// Recursive-descent reader for one rule body.
class BodyReader {
 public:
  BodyReader(std::string_view text, int line) : text_(text), line_(line) {}

  std::vector<RuleTerm> ReadAll() {
    std::vector<RuleTerm> terms = ReadSequence('\0');
    if (terms.empty()) throw LoadError("empty rule body", line_);
    return terms;
  }

 private:
  // Reads terms until `close` (or end of input when close is '\0').
  std::vector<RuleTerm> ReadSequence(char close) {
    std::vector<RuleTerm> terms;
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) {
        if (close != '\0') {
          throw LoadError(std::string("unbalanced '") +
                              (close == ']' ? '[' : '{') + "'",
                          line_);
        }
        return terms;
      }
      char c = text_[pos_];
      if (c == close) {
        ++pos_;
        return terms;
      }
      switch (c) {
        case '<':
          terms.push_back(ReadCategory());
          break;
        case '[':
        case '{': {
          ++pos_;
          std::vector<RuleTerm> body = ReadSequence(c == '[' ? ']' : '}');
          if (body.empty()) {
            throw LoadError(std::string("empty '") + c + "' item", line_);
          }
          terms.push_back(c == '[' ? RuleTerm::Optional(std::move(body))
                                   : RuleTerm::Group(std::move(body)));
          break;
        }
        case ']':
        case '}':
          throw LoadError(std::string("unbalanced '") + c + "'", line_);
        case '"':
          terms.push_back(ReadLiteral());
          break;
        default:
          if (StartsWith("“")) {
            terms.push_back(ReadLiteral());
            break;
          }
          throw LoadError("unexpected character '" + std::string(1, c) + "'",
                          line_);
      }
    }
  }

  RuleTerm ReadCategory() {
    size_t end = text_.find('>', pos_);
    size_t next_open = text_.find_first_of("<[]{}\"", pos_ + 1);
    if (end == std::string_view::npos ||
        (next_open != std::string_view::npos && next_open < end)) {
      throw LoadError("unbalanced '<'", line_);
    }
    std::string_view name = Trim(text_.substr(pos_ + 1, end - pos_ - 1));
    pos_ = end + 1;
    std::optional<Category> category = CategoryFromName(name);
    if (!category) {
      throw LoadError("unknown category '" + std::string(name) + "'", line_);
    }
    return RuleTerm::Slot(*category);
  }

  // "..." or the typographic “...”.
  RuleTerm ReadLiteral() {
    std::string_view close = "\"";
    if (text_[pos_] == '"') {
      ++pos_;
    } else {
      pos_ += std::string_view("“").size();
      close = "”";
    }
    size_t end = text_.find(close, pos_);
    if (end == std::string_view::npos) {
      throw LoadError("unterminated terminal", line_);
    }
    std::string literal(text_.substr(pos_, end - pos_));
    pos_ = end + close.size();
    if (literal.empty()) throw LoadError("empty terminal", line_);
    return RuleTerm::Literal(std::move(literal));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool StartsWith(std::string_view prefix) const {
    return text_.substr(pos_, prefix.size()) == prefix;
  }

  std::string_view text_;
  int line_;
  size_t pos_ = 0;
};

}  // namespace

std::string RenderRule(const SyntacticRule &rule) {
  std::string out = "<" + rule.id + "> = ";
  RenderTerms(rule.terms, &out);
  return out;
}

Grammar Grammar::Parse(std::string_view document) {
  Grammar grammar;
  std::set<std::string, std::less<>> ids;
  int line_no = 0;
  for (std::string_view raw : SplitLines(document)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() != '<') {
      throw LoadError("rule must start with '<ID>'", line_no);
    }
    size_t close = line.find('>');
    if (close == std::string_view::npos) {
      throw LoadError("unbalanced '<' in rule id", line_no);
    }
    std::string id(Trim(line.substr(1, close - 1)));
    if (id.empty()) throw LoadError("empty rule id", line_no);

    std::string_view rest = Trim(line.substr(close + 1));
    if (rest.substr(0, 3) == "::=") {
      rest.remove_prefix(3);
    } else if (!rest.empty() && rest.front() == '=') {
      rest.remove_prefix(1);
    } else {
      throw LoadError("missing '=' after rule id", line_no);
    }

    if (ids.count(id) > 0) {
      throw LoadError("duplicate rule id '" + id + "'", line_no);
    }
    ids.insert(id);

    SyntacticRule rule;
    rule.id = id;
    rule.family = FamilyOf(id);
    rule.terms = BodyReader(rest, line_no).ReadAll();
    grammar.rules_.push_back(std::move(rule));
  }
  return grammar;
}

Grammar Grammar::LoadFile(const std::string &path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const std::runtime_error &) {
    throw LoadError("cannot read grammar file " + path);
  }
  return Parse(text);
}

void Grammar::Extend(const Grammar &other) {
  for (const SyntacticRule &rule : other.rules_) {
    if (Find(rule.id) != nullptr) {
      throw LoadError("duplicate rule id '" + rule.id + "'");
    }
    rules_.push_back(rule);
  }
}

const SyntacticRule *Grammar::Find(std::string_view id) const {
  for (const SyntacticRule &rule : rules_) {
    if (rule.id == id) return &rule;
  }
  return nullptr;
}

std::vector<std::string> Grammar::Families() const {
  std::vector<std::string> families;
  for (const SyntacticRule &rule : rules_) {
    if (std::find(families.begin(), families.end(), rule.family) ==
        families.end()) {
      families.push_back(rule.family);
    }
  }
  return families;
}

std::string Grammar::ToDsl() const {
  std::string out;
  for (const SyntacticRule &rule : rules_) {
    out += RenderRule(rule);
    out += '\n';
  }
  return out;
}

namespace {

// Categories that must have lexicon entries for `category` to be realizable.
std::vector<Category> Requirements(Category category) {
  switch (category) {
    case Category::kTimePhrase:
      return {Category::kPrepTime, Category::kTimePhrase};
    case Category::kOfAuthor:
    case Category::kByAuthor:
      return {category, Category::kAuthor};
    case Category::kByPublisher:
      return {category, Category::kPublisher};
    default:
      return {category};
  }
}

void CollectCategories(const std::vector<RuleTerm> &terms,
                       std::vector<Category> *out) {
  for (const RuleTerm &t : terms) {
    if (t.kind == RuleTerm::Kind::kCategory) {
      bool seen = false;
      for (Category c : *out) seen |= c == t.category;
      if (!seen) out->push_back(t.category);
    } else if (!t.body.empty()) {
      CollectCategories(t.body, out);
    }
  }
}

}  // namespace

std::vector<std::string> Validate(const Grammar &grammar,
                                  const Lexicon &lexicon) {
  std::vector<std::string> diagnostics;
  for (const SyntacticRule &rule : grammar.rules()) {
    std::vector<Category> used;
    CollectCategories(rule.terms, &used);
    for (Category category : used) {
      for (Category needed : Requirements(category)) {
        if (lexicon.Entries(needed).empty()) {
          std::string message = rule.id + ": <" +
                                std::string(CategoryName(category)) + ">";
          if (needed != category) {
            message += " needs <" + std::string(CategoryName(needed)) + ">";
          }
          message += " has no lexicon entries";
          diagnostics.push_back(std::move(message));
        }
      }
    }
    const RuleTerm *last = rule.terms.empty() ? nullptr : &rule.terms.back();
    if (last == nullptr || last->kind != RuleTerm::Kind::kLiteral ||
        last->literal != "?") {
      diagnostics.push_back(rule.id + ": does not end with \"?\"");
    }
  }
  return diagnostics;
}

namespace {

class Sampler {
 public:
  Sampler(const Lexicon &lexicon, uint64_t seed, OptionalPolicy policy)
      : lexicon_(lexicon), rng_(seed), policy_(policy) {}

  void Expand(const std::vector<RuleTerm> &terms) {
    for (const RuleTerm &t : terms) {
      switch (t.kind) {
        case RuleTerm::Kind::kLiteral:
          words_.push_back(t.literal);
          break;
        case RuleTerm::Kind::kCategory:
          Realize(t.category);
          break;
        case RuleTerm::Kind::kOptional:
          if (Present()) Expand(t.body);
          break;
        case RuleTerm::Kind::kGroup: {
          int reps = Repetitions();
          for (int i = 0; i < reps; ++i) Expand(t.body);
          break;
        }
      }
    }
  }

  std::string Sentence() const {
    std::string out;
    for (const std::string &w : words_) {
      if (!out.empty()) out += ' ';
      out += w;
    }
    return out;
  }

 private:
  bool Present() {
    switch (policy_) {
      case OptionalPolicy::kAllPresent: return true;
      case OptionalPolicy::kAllAbsent: return false;
      default: return (rng_() & 1) != 0;
    }
  }

  int Repetitions() {
    switch (policy_) {
      case OptionalPolicy::kAllPresent: return 1;
      case OptionalPolicy::kAllAbsent: return 0;
      default: return static_cast<int>(rng_() % 3);
    }
  }

  size_t Pick(size_t n) { return static_cast<size_t>(rng_() % n); }

  void Word(Category category) {
    const auto &entries = lexicon_.Entries(category);
    if (entries.empty()) {
      throw std::runtime_error("no lexicon entry realizes <" +
                               std::string(CategoryName(category)) + ">");
    }
    words_.push_back(entries[Pick(entries.size())]->surface);
  }

  void Name(EntityKind kind) {
    const auto &names = lexicon_.Names(kind);
    if (names.empty()) {
      throw std::runtime_error("gazetteer " +
                               std::string(EntityKindName(kind)) +
                               " is empty");
    }
    words_.push_back(names[Pick(names.size())]->canonical);
  }

  void Realize(Category category) {
    switch (category) {
      case Category::kAuthor:
        Word(category);
        Name(EntityKind::kAuthor);
        break;
      case Category::kBook:
        Word(category);
        Name(EntityKind::kBook);
        break;
      case Category::kPublisher:
        Word(category);
        Name(EntityKind::kPublisher);
        break;
      case Category::kSubject:
        Word(category);
        Name(EntityKind::kSubject);
        break;
      case Category::kTimePhrase:
        Word(Category::kPrepTime);
        Word(Category::kTimePhrase);
        words_.push_back(std::to_string(1900 + Pick(121)));
        break;
      case Category::kOfAuthor:
      case Category::kByAuthor:
        Word(category);
        Realize(Category::kAuthor);
        break;
      case Category::kByPublisher:
        Word(category);
        Realize(Category::kPublisher);
        break;
      default:
        Word(category);
        break;
    }
  }

  const Lexicon &lexicon_;
  std::mt19937_64 rng_;
  OptionalPolicy policy_;
  std::vector<std::string> words_;
};

}  // namespace

std::string Sample(const Grammar &grammar, std::string_view rule_id,
                   uint64_t seed, const Lexicon &lexicon,
                   OptionalPolicy policy) {
  const SyntacticRule *rule = grammar.Find(rule_id);
  if (rule == nullptr) {
    throw std::invalid_argument("unknown rule '" + std::string(rule_id) + "'");
  }
  Sampler sampler(lexicon, seed, policy);
  sampler.Expand(rule->terms);
  return sampler.Sentence();
}

}  // namespace viqa
