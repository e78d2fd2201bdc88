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

// Text normalization, closed-class vocabulary, gazetteers and the
// longest-match tokenizer that feeds the rule parser.

#ifndef VIQA_LEXICON_H_
#define VIQA_LEXICON_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace viqa {

// Grammar categories. Every nonterminal a syntactic rule may reference.
enum class Category {
  kWhatAuthor,
  kWhatPublisher,
  kWhatTime,
  kWhatSubject,
  kWhatPlace,
  kWhatPrice,
  kAuthor,
  kPublisher,
  kBook,
  kSubject,
  kField,
  kBookType,
  kCreator,
  kPrice,
  kTimePhrase,
  kPrepTime,
  kVPerfect,
  kVPassive,
  kVerbWrite,
  kVerbPublish,
  kVerbBe,
  kVerbHave,
  kVerbLocate,
  kVerbBuy,
  kVerbCost,
  kIsOf,
  kPossessive,
  kOfAuthor,
  kByAuthor,
  kByPublisher,
  kConjunction,
  kPlural,
  kHowMany,
  kInElib,
  kInterrogative1,
  kInterrogative2,
  kInterrogative3,
  kInterrogative4,
};

inline constexpr int kNumCategories = 38;

// Returns the grammar name of a category, e.g. "what_author".
std::string_view CategoryName(Category category);

// Looks up a category by grammar name.
std::optional<Category> CategoryFromName(std::string_view name);

// All categories in declaration order.
const std::vector<Category> &AllCategories();

// Proper-name classes covered by gazetteers.
enum class EntityKind { kAuthor, kBook, kPublisher, kSubject, kField, kPlace };

inline constexpr int kNumEntityKinds = 6;

// Returns the gazetteer label of an entity kind, e.g. "name_author".
std::string_view EntityKindName(EntityKind kind);
std::optional<EntityKind> EntityKindFromName(std::string_view name);

// Error raised while loading a data file. Line numbers are 1-based; 0 means
// the error is not tied to a line.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string &message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

// One lexicon line. The label is either a grammar category or a gazetteer
// kind.
struct LexiconEntry {
  std::variant<Category, EntityKind> label;
  std::string surface;    // normalized, one or more space-separated syllables
  std::string canonical;  // lemma or entity id, original casing
};

// A syllable of the input with its original spelling and normalized form.
struct Syllable {
  std::string original;
  std::string normalized;
};

// Splits text into syllables: NFC composition, whitespace split, "?" and ","
// separated into their own syllables, lowercase normalized form.
std::vector<Syllable> Syllabify(std::string_view text);

// Normalizes a raw query. Idempotent and total.
std::string Normalize(std::string_view text);

// Lowercased NFC form of a single string with collapsed whitespace. Used for
// case-insensitive comparison of entity ids.
std::string FoldCase(std::string_view text);

// Immutable vocabulary: category entries plus gazetteers.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(const Lexicon &other);
  Lexicon &operator=(const Lexicon &other);
  Lexicon(Lexicon &&) = default;
  Lexicon &operator=(Lexicon &&) = default;

  // Parses the tab-separated lexicon format. Throws LoadError.
  static Lexicon Load(std::string_view document);
  static Lexicon LoadFile(const std::string &path);

  // Entries whose surface equals the normalized phrase, in file order.
  std::vector<const LexiconEntry *> Lookup(std::string_view surface) const;

  // Entries of one category, in file order.
  const std::vector<const LexiconEntry *> &Entries(Category category) const;

  // Gazetteer entries of one kind, in file order.
  const std::vector<const LexiconEntry *> &Names(EntityKind kind) const;

  // Canonical value of the (category, surface) entry, if any.
  std::optional<std::string> Canonical(Category category,
                                       std::string_view surface) const;

  // Longest surface length in syllables.
  int max_phrase_length() const { return max_phrase_length_; }

  size_t size() const { return entries_.size(); }
  const std::vector<LexiconEntry> &entries() const { return entries_; }

 private:
  void Add(LexiconEntry entry, int line);
  void Index();

  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, size_t, std::less<>> by_surface_;
  std::vector<std::vector<const LexiconEntry *>> by_category_;
  std::vector<std::vector<const LexiconEntry *>> by_kind_;
  int max_phrase_length_ = 0;
};

// One interpretation of a token span.
struct Reading {
  enum class Kind { kWord, kName, kYear, kLiteral };

  Kind kind = Kind::kWord;
  Category category{};    // kWord
  EntityKind entity{};    // kName
  std::string canonical;  // lemma, entity id, year digits or the literal
  bool gazetteer = false; // kName: listed name rather than unknown-run guess
};

// A token covers syllables [start, end) and carries every reading that
// applies to that span. Readings of a span are ordered by lexicon file
// order, gazetteer names before fallback guesses.
struct Token {
  std::string surface;     // original spelling
  std::string normalized;  // normalized spelling
  int start = 0;
  int end = 0;
  std::vector<Reading> readings;

  const Reading *Find(Category category) const;
  const Reading *FindName(EntityKind kind) const;
  const Reading *FindYear() const;
  bool IsLiteral(std::string_view literal) const;
};

// Longest-match segmentation. Accepts raw or normalized text; surfaces keep
// the original casing. Unknown runs become name candidates of every kind,
// plus a year reading for a single 4-digit syllable.
std::vector<Token> Tokenize(std::string_view query, const Lexicon &lexicon);

// Year and preposition of a time phrase such as "vào năm 2008".
struct TimeValue {
  std::string prep;  // prep_time lemma
  int year = 0;

  bool operator==(const TimeValue &) const = default;
};

// The value of a scanned constituent: an entity id or lemma, or a time value.
using ConstituentValue = std::variant<std::string, TimeValue>;

struct ScannedConstituent {
  ConstituentValue value;
  int next = 0;  // first unconsumed token
};

// True for categories assembled from several tokens (author, book, ...).
bool IsPhraseCategory(Category category);

// Scans one constituent of `category` starting at token `at`. Phrase
// categories follow their template; other categories match one token with a
// reading of that category.
std::optional<ScannedConstituent> ScanConstituent(
    const std::vector<Token> &tokens, int at, Category category,
    const Lexicon &lexicon);

}  // namespace viqa

#endif  // VIQA_LEXICON_H_
