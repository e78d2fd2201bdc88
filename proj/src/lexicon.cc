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

#include "viqa/lexicon.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "viqa/util.h"

namespace viqa {

namespace {

constexpr std::array<std::string_view, kNumCategories> kCategoryNames = {
    "what_author",    "what_publisher", "what_time",      "what_subject",
    "what_place",     "what_price",     "author",         "publisher",
    "book",           "subject",        "field",          "book_type",
    "creator",        "price",          "time_phrase",    "prep_time",
    "vperfect",       "vpassive",       "verb_write",     "verb_publish",
    "verb_be",        "verb_have",      "verb_locate",    "verb_buy",
    "verb_cost",      "is_of",          "possessive",     "of_author",
    "by_author",      "by_publisher",   "conjunction",    "plural",
    "how_many",       "in_elib",        "interrogative1", "interrogative2",
    "interrogative3", "interrogative4",
};

constexpr std::array<std::string_view, kNumEntityKinds> kEntityKindNames = {
    "name_author",  "name_book",  "name_publisher",
    "name_subject", "name_field", "name_place",
};

const icu::Normalizer2 &Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *nfc;
}

icu::UnicodeString ToNfc(const icu::UnicodeString &text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString result = Nfc().normalize(text, status);
  if (U_FAILURE(status)) return text;
  return result;
}

std::string ToUtf8(const icu::UnicodeString &text) {
  std::string out;
  text.toUTF8String(out);
  return out;
}

std::string LowerNfc(const icu::UnicodeString &text) {
  icu::UnicodeString lower(text);
  lower.toLower(icu::Locale::getRoot());
  return ToUtf8(ToNfc(lower));
}

bool IsYear(std::string_view s) {
  return s.size() == 4 &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string JoinNormalized(const std::vector<Syllable> &syllables, int begin,
                           int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += syllables[i].normalized;
  }
  return out;
}

std::string JoinOriginal(const std::vector<Syllable> &syllables, int begin,
                         int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += syllables[i].original;
  }
  return out;
}

bool IsLiteralSyllable(const Syllable &s) {
  return s.normalized == "?" || s.normalized == ",";
}

}  // namespace

std::string_view CategoryName(Category category) {
  return kCategoryNames[static_cast<int>(category)];
}

std::optional<Category> CategoryFromName(std::string_view name) {
  for (int i = 0; i < kNumCategories; ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

const std::vector<Category> &AllCategories() {
  static const std::vector<Category> all = [] {
    std::vector<Category> v;
    for (int i = 0; i < kNumCategories; ++i) {
      v.push_back(static_cast<Category>(i));
    }
    return v;
  }();
  return all;
}

std::string_view EntityKindName(EntityKind kind) {
  return kEntityKindNames[static_cast<int>(kind)];
}

std::optional<EntityKind> EntityKindFromName(std::string_view name) {
  for (int i = 0; i < kNumEntityKinds; ++i) {
    if (kEntityKindNames[i] == name) return static_cast<EntityKind>(i);
  }
  return std::nullopt;
}

LoadError::LoadError(const std::string &message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

std::vector<Syllable> Syllabify(std::string_view text) {
  icu::UnicodeString input = ToNfc(icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))));

  std::vector<Syllable> out;
  icu::UnicodeString current;
  auto flush = [&]() {
    if (current.isEmpty()) return;
    out.push_back({ToUtf8(current), LowerNfc(current)});
    current.remove();
  };

  for (int32_t i = 0; i < input.length();) {
    UChar32 c = input.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      flush();
    } else if (c == '?' || c == ',') {
      flush();
      current.append(c);
      flush();
    } else {
      current.append(c);
    }
  }
  flush();
  return out;
}

std::string Normalize(std::string_view text) {
  std::vector<Syllable> syllables = Syllabify(text);
  return JoinNormalized(syllables, 0, static_cast<int>(syllables.size()));
}

std::string FoldCase(std::string_view text) { return Normalize(text); }

Lexicon Lexicon::Load(std::string_view document) {
  Lexicon lexicon;
  int line_no = 0;
  for (std::string_view line : SplitLines(document)) {
    ++line_no;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    std::vector<std::string_view> fields = Split(StripCr(line), '\t');
    if (fields.size() != 3) {
      throw LoadError("expected 3 tab-separated fields, got " +
                          std::to_string(fields.size()),
                      line_no);
    }
    std::string_view label = Trim(fields[0]);
    LexiconEntry entry;
    if (auto category = CategoryFromName(label)) {
      entry.label = *category;
    } else if (auto kind = EntityKindFromName(label)) {
      entry.label = *kind;
    } else {
      throw LoadError("unknown category '" + std::string(label) + "'",
                      line_no);
    }
    entry.surface = Normalize(fields[1]);
    entry.canonical = std::string(Trim(fields[2]));
    if (entry.surface.empty()) {
      throw LoadError("empty surface", line_no);
    }
    if (entry.canonical.empty()) {
      throw LoadError("empty canonical value", line_no);
    }
    lexicon.Add(std::move(entry), line_no);
  }
  lexicon.Index();
  return lexicon;
}

Lexicon Lexicon::LoadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot read lexicon file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Load(buffer.str());
}

Lexicon::Lexicon(const Lexicon &other) : entries_(other.entries_) { Index(); }

Lexicon &Lexicon::operator=(const Lexicon &other) {
  if (this != &other) {
    entries_ = other.entries_;
    Index();
  }
  return *this;
}

void Lexicon::Add(LexiconEntry entry, int line) {
  auto [begin, end] = by_surface_.equal_range(entry.surface);
  for (auto it = begin; it != end; ++it) {
    if (entries_[it->second].label == entry.label) {
      throw LoadError("duplicate entry '" + entry.surface + "'", line);
    }
  }
  by_surface_.emplace(entry.surface, entries_.size());
  entries_.push_back(std::move(entry));
}

void Lexicon::Index() {
  by_surface_.clear();
  by_category_.assign(kNumCategories, {});
  by_kind_.assign(kNumEntityKinds, {});
  max_phrase_length_ = 0;
  for (size_t i = 0; i < entries_.size(); ++i) {
    const LexiconEntry &e = entries_[i];
    by_surface_.emplace(e.surface, i);
    if (const auto *category = std::get_if<Category>(&e.label)) {
      by_category_[static_cast<int>(*category)].push_back(&e);
    } else {
      by_kind_[static_cast<int>(std::get<EntityKind>(e.label))].push_back(&e);
    }
    int length = 1 + static_cast<int>(
                         std::count(e.surface.begin(), e.surface.end(), ' '));
    max_phrase_length_ = std::max(max_phrase_length_, length);
  }
}

std::vector<const LexiconEntry *> Lexicon::Lookup(
    std::string_view surface) const {
  std::vector<const LexiconEntry *> result;
  auto [begin, end] = by_surface_.equal_range(surface);
  for (auto it = begin; it != end; ++it) {
    result.push_back(&entries_[it->second]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

const std::vector<const LexiconEntry *> &Lexicon::Entries(
    Category category) const {
  static const std::vector<const LexiconEntry *> empty;
  if (by_category_.empty()) return empty;
  return by_category_[static_cast<int>(category)];
}

const std::vector<const LexiconEntry *> &Lexicon::Names(
    EntityKind kind) const {
  static const std::vector<const LexiconEntry *> empty;
  if (by_kind_.empty()) return empty;
  return by_kind_[static_cast<int>(kind)];
}

std::optional<std::string> Lexicon::Canonical(Category category,
                                              std::string_view surface) const {
  for (const LexiconEntry *e : Entries(category)) {
    if (e->surface == surface) return e->canonical;
  }
  return std::nullopt;
}

const Reading *Token::Find(Category category) const {
  for (const Reading &r : readings) {
    if (r.kind == Reading::Kind::kWord && r.category == category) return &r;
  }
  return nullptr;
}

const Reading *Token::FindName(EntityKind kind) const {
  for (const Reading &r : readings) {
    if (r.kind == Reading::Kind::kName && r.entity == kind) return &r;
  }
  return nullptr;
}

const Reading *Token::FindYear() const {
  for (const Reading &r : readings) {
    if (r.kind == Reading::Kind::kYear) return &r;
  }
  return nullptr;
}

bool Token::IsLiteral(std::string_view literal) const {
  for (const Reading &r : readings) {
    if (r.kind == Reading::Kind::kLiteral && r.canonical == literal) {
      return true;
    }
  }
  return false;
}

std::vector<Token> Tokenize(std::string_view query, const Lexicon &lexicon) {
  std::vector<Syllable> syl = Syllabify(query);
  const int n = static_cast<int>(syl.size());

  // Length of the longest lexicon phrase starting at i, or 0.
  auto longest_at = [&](int i) {
    int limit = std::min(n - i, lexicon.max_phrase_length());
    for (int len = limit; len > 0; --len) {
      if (!lexicon.Lookup(JoinNormalized(syl, i, i + len)).empty()) return len;
    }
    return 0;
  };

  std::vector<Token> tokens;
  auto make_token = [&](int start, int end) {
    Token t;
    t.surface = JoinOriginal(syl, start, end);
    t.normalized = JoinNormalized(syl, start, end);
    t.start = start;
    t.end = end;
    return t;
  };

  int i = 0;
  while (i < n) {
    if (IsLiteralSyllable(syl[i])) {
      Token t = make_token(i, i + 1);
      t.readings.push_back(
          {Reading::Kind::kLiteral, {}, {}, syl[i].normalized, false});
      tokens.push_back(std::move(t));
      ++i;
      continue;
    }

    if (int len = longest_at(i); len > 0) {
      Token t = make_token(i, i + len);
      for (const LexiconEntry *e : lexicon.Lookup(t.normalized)) {
        Reading r;
        r.canonical = e->canonical;
        if (const auto *category = std::get_if<Category>(&e->label)) {
          r.kind = Reading::Kind::kWord;
          r.category = *category;
        } else {
          r.kind = Reading::Kind::kName;
          r.entity = std::get<EntityKind>(e->label);
          r.gazetteer = true;
        }
        t.readings.push_back(std::move(r));
      }
      tokens.push_back(std::move(t));
      i += len;
      continue;
    }

    // Maximal unknown run: stops at a literal or where a lexicon phrase
    // starts.
    int j = i + 1;
    while (j < n && !IsLiteralSyllable(syl[j]) && longest_at(j) == 0) ++j;
    Token t = make_token(i, j);
    for (int k = 0; k < kNumEntityKinds; ++k) {
      Reading r;
      r.kind = Reading::Kind::kName;
      r.entity = static_cast<EntityKind>(k);
      r.canonical = t.surface;
      t.readings.push_back(std::move(r));
    }
    if (j == i + 1 && IsYear(syl[i].normalized)) {
      t.readings.push_back(
          {Reading::Kind::kYear, {}, {}, syl[i].normalized, false});
    }
    tokens.push_back(std::move(t));
    i = j;
  }
  return tokens;
}

bool IsPhraseCategory(Category category) {
  switch (category) {
    case Category::kAuthor:
    case Category::kPublisher:
    case Category::kBook:
    case Category::kSubject:
    case Category::kTimePhrase:
    case Category::kOfAuthor:
    case Category::kByAuthor:
    case Category::kByPublisher:
      return true;
    default:
      return false;
  }
}

namespace {

// head + name. The name is optional for books ("bao nhiêu cuốn sách").
std::optional<ScannedConstituent> ScanNamed(const std::vector<Token> &tokens,
                                            int at, Category head,
                                            EntityKind kind,
                                            bool name_optional) {
  const int n = static_cast<int>(tokens.size());
  if (at >= n || tokens[at].Find(head) == nullptr) return std::nullopt;
  if (at + 1 < n) {
    if (const Reading *name = tokens[at + 1].FindName(kind)) {
      return ScannedConstituent{name->canonical, at + 2};
    }
  }
  if (name_optional) return ScannedConstituent{std::string(), at + 1};
  return std::nullopt;
}

}  // namespace

std::optional<ScannedConstituent> ScanConstituent(
    const std::vector<Token> &tokens, int at, Category category,
    const Lexicon &lexicon) {
  const int n = static_cast<int>(tokens.size());
  if (at < 0 || at >= n) return std::nullopt;

  switch (category) {
    case Category::kAuthor:
      return ScanNamed(tokens, at, Category::kAuthor, EntityKind::kAuthor,
                       false);
    case Category::kPublisher:
      return ScanNamed(tokens, at, Category::kPublisher,
                       EntityKind::kPublisher, false);
    case Category::kSubject:
      return ScanNamed(tokens, at, Category::kSubject, EntityKind::kSubject,
                       false);
    case Category::kBook:
      return ScanNamed(tokens, at, Category::kBook, EntityKind::kBook, true);
    case Category::kTimePhrase: {
      // prep_time "năm" year
      if (at + 2 >= n) return std::nullopt;
      const Reading *prep = tokens[at].Find(Category::kPrepTime);
      const Reading *head = tokens[at + 1].Find(Category::kTimePhrase);
      const Reading *year = tokens[at + 2].FindYear();
      if (prep == nullptr || head == nullptr || year == nullptr) {
        return std::nullopt;
      }
      return ScannedConstituent{TimeValue{prep->canonical,
                                          std::stoi(year->canonical)},
                                at + 3};
    }
    case Category::kOfAuthor:
    case Category::kByAuthor:
    case Category::kByPublisher: {
      if (tokens[at].Find(category) == nullptr) return std::nullopt;
      Category inner = category == Category::kByPublisher
                           ? Category::kPublisher
                           : Category::kAuthor;
      return ScanConstituent(tokens, at + 1, inner, lexicon);
    }
    default: {
      const Reading *r = tokens[at].Find(category);
      if (r == nullptr) return std::nullopt;
      return ScannedConstituent{r->canonical, at + 1};
    }
  }
}

}  // namespace viqa
