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

#include "viqa/catalog.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "viqa/lexicon.h"
#include "viqa/util.h"

namespace viqa {

namespace {

using json = nlohmann::json;

std::string RequireString(const json &obj, const char *key, int index,
                          bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) {
      throw CatalogError(std::string("missing field '") + key + "'", index);
    }
    return "";
  }
  if (!it->is_string()) {
    throw CatalogError(std::string("field '") + key + "' must be a string",
                       index);
  }
  return it->get<std::string>();
}

BookRecord ParseRecord(const json &obj, int index) {
  if (!obj.is_object()) throw CatalogError("record is not an object", index);
  BookRecord record;
  record.title = RequireString(obj, "title", index, true);
  if (Trim(record.title).empty()) throw CatalogError("empty title", index);

  auto authors = obj.find("authors");
  if (authors == obj.end() || !authors->is_array() || authors->empty()) {
    throw CatalogError("'authors' must be a non-empty array", index);
  }
  for (const json &a : *authors) {
    if (!a.is_string() || Trim(a.get<std::string>()).empty()) {
      throw CatalogError("author names must be non-empty strings", index);
    }
    record.authors.push_back(a.get<std::string>());
  }

  auto year = obj.find("year");
  if (year == obj.end() || !year->is_number_integer()) {
    throw CatalogError("'year' must be an integer", index);
  }
  record.year = year->get<int>();
  if (record.year < 1000 || record.year > 9999) {
    throw CatalogError("'year' must have four digits", index);
  }

  record.publisher = RequireString(obj, "publisher", index, false);
  record.subject = RequireString(obj, "subject", index, false);
  record.place = RequireString(obj, "place", index, false);
  record.currency = RequireString(obj, "currency", index, false);

  auto price = obj.find("price");
  if (price != obj.end()) {
    if (!price->is_number() || price->get<double>() < 0) {
      throw CatalogError("'price' must be a non-negative number", index);
    }
    record.price = price->get<double>();
  }
  return record;
}

bool SameId(std::string_view a, std::string_view b) {
  return !a.empty() && FoldCase(a) == FoldCase(b);
}

bool MatchesEntity(Role role, const std::string &value,
                   const BookRecord &record) {
  switch (role) {
    case Role::kAuthor:
      return std::any_of(
          record.authors.begin(), record.authors.end(),
          [&](const std::string &a) { return SameId(a, value); });
    case Role::kBook:
      return SameId(record.title, value);
    case Role::kPublisher:
      return SameId(record.publisher, value);
    case Role::kSubject:
    case Role::kField:
      return SameId(record.subject, value);
    case Role::kLocation:
      return SameId(record.place, value);
    case Role::kPrice:
      return record.price && FormatPrice(*record.price, record.currency) ==
                                 value;
    case Role::kSource:
      // Every record belongs to the library.
      return true;
  }
  return false;
}

bool MatchesTime(const Argument &arg, int year) {
  switch (arg.time_relation) {
    case TimeRelation::kBefore: return year < *arg.year;
    case TimeRelation::kIn: return year == *arg.year;
    case TimeRelation::kAfter: return year > *arg.year;
  }
  return false;
}

// Values of the focused field on one record.
std::vector<std::string> FocusValues(const Argument &focus,
                                     const BookRecord &record) {
  if (focus.kind == Argument::Kind::kTime) {
    return {std::to_string(record.year)};
  }
  std::vector<std::string> out;
  switch (focus.role) {
    case Role::kAuthor:
      return record.authors;
    case Role::kBook:
      out.push_back(record.title);
      break;
    case Role::kPublisher:
      out.push_back(record.publisher);
      break;
    case Role::kSubject:
    case Role::kField:
      out.push_back(record.subject);
      break;
    case Role::kLocation:
      out.push_back(record.place);
      break;
    case Role::kPrice:
      if (record.price) {
        out.push_back(FormatPrice(*record.price, record.currency));
      }
      break;
    case Role::kSource:
      throw EvaluationError("focused role 'source' has no catalog field");
  }
  out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

}  // namespace

CatalogError::CatalogError(const std::string &message, int index)
    : std::runtime_error(index >= 0
                             ? "record " + std::to_string(index) + ": " +
                                   message
                             : message),
      index_(index) {}

Catalog::Catalog(std::vector<BookRecord> records)
    : records_(std::move(records)) {}

Catalog Catalog::Load(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error &e) {
    throw CatalogError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw CatalogError("top level must be an array");
  std::vector<BookRecord> records;
  records.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    records.push_back(ParseRecord(doc[i], static_cast<int>(i)));
  }
  return Catalog(std::move(records));
}

Catalog Catalog::LoadFile(const std::string &path) {
  return Load(ReadFile(path));
}

bool Satisfies(const SemanticNode &sem, const BookRecord &record) {
  for (const Argument &arg : sem.args) {
    switch (arg.kind) {
      case Argument::Kind::kEntity:
        if (arg.value && !MatchesEntity(arg.role, *arg.value, record)) {
          return false;
        }
        break;
      case Argument::Kind::kTime:
        if (arg.year && !MatchesTime(arg, record.year)) return false;
        break;
      case Argument::Kind::kAmount:
        break;
      case Argument::Kind::kNested:
        for (const SemanticNode &n : arg.nested) {
          if (!Satisfies(n, record)) return false;
        }
        break;
    }
  }
  return true;
}

Answer Evaluate(const SemanticNode &sem, const Catalog &catalog) {
  QuestionType qtype = Classify(sem);
  Answer answer;
  if (qtype.kind == QuestionType::Kind::kYesNo) {
    answer.kind = Answer::Kind::kBoolean;
    for (const BookRecord &r : catalog.records()) {
      if (Satisfies(sem, r)) {
        answer.truth = true;
        break;
      }
    }
    return answer;
  }

  const Argument *focus = FocusedArgument(sem);
  if (focus->kind == Argument::Kind::kAmount) {
    answer.kind = Answer::Kind::kCount;
    for (const BookRecord &r : catalog.records()) {
      if (Satisfies(sem, r)) ++answer.count;
    }
    return answer;
  }
  if (focus->kind == Argument::Kind::kEntity &&
      focus->role == Role::kSource) {
    throw EvaluationError("focused role 'source' has no catalog field");
  }

  answer.kind = Answer::Kind::kEntitySet;
  std::set<std::string> values;
  for (const BookRecord &r : catalog.records()) {
    if (!Satisfies(sem, r)) continue;
    for (std::string &v : FocusValues(*focus, r)) values.insert(std::move(v));
  }
  answer.entities.assign(values.begin(), values.end());
  return answer;
}

std::string FormatAnswer(const Answer &answer,
                         const QuestionType & /*qtype*/) {
  switch (answer.kind) {
    case Answer::Kind::kBoolean:
      return answer.truth ? "Có." : "Không.";
    case Answer::Kind::kCount:
      return std::to_string(answer.count);
    case Answer::Kind::kEntitySet: {
      if (answer.entities.empty()) return "Không tìm thấy.";
      std::string out;
      for (size_t i = 0; i < answer.entities.size(); ++i) {
        if (i > 0) out += ", ";
        out += answer.entities[i];
      }
      return out;
    }
  }
  return "";
}

std::string FormatPrice(double amount, std::string_view currency) {
  std::ostringstream out;
  if (std::floor(amount) == amount && std::fabs(amount) < 1e15) {
    out << static_cast<long long>(amount);
  } else {
    out.precision(15);
    out << amount;
  }
  if (!currency.empty()) out << ' ' << currency;
  return out.str();
}

}  // namespace viqa
