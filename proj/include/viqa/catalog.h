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

// In-memory book catalog and a linear-scan evaluator for semantic
// representations. Every bound argument of the tree is a filter on the same
// record; the focus selects what is reported.

#ifndef VIQA_CATALOG_H_
#define VIQA_CATALOG_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "viqa/semantics.h"

namespace viqa {

struct BookRecord {
  std::string title;
  std::vector<std::string> authors;
  std::string publisher;
  int year = 0;
  std::string subject;
  std::string place;
  std::optional<double> price;
  std::string currency;
};

// Schema violation in a catalog document. The index is the 0-based record
// position, or -1 for document-level errors.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string &message, int index = -1);
  int index() const { return index_; }

 private:
  int index_;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<BookRecord> records);

  // Parses a JSON array of record objects. Throws CatalogError.
  static Catalog Load(std::string_view document);
  static Catalog LoadFile(const std::string &path);

  const std::vector<BookRecord> &records() const { return records_; }
  size_t size() const { return records_.size(); }

 private:
  std::vector<BookRecord> records_;
};

struct Answer {
  enum class Kind { kBoolean, kEntitySet, kCount };

  Kind kind = Kind::kBoolean;
  bool truth = false;                 // kBoolean
  std::vector<std::string> entities;  // kEntitySet, sorted and unique
  long count = 0;                     // kCount

  bool operator==(const Answer &) const = default;
};

// Thrown when a representation cannot be evaluated, e.g. a focused role with
// no record field.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True when the record satisfies every bound argument of the tree.
bool Satisfies(const SemanticNode &sem, const BookRecord &record);

Answer Evaluate(const SemanticNode &sem, const Catalog &catalog);

// "Có." / "Không.", comma-separated values or "Không tìm thấy.", or the count.
std::string FormatAnswer(const Answer &answer, const QuestionType &qtype);

// Display form of a price: "85000 VND", "52000.5 VND".
std::string FormatPrice(double amount, std::string_view currency);

}  // namespace viqa

#endif  // VIQA_CATALOG_H_
