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

// Verb-centered semantic representation of a parsed question.
//
// A node is a predicate with (argument, relation) pairs; an argument is an
// entity, a time constraint, an amount or a nested node. Exactly one element
// of the tree carries the focus mark "?": the predicate for yes/no questions,
// otherwise the asked-for argument. For example
//
//   (verb_write? ((author, rel_sub), (book, rel_obj), (APT, rel_time2)))
//
// Each rule family maps to one skeleton in a data table; transformation
// instantiates the skeleton with the parse's constituents.

#ifndef VIQA_SEMANTICS_H_
#define VIQA_SEMANTICS_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "viqa/parser.h"
#include "viqa/time.h"

namespace viqa {

enum class Relation {
  kSub,      // rel_sub
  kObj,      // rel_obj
  kTime1,    // rel_time1, before
  kTime2,    // rel_time2, in
  kTime3,    // rel_time3, after
  kTime,     // rel_time, unresolved; skeleton tables only
  kLoc,      // rel_loc
  kAmount,   // rel_amount
};

std::string_view RelationName(Relation relation);
std::optional<Relation> RelationFromName(std::string_view name);
Relation RelationFor(TimeRelation time);

enum class Role {
  kAuthor,
  kBook,
  kPublisher,
  kSubject,
  kField,
  kPrice,
  kLocation,
  kSource,
};

std::string_view RoleName(Role role);
std::optional<Role> RoleFromName(std::string_view name);

struct SemanticNode;

struct Argument {
  enum class Kind { kEntity, kTime, kAmount, kNested };

  Kind kind = Kind::kEntity;
  Relation relation = Relation::kSub;
  bool focused = false;

  // kEntity. An unbound, unfocused entity is an existential slot ("some
  // book") that constrains nothing.
  Role role = Role::kAuthor;
  std::optional<std::string> value;

  // kTime. The year is unbound when the time itself is asked for.
  TimeRelation time_relation = TimeRelation::kIn;
  std::optional<int> year;

  // kNested: exactly one element.
  std::vector<SemanticNode> nested;

  bool operator==(const Argument &other) const;
};

struct SemanticNode {
  std::string predicate;
  bool focused = false;
  std::vector<Argument> args;

  bool operator==(const SemanticNode &other) const = default;
};

class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One row of the family table, parsed from its text form. Optional
// arguments are written in square brackets.
struct SkeletonNode;

struct SkeletonArg {
  std::string label;  // role, time label (year, time_phrase, APT) or
                      // book_amount; empty for nested nodes
  Relation relation = Relation::kSub;
  bool focused = false;
  bool optional = false;
  std::vector<SkeletonNode> nested;
};

struct SkeletonNode {
  std::string predicate;
  bool focused = false;
  std::vector<SkeletonArg> args;
};

// Parses skeleton text such as
//   (verb_write? ((author, rel_sub), (book, rel_obj),
//                 [(time_phrase, rel_time)]))
// Throws SemanticError on malformed text or an unknown label.
SkeletonNode ParseSkeleton(std::string_view text);

// Renders a skeleton back to text, optional arguments in brackets.
std::string RenderSkeletonTable(const SkeletonNode &skeleton);

// Family -> skeleton table.
class SemanticTable {
 public:
  // The 19 built-in families Q1.1 ... Q7.3.
  static const SemanticTable &BuiltIn();

  // Adds or replaces a family's skeleton. Throws SemanticError when the text
  // does not parse or does not carry exactly one focus mark.
  void Register(const std::string &family, std::string_view skeleton_text);

  const SkeletonNode *Find(std::string_view family) const;
  std::vector<std::string> Families() const;

 private:
  std::map<std::string, SkeletonNode, std::less<>> skeletons_;
};

// Instantiates the family skeleton with the parse's bindings. Throws
// SemanticError for an unregistered family or a missing mandatory
// constituent, TimeError for an unknown time preposition.
SemanticNode Transform(const ParseResult &parse,
                       const SemanticTable &table = SemanticTable::BuiltIn());

// Resolves a parsed time value: trước -> before, vào/trong -> in,
// sau -> after.
TimeConstraint ResolveTime(const TimeValue &value);

struct QuestionType {
  enum class Kind { kWh, kYesNo };

  Kind kind = Kind::kYesNo;
  std::vector<int> focus_path;  // argument indices from the root; empty for
                                // yes/no

  bool operator==(const QuestionType &) const = default;
};

// Classifies by focus position. Throws SemanticError when the tree does not
// carry exactly one focus mark.
QuestionType Classify(const SemanticNode &sem);

// The focused argument, or nullptr for yes/no questions.
const Argument *FocusedArgument(const SemanticNode &sem);

// Number of focus marks in the tree.
int CountFocus(const SemanticNode &sem);

// Role names only: "(verb_write? ((author, rel_sub), (book, rel_obj),
// (APT, rel_time2)))".
std::string RenderSkeleton(const SemanticNode &sem);

// Instantiated form: author="A", year=2008, unbound focused slots as role?.
std::string RenderFull(const SemanticNode &sem);

}  // namespace viqa

#endif  // VIQA_SEMANTICS_H_
