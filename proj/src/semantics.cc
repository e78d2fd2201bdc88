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

#include "viqa/semantics.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace viqa {

namespace {

constexpr std::array<std::string_view, 8> kRelationNames = {
    "rel_sub", "rel_obj", "rel_time1", "rel_time2",
    "rel_time3", "rel_time", "rel_loc", "rel_amount",
};

constexpr std::array<std::string_view, 8> kRoleNames = {
    "author", "book", "publisher", "subject",
    "field", "price", "location", "source",
};

// Built-in family table. Optional arguments are bracketed; they appear in an
// instance only when the parse bound the matching constituent.
constexpr std::pair<std::string_view, std::string_view> kBuiltinSkeletons[] = {
    {"Q1.1",
     "(verb_write ((author?, rel_sub), (book, rel_obj), [(year, rel_time2)]))"},
    {"Q1.2",
     "(verb_be? ((author, rel_sub), ((verb_possessive ((author, rel_sub), "
     "(book, rel_obj))), rel_obj)))"},
    {"Q1.3",
     "(verb_write? ((author, rel_sub), (book, rel_obj), "
     "[(time_phrase, rel_time)]))"},
    {"Q1.4",
     "(verb_write ((author, rel_sub), (book, rel_obj), (year?, rel_time2)))"},
    {"Q2.1",
     "(verb_publish ((publisher?, rel_sub), (book, rel_obj), "
     "[(year, rel_time2)]))"},
    {"Q2.2",
     "(verb_publish? ((publisher, rel_sub), (book, rel_obj), "
     "[(time_phrase, rel_time)]))"},
    {"Q2.3",
     "(verb_publish ((publisher, rel_sub), (book, rel_obj), "
     "(year?, rel_time2)))"},
    {"Q3.1",
     "(is_of (((is_of (((is_of ((book, rel_sub), [(publisher, rel_obj)], "
     "[(year, rel_time2)])), rel_sub), [(author, rel_obj)])), rel_sub), "
     "(subject?, rel_obj)))"},
    {"Q3.2",
     "(is_of? (((is_of (((is_of ((book, rel_sub), [(publisher, rel_obj)], "
     "[(year, rel_time2)])), rel_sub), [(author, rel_obj)])), rel_sub), "
     "(subject, rel_obj)))"},
    {"Q3.3",
     "(is_of (((is_of ((book, rel_sub), (author, rel_obj), "
     "[(year, rel_time2)])), rel_sub), (subject?, rel_obj)))"},
    {"Q3.4",
     "(is_of (((is_of ((book, rel_sub), (publisher, rel_obj), "
     "[(year, rel_time2)])), rel_sub), (subject?, rel_obj)))"},
    {"Q4.1",
     "(verb_write ((author, rel_sub), ((is_of ((book?, rel_sub), "
     "(subject, rel_obj))), rel_obj), [(time_phrase, rel_time)]))"},
    {"Q4.2",
     "(verb_publish ((publisher, rel_sub), ((is_of ((book?, rel_sub), "
     "(subject, rel_obj))), rel_obj), [(time_phrase, rel_time)]))"},
    {"Q5.1",
     "(verb_publish ((publisher, rel_sub), (book, rel_obj), "
     "[(year, rel_time2)], (location?, rel_loc)))"},
    {"Q5.2", "(verb_locate ((publisher, rel_sub), (location?, rel_obj)))"},
    {"Q6.1", "(verb_cost ((book, rel_sub), (price?, rel_obj)))"},
    {"Q7.1",
     "(verb_have ((source, rel_sub), (book, rel_obj), "
     "(book_amount?, rel_amount)))"},
    {"Q7.2",
     "(verb_write ((author, rel_sub), (book, rel_obj), "
     "[(time_phrase, rel_time)], (book_amount?, rel_amount)))"},
    {"Q7.3",
     "(verb_publish ((publisher, rel_sub), (book, rel_obj), "
     "[(time_phrase, rel_time)], (book_amount?, rel_amount)))"},
};

constexpr std::string_view kElibSource = "elib";

bool IsTimeLabel(std::string_view label) {
  return label == "year" || label == "time_phrase" || label == "APT";
}

bool IsAmountLabel(std::string_view label) { return label == "book_amount"; }

// Recursive-descent reader for skeleton text.
class SkeletonReader {
 public:
  explicit SkeletonReader(std::string_view text) : text_(text) {}

  SkeletonNode ReadAll() {
    SkeletonNode node = ReadNode();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing text");
    return node;
  }

 private:
  SkeletonNode ReadNode() {
    Expect('(');
    SkeletonNode node;
    node.predicate = ReadIdent();
    node.focused = Accept('?');
    Expect('(');
    do {
      node.args.push_back(ReadItem());
    } while (Accept(','));
    Expect(')');
    Expect(')');
    return node;
  }

  SkeletonArg ReadItem() {
    bool optional = Accept('[');
    SkeletonArg arg = ReadPair();
    arg.optional = optional;
    if (optional) Expect(']');
    return arg;
  }

  SkeletonArg ReadPair() {
    Expect('(');
    SkeletonArg arg;
    if (Peek() == '(') {
      arg.nested.push_back(ReadNode());
    } else {
      arg.label = ReadIdent();
      arg.focused = Accept('?');
      if (!IsTimeLabel(arg.label) && !IsAmountLabel(arg.label) &&
          !RoleFromName(arg.label)) {
        Fail("unknown argument label '" + arg.label + "'");
      }
    }
    Expect(',');
    std::string rel = ReadIdent();
    std::optional<Relation> relation = RelationFromName(rel);
    if (!relation) Fail("unknown relation '" + rel + "'");
    arg.relation = *relation;
    Expect(')');
    return arg;
  }

  std::string ReadIdent() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) Fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool Accept(char c) {
    if (Peek() != c) return false;
    ++pos_;
    return true;
  }

  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void Fail(const std::string &message) {
    throw SemanticError("skeleton: " + message + " at offset " +
                        std::to_string(pos_));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

int CountSkeletonFocus(const SkeletonNode &node) {
  int count = node.focused ? 1 : 0;
  for (const SkeletonArg &arg : node.args) {
    if (arg.focused) ++count;
    for (const SkeletonNode &n : arg.nested) count += CountSkeletonFocus(n);
  }
  return count;
}

void RenderSkeletonTo(const SkeletonNode &node, std::string *out) {
  *out += '(' + node.predicate;
  if (node.focused) *out += '?';
  *out += " (";
  for (size_t i = 0; i < node.args.size(); ++i) {
    const SkeletonArg &arg = node.args[i];
    if (i > 0) *out += ", ";
    if (arg.optional) *out += '[';
    *out += '(';
    if (!arg.nested.empty()) {
      RenderSkeletonTo(arg.nested.front(), out);
    } else {
      *out += arg.label;
      if (arg.focused) *out += '?';
    }
    *out += ", ";
    *out += RelationName(arg.relation);
    *out += ')';
    if (arg.optional) *out += ']';
  }
  *out += "))";
}

// Categories whose bound value fills an entity slot of the role.
std::vector<Category> FillersFor(Role role) {
  switch (role) {
    case Role::kAuthor:
      return {Category::kAuthor, Category::kOfAuthor, Category::kByAuthor};
    case Role::kPublisher:
      return {Category::kPublisher, Category::kByPublisher};
    case Role::kBook:
      return {Category::kBook};
    case Role::kSubject:
    case Role::kField:
      return {Category::kSubject};
    case Role::kLocation:
    case Role::kPrice:
    case Role::kSource:
      return {};
  }
  return {};
}

// Roles the syntax may leave implicit; an unfilled mandatory slot of one of
// these roles becomes an existential argument.
bool MayBeImplicit(Role role) {
  return role == Role::kAuthor || role == Role::kPublisher ||
         role == Role::kBook || role == Role::kSource;
}

std::string_view TextOf(const ConstituentBinding &b) {
  return std::get<std::string>(b.value);
}

class Instantiator {
 public:
  explicit Instantiator(const ParseResult &parse) : parse_(parse) {}

  SemanticNode Node(const SkeletonNode &skeleton) {
    SemanticNode node;
    node.predicate = skeleton.predicate;
    node.focused = skeleton.focused;
    for (const SkeletonArg &slot : skeleton.args) Fill(slot, &node.args);
    return node;
  }

 private:
  void Fill(const SkeletonArg &slot, std::vector<Argument> *args) {
    if (!slot.nested.empty()) {
      Argument arg;
      arg.kind = Argument::Kind::kNested;
      arg.relation = slot.relation;
      arg.nested.push_back(Node(slot.nested.front()));
      args->push_back(std::move(arg));
      return;
    }
    if (IsTimeLabel(slot.label)) {
      FillTime(slot, args);
    } else if (IsAmountLabel(slot.label)) {
      Argument arg;
      arg.kind = Argument::Kind::kAmount;
      arg.relation = slot.relation;
      arg.focused = slot.focused;
      args->push_back(std::move(arg));
    } else {
      FillEntity(slot, *RoleFromName(slot.label), args);
    }
  }

  void FillTime(const SkeletonArg &slot, std::vector<Argument> *args) {
    Argument arg;
    arg.kind = Argument::Kind::kTime;
    arg.focused = slot.focused;
    if (slot.focused) {
      // [<prep_time>] <what_time>
      arg.time_relation = TimeRelation::kIn;
      if (slot.relation == Relation::kTime1) {
        arg.time_relation = TimeRelation::kBefore;
      } else if (slot.relation == Relation::kTime3) {
        arg.time_relation = TimeRelation::kAfter;
      }
      if (const ConstituentBinding *prep = parse_.First(Category::kPrepTime)) {
        arg.time_relation = ResolveTime(TimeValue{std::string(TextOf(*prep)),
                                                  2000})
                                .relation;
      }
      arg.relation = RelationFor(arg.time_relation);
      args->push_back(std::move(arg));
      return;
    }
    const ConstituentBinding *time = parse_.First(Category::kTimePhrase);
    if (time == nullptr) {
      if (slot.optional) return;
      throw SemanticError(parse_.family + ": missing mandatory <time_phrase>");
    }
    TimeConstraint constraint = ResolveTime(std::get<TimeValue>(time->value));
    arg.time_relation = constraint.relation;
    arg.year = constraint.year;
    arg.relation = RelationFor(constraint.relation);
    args->push_back(std::move(arg));
  }

  void FillEntity(const SkeletonArg &slot, Role role,
                  std::vector<Argument> *args) {
    Argument arg;
    arg.kind = Argument::Kind::kEntity;
    arg.role = role;
    arg.relation = slot.relation;
    arg.focused = slot.focused;

    if (slot.focused) {
      args->push_back(std::move(arg));
      return;
    }

    std::vector<std::string> values;
    if (role == Role::kSource) {
      if (parse_.First(Category::kInElib) != nullptr) {
        values.emplace_back(kElibSource);
      }
    } else {
      std::vector<Category> fillers = FillersFor(role);
      for (const ConstituentBinding &b : parse_.bindings) {
        if (std::find(fillers.begin(), fillers.end(), b.category) !=
            fillers.end()) {
          values.emplace_back(TextOf(b));
        }
      }
    }
    // Only books repeat; other roles take their first filler.
    if (role != Role::kBook && values.size() > 1) values.resize(1);

    if (values.empty()) {
      if (slot.optional) return;
      if (!MayBeImplicit(role)) {
        throw SemanticError(parse_.family + ": missing mandatory " +
                            std::string(RoleName(role)) + " constituent");
      }
      args->push_back(std::move(arg));
      return;
    }
    for (std::string &v : values) {
      Argument filled = arg;
      if (!v.empty()) filled.value = std::move(v);
      args->push_back(std::move(filled));
    }
  }

  const ParseResult &parse_;
};

void CountFocusTo(const SemanticNode &node, int *count) {
  if (node.focused) ++*count;
  for (const Argument &arg : node.args) {
    if (arg.focused) ++*count;
    for (const SemanticNode &n : arg.nested) CountFocusTo(n, count);
  }
}

bool FindFocusPath(const SemanticNode &node, std::vector<int> *path) {
  for (size_t i = 0; i < node.args.size(); ++i) {
    const Argument &arg = node.args[i];
    path->push_back(static_cast<int>(i));
    if (arg.focused) return true;
    for (const SemanticNode &n : arg.nested) {
      if (FindFocusPath(n, path)) return true;
    }
    path->pop_back();
  }
  return false;
}

std::string Quote(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void RenderNode(const SemanticNode &node, bool full, std::string *out) {
  *out += '(' + node.predicate;
  if (node.focused) *out += '?';
  *out += " (";
  for (size_t i = 0; i < node.args.size(); ++i) {
    const Argument &arg = node.args[i];
    if (i > 0) *out += ", ";
    *out += '(';
    switch (arg.kind) {
      case Argument::Kind::kEntity:
        *out += RoleName(arg.role);
        if (arg.focused) {
          *out += '?';
        } else if (full && arg.value) {
          *out += '=' + Quote(*arg.value);
        }
        break;
      case Argument::Kind::kTime:
        if (arg.focused || !arg.year) {
          *out += "year?";
        } else if (full) {
          *out += "year=" + std::to_string(*arg.year);
        } else {
          *out += "APT";
        }
        break;
      case Argument::Kind::kAmount:
        *out += "book_amount";
        if (arg.focused) *out += '?';
        break;
      case Argument::Kind::kNested:
        RenderNode(arg.nested.front(), full, out);
        break;
    }
    *out += ", ";
    *out += RelationName(arg.relation);
    *out += ')';
  }
  *out += "))";
}

}  // namespace

std::string_view RelationName(Relation relation) {
  return kRelationNames[static_cast<int>(relation)];
}

std::optional<Relation> RelationFromName(std::string_view name) {
  for (size_t i = 0; i < kRelationNames.size(); ++i) {
    if (kRelationNames[i] == name) return static_cast<Relation>(i);
  }
  return std::nullopt;
}

Relation RelationFor(TimeRelation time) {
  switch (time) {
    case TimeRelation::kBefore: return Relation::kTime1;
    case TimeRelation::kIn: return Relation::kTime2;
    case TimeRelation::kAfter: return Relation::kTime3;
  }
  return Relation::kTime2;
}

std::string_view RoleName(Role role) {
  return kRoleNames[static_cast<int>(role)];
}

std::optional<Role> RoleFromName(std::string_view name) {
  for (size_t i = 0; i < kRoleNames.size(); ++i) {
    if (kRoleNames[i] == name) return static_cast<Role>(i);
  }
  return std::nullopt;
}

bool Argument::operator==(const Argument &other) const {
  return kind == other.kind && relation == other.relation &&
         focused == other.focused && role == other.role &&
         value == other.value && time_relation == other.time_relation &&
         year == other.year && nested == other.nested;
}

SkeletonNode ParseSkeleton(std::string_view text) {
  return SkeletonReader(text).ReadAll();
}

std::string RenderSkeletonTable(const SkeletonNode &skeleton) {
  std::string out;
  RenderSkeletonTo(skeleton, &out);
  return out;
}

const SemanticTable &SemanticTable::BuiltIn() {
  static const SemanticTable table = [] {
    SemanticTable t;
    for (const auto &[family, text] : kBuiltinSkeletons) {
      t.Register(std::string(family), text);
    }
    return t;
  }();
  return table;
}

void SemanticTable::Register(const std::string &family,
                             std::string_view skeleton_text) {
  SkeletonNode skeleton = ParseSkeleton(skeleton_text);
  if (CountSkeletonFocus(skeleton) != 1) {
    throw SemanticError("skeleton for " + family +
                        " must carry exactly one focus mark");
  }
  skeletons_[family] = std::move(skeleton);
}

const SkeletonNode *SemanticTable::Find(std::string_view family) const {
  auto it = skeletons_.find(family);
  return it == skeletons_.end() ? nullptr : &it->second;
}

std::vector<std::string> SemanticTable::Families() const {
  std::vector<std::string> families;
  for (const auto &[family, skeleton] : skeletons_) families.push_back(family);
  return families;
}

SemanticNode Transform(const ParseResult &parse, const SemanticTable &table) {
  const SkeletonNode *skeleton = table.Find(parse.family);
  if (skeleton == nullptr) {
    throw SemanticError("no semantic structure registered for family " +
                        parse.family);
  }
  return Instantiator(parse).Node(*skeleton);
}

TimeConstraint ResolveTime(const TimeValue &value) {
  return ResolveTime(value.prep, value.year);
}

int CountFocus(const SemanticNode &sem) {
  int count = 0;
  CountFocusTo(sem, &count);
  return count;
}

QuestionType Classify(const SemanticNode &sem) {
  if (CountFocus(sem) != 1) {
    throw SemanticError("representation must carry exactly one focus mark");
  }
  QuestionType type;
  if (sem.focused) {
    type.kind = QuestionType::Kind::kYesNo;
    return type;
  }
  type.kind = QuestionType::Kind::kWh;
  FindFocusPath(sem, &type.focus_path);
  return type;
}

const Argument *FocusedArgument(const SemanticNode &sem) {
  std::vector<int> path;
  if (!FindFocusPath(sem, &path)) return nullptr;
  const SemanticNode *node = &sem;
  const Argument *arg = nullptr;
  for (int index : path) {
    arg = &node->args[index];
    if (!arg->nested.empty()) node = &arg->nested.front();
  }
  return arg;
}

std::string RenderSkeleton(const SemanticNode &sem) {
  std::string out;
  RenderNode(sem, false, &out);
  return out;
}

std::string RenderFull(const SemanticNode &sem) {
  std::string out;
  RenderNode(sem, true, &out);
  return out;
}

}  // namespace viqa
