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

#include "viqa/time.h"

namespace viqa {

std::string_view TimeRelationName(TimeRelation relation) {
  switch (relation) {
    case TimeRelation::kBefore: return "before";
    case TimeRelation::kIn: return "in";
    case TimeRelation::kAfter: return "after";
  }
  return "in";
}

std::string_view TimeRelationSymbol(TimeRelation relation) {
  switch (relation) {
    case TimeRelation::kBefore: return "rel_time1";
    case TimeRelation::kIn: return "rel_time2";
    case TimeRelation::kAfter: return "rel_time3";
  }
  return "rel_time2";
}

std::optional<TimeRelation> TimeRelationForPrep(std::string_view lemma) {
  if (lemma == "trước") return TimeRelation::kBefore;
  if (lemma == "vào" || lemma == "trong") return TimeRelation::kIn;
  if (lemma == "sau") return TimeRelation::kAfter;
  return std::nullopt;
}

TimeConstraint ResolveTime(std::string_view prep, int year) {
  std::optional<TimeRelation> relation = TimeRelationForPrep(prep);
  if (!relation) {
    throw TimeError("unknown time preposition '" + std::string(prep) + "'");
  }
  if (year < 1000 || year > 9999) {
    throw TimeError("year out of range: " + std::to_string(year));
  }
  return TimeConstraint{year, *relation};
}

}  // namespace viqa
