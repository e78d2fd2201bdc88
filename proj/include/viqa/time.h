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

#ifndef VIQA_TIME_H_
#define VIQA_TIME_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace viqa {

// Temporal relation between an event and a year. The relation names are
// rel_time1 (before), rel_time2 (in) and rel_time3 (after).
enum class TimeRelation { kBefore, kIn, kAfter };

// "before", "in", "after".
std::string_view TimeRelationName(TimeRelation relation);

// "rel_time1", "rel_time2", "rel_time3".
std::string_view TimeRelationSymbol(TimeRelation relation);

// Maps a prep_time lemma to its relation: trước -> before, vào/trong -> in,
// sau -> after.
std::optional<TimeRelation> TimeRelationForPrep(std::string_view lemma);

struct TimeConstraint {
  int year = 0;
  TimeRelation relation = TimeRelation::kIn;

  bool operator==(const TimeConstraint &) const = default;
};

class TimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolves a preposition lemma and year. Throws TimeError naming an unknown
// lemma or a year outside 1000..9999.
TimeConstraint ResolveTime(std::string_view prep, int year);

}  // namespace viqa

#endif  // VIQA_TIME_H_
