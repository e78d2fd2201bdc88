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

#ifndef VIQA_UTIL_H_
#define VIQA_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace viqa {

// Splits on '\n'. A trailing newline does not produce an empty last line.
std::vector<std::string_view> SplitLines(std::string_view text);

std::vector<std::string_view> Split(std::string_view text, char sep);

// Strips ASCII whitespace from both ends.
std::string_view Trim(std::string_view text);

// Removes one trailing '\r'.
std::string_view StripCr(std::string_view text);

// Reads a whole file. Throws std::runtime_error if it cannot be opened.
std::string ReadFile(const std::string &path);

}  // namespace viqa

#endif  // VIQA_UTIL_H_
