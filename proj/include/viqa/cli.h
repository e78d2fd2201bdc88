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

// Command-line front end: parse, semantics, ask, generate and batch. Each
// command writes to the given streams and returns the process exit status:
// 0 on success, 2 when a query has no parse, 1 on usage or load errors.

#ifndef VIQA_CLI_H_
#define VIQA_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace viqa {

struct RunConfig {
  std::string grammar_path;
  std::string lexicon_path;
  std::string catalog_path;
  bool structured = false;  // one JSON object per output line
  uint64_t seed = 1;

  // Paths of the shipped data files.
  static RunConfig Defaults();
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoParse = 2;

int CmdParse(std::string_view query, const RunConfig &config,
             std::ostream &out, std::ostream &err);
int CmdSemantics(std::string_view query, const RunConfig &config,
                 std::ostream &out, std::ostream &err);
int CmdAsk(std::string_view query, const RunConfig &config, std::ostream &out,
           std::ostream &err);

// `selector` is a rule id or "all". Sample i of a rule uses seed + i.
int CmdGenerate(std::string_view selector, int count, const RunConfig &config,
                std::ostream &out, std::ostream &err);

// One query per line; blank lines are skipped. A line "RULE<TAB>query" only
// counts as parsed when RULE is among the accepted rules. Prints one result
// per line and a final "parsed/total" summary; exit 0 iff every line parsed.
int CmdBatch(const std::string &path, const RunConfig &config,
             std::ostream &out, std::ostream &err);

// Parses argv and dispatches.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace viqa

#endif  // VIQA_CLI_H_
