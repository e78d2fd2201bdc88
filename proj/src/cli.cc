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

#include "viqa/cli.h"

#include <exception>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "viqa/catalog.h"
#include "viqa/grammar.h"
#include "viqa/lexicon.h"
#include "viqa/parser.h"
#include "viqa/semantics.h"
#include "viqa/util.h"

#ifndef VIQA_DATA_DIR
#define VIQA_DATA_DIR "data"
#endif

namespace viqa {

namespace {

using json = nlohmann::json;

struct Pipeline {
  Grammar grammar;
  Lexicon lexicon;
};

std::optional<Pipeline> LoadPipeline(const RunConfig &config,
                                     std::ostream &err) {
  try {
    Pipeline p;
    p.lexicon = Lexicon::LoadFile(config.lexicon_path);
    p.grammar = Grammar::LoadFile(config.grammar_path);
    return p;
  } catch (const LoadError &e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << "\n";
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
  }
  return std::nullopt;
}

std::string_view KindName(QuestionType::Kind kind) {
  return kind == QuestionType::Kind::kWh ? "wh" : "yesno";
}

json ConstituentsJson(const ParseResult &parse) {
  json list = json::array();
  for (const LabeledConstituent &c : Constituents(parse)) {
    list.push_back(
        {{"category", c.category}, {"surface", c.surface}, {"value", c.value}});
  }
  return list;
}

// Parses one query; prints the diagnostic and returns the exit status on
// failure.
int ParseQuery(std::string_view query, const Pipeline &p,
               std::vector<ParseResult> *parses, std::ostream &err) {
  try {
    *parses = Parse(query, p.grammar, p.lexicon);
  } catch (const QueryError &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (parses->empty()) {
    err << "no rule matches the query\n";
    return kExitNoParse;
  }
  return kExitOk;
}

}  // namespace

RunConfig RunConfig::Defaults() {
  RunConfig config;
  config.grammar_path = std::string(VIQA_DATA_DIR) + "/rules_v1.bnf";
  config.lexicon_path = std::string(VIQA_DATA_DIR) + "/lexicon_v1.tsv";
  config.catalog_path = std::string(VIQA_DATA_DIR) + "/catalog_sample.json";
  return config;
}

int CmdParse(std::string_view query, const RunConfig &config,
             std::ostream &out, std::ostream &err) {
  std::optional<Pipeline> p = LoadPipeline(config, err);
  if (!p) return kExitError;
  std::vector<ParseResult> parses;
  if (int status = ParseQuery(query, *p, &parses, err)) return status;

  for (const ParseResult &parse : parses) {
    if (config.structured) {
      json obj = {{"rule_id", parse.rule_id},
                  {"family", parse.family},
                  {"constituents", ConstituentsJson(parse)}};
      out << obj.dump() << "\n";
      continue;
    }
    out << parse.rule_id << "\n";
    for (const LabeledConstituent &c : Constituents(parse)) {
      out << "  " << c.category << ": " << c.surface << "\t" << c.value
          << "\n";
    }
  }
  return kExitOk;
}

int CmdSemantics(std::string_view query, const RunConfig &config,
                 std::ostream &out, std::ostream &err) {
  std::optional<Pipeline> p = LoadPipeline(config, err);
  if (!p) return kExitError;
  std::vector<ParseResult> parses;
  if (int status = ParseQuery(query, *p, &parses, err)) return status;

  const ParseResult &parse = parses.front();
  try {
    SemanticNode sem = Transform(parse);
    QuestionType qtype = Classify(sem);
    if (config.structured) {
      json obj = {{"rule_id", parse.rule_id},
                  {"skeleton", RenderSkeleton(sem)},
                  {"full", RenderFull(sem)},
                  {"question_type", KindName(qtype.kind)}};
      out << obj.dump() << "\n";
    } else {
      out << RenderSkeleton(sem) << "\n" << RenderFull(sem) << "\n";
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

int CmdAsk(std::string_view query, const RunConfig &config, std::ostream &out,
           std::ostream &err) {
  std::optional<Pipeline> p = LoadPipeline(config, err);
  if (!p) return kExitError;
  Catalog catalog;
  try {
    catalog = Catalog::LoadFile(config.catalog_path);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::vector<ParseResult> parses;
  if (int status = ParseQuery(query, *p, &parses, err)) return status;

  try {
    SemanticNode sem = Transform(parses.front());
    QuestionType qtype = Classify(sem);
    std::string text = FormatAnswer(Evaluate(sem, catalog), qtype);
    if (config.structured) {
      json obj = {{"rule_id", parses.front().rule_id},
                  {"question_type", KindName(qtype.kind)},
                  {"answer", text}};
      out << obj.dump() << "\n";
    } else {
      out << text << "\n";
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

int CmdGenerate(std::string_view selector, int count, const RunConfig &config,
                std::ostream &out, std::ostream &err) {
  if (count <= 0) {
    err << "error: count must be positive\n";
    return kExitError;
  }
  std::optional<Pipeline> p = LoadPipeline(config, err);
  if (!p) return kExitError;

  std::vector<const SyntacticRule *> rules;
  if (selector == "all") {
    for (const SyntacticRule &r : p->grammar.rules()) rules.push_back(&r);
  } else if (const SyntacticRule *r = p->grammar.Find(selector)) {
    rules.push_back(r);
  } else {
    err << "error: unknown rule id '" << selector << "'\n";
    return kExitError;
  }

  std::string buffer;
  try {
    for (const SyntacticRule *rule : rules) {
      for (int i = 0; i < count; ++i) {
        std::string sentence =
            Sample(p->grammar, rule->id, config.seed + i, p->lexicon);
        if (config.structured) {
          buffer += json({{"rule_id", rule->id}, {"sentence", sentence}})
                        .dump();
        } else {
          buffer += rule->id + "\t" + sentence;
        }
        buffer += '\n';
      }
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << buffer;
  return kExitOk;
}

int CmdBatch(const std::string &path, const RunConfig &config,
             std::ostream &out, std::ostream &err) {
  std::string document;
  try {
    document = ReadFile(path);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::optional<Pipeline> p = LoadPipeline(config, err);
  if (!p) return kExitError;

  int total = 0;
  int parsed = 0;
  for (std::string_view raw : SplitLines(document)) {
    std::string_view line = StripCr(raw);
    if (Trim(line).empty()) continue;
    ++total;

    std::string_view expected;
    std::string_view query = line;
    if (size_t tab = line.find('\t'); tab != std::string_view::npos) {
      expected = Trim(line.substr(0, tab));
      query = line.substr(tab + 1);
    }

    json record = {{"line", total}, {"query", std::string(query)}};
    std::string status;
    std::string detail;
    std::vector<ParseResult> parses;
    try {
      parses = Parse(query, p->grammar, p->lexicon);
    } catch (const QueryError &) {
      parses.clear();
    }

    const ParseResult *chosen = nullptr;
    if (!parses.empty()) chosen = &parses.front();
    if (chosen && !expected.empty()) {
      chosen = nullptr;
      for (const ParseResult &r : parses) {
        if (r.rule_id == expected) {
          chosen = &r;
          break;
        }
      }
    }

    if (parses.empty()) {
      status = "NO-PARSE";
    } else if (chosen == nullptr) {
      status = "MISMATCH";
      detail = "expected " + std::string(expected) + ", got " +
               parses.front().rule_id;
    } else {
      try {
        detail = RenderSkeleton(Transform(*chosen));
        status = chosen->rule_id;
        ++parsed;
      } catch (const std::exception &e) {
        status = "ERROR";
        detail = e.what();
      }
    }

    if (config.structured) {
      record["result"] = status;
      record["detail"] = detail;
      out << record.dump() << "\n";
    } else {
      out << status << "\t" << (detail.empty() ? std::string(query) : detail)
          << "\n";
    }
  }

  if (config.structured) {
    out << json({{"parsed", parsed}, {"total", total}}).dump() << "\n";
  } else {
    out << parsed << "/" << total << "\n";
  }
  return parsed == total ? kExitOk : kExitError;
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  RunConfig config = RunConfig::Defaults();
  CLI::App app{"Parses Vietnamese questions about a book catalog.", "viqa"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--grammar", config.grammar_path, "Rule file");
  app.add_option("--lexicon", config.lexicon_path, "Lexicon file");
  app.add_option("--catalog", config.catalog_path, "Catalog JSON file");
  app.add_flag("--json", config.structured, "One JSON object per line");
  app.add_option("--seed", config.seed, "Generation seed");

  std::string query;
  std::string selector;
  std::string path;
  int count = 1;

  CLI::App *parse = app.add_subcommand("parse", "Show matching rules");
  parse->add_option("query", query, "Question")->required();
  CLI::App *semantics =
      app.add_subcommand("semantics", "Show the semantic representation");
  semantics->add_option("query", query, "Question")->required();
  CLI::App *ask = app.add_subcommand("ask", "Answer from the catalog");
  ask->add_option("query", query, "Question")->required();
  CLI::App *generate = app.add_subcommand("generate", "Sample sentences");
  generate->add_option("rule", selector, "Rule id or 'all'")->required();
  generate->add_option("count", count, "Samples per rule")->required();
  CLI::App *batch = app.add_subcommand("batch", "Parse a query file");
  batch->add_option("file", path, "One query per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitError;
  }

  if (parse->parsed()) return CmdParse(query, config, out, err);
  if (semantics->parsed()) return CmdSemantics(query, config, out, err);
  if (ask->parsed()) return CmdAsk(query, config, out, err);
  if (generate->parsed()) {
    return CmdGenerate(selector, count, config, out, err);
  }
  return CmdBatch(path, config, out, err);
}

}  // namespace viqa
