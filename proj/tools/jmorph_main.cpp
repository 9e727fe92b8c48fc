// Copyright 2026 The jmorph authors
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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jmorph/errors.hpp"
#include "jmorph/eval.hpp"
#include "jmorph/noun.hpp"
#include "jmorph/postfilter.hpp"
#include "jmorph/verb.hpp"

#ifndef JMORPH_DATA_DIR
#define JMORPH_DATA_DIR "data"
#endif

namespace {

using namespace jmorph;

struct Config {
  std::string lexicon_path = std::string(JMORPH_DATA_DIR) + "/lexicon.tsv";
  std::string pos_map_path;
  std::string rules_path;
  bool no_filter = false;
  std::string eval_mode = "token";
  bool jsonl = false;
};

std::string render_tags(const std::vector<AttrTag>& tags) {
  if (tags.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ' ';
    out += tag_name(tags[i]);
  }
  return out;
}

// `V#surface$` or `V#surface|mecab_lemma$`
std::pair<std::string, std::optional<std::string>> parse_va_line(const std::string& line) {
  if (line.empty() || line.back() != '$')
    throw FormatError(line.size() + 1, "missing '$' terminator");
  std::string body = line.substr(2, line.size() - 3);
  size_t bar = body.find('|');
  if (bar == std::string::npos) {
    if (body.empty()) throw FormatError(3, "empty surface");
    return {body, std::nullopt};
  }
  std::string surface = body.substr(0, bar);
  std::string lemma = body.substr(bar + 1);
  if (surface.empty()) throw FormatError(3, "empty surface");
  if (lemma.empty()) throw FormatError(3 + bar + 1, "empty lemma after '|'");
  return {surface, lemma};
}

int cmd_analyze(const Config& cfg) {
  Lexicon lex = load_lexicon_file(cfg.lexicon_path);
  PosRoleMap roles =
      cfg.pos_map_path.empty() ? PosRoleMap::defaults() : PosRoleMap::load_file(cfg.pos_map_path);
  OrderingRules rules = cfg.rules_path.empty() ? OrderingRules::defaults()
                                               : OrderingRules::load_file(cfg.rules_path);
  VerbGrammar grammar(lex);

  std::string line;
  size_t lineno = 0;
  bool any_failed = false;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      if (line.size() < 2 || line[1] != '#')
        throw FormatError(1, "expected '<marker>#...$'");
      char marker = line[0];
      if (marker == 'N') {
        SegmentedInput in = parse_line(line);
        std::cout << to_string(analyze_noun(in, roles, lex)) << '\n';
      } else if (marker == 'V' || marker == 'A') {
        auto [surface, mecab_lemma] = parse_va_line(line);
        std::vector<Analysis> analyses = grammar.analyze(surface);
        if (!cfg.no_filter) analyses = filter(analyses, mecab_lemma, rules);
        if (analyses.empty()) {
          std::cout << surface << "\t?\t?\t?\n";
        } else {
          for (const Analysis& a : analyses)
            std::cout << surface << '\t' << a.lemma << '\t' << tag_name(a.cls) << '\t'
                      << render_tags(a.tags) << '\n';
        }
      } else {
        throw FormatError(1, std::string("unknown class marker: ") + marker);
      }
    } catch (const Error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      any_failed = true;
    }
  }
  return any_failed ? 1 : 0;
}

int cmd_generate(const Config& cfg, const std::string& lemma,
                 const std::vector<std::string>& tag_names) {
  Lexicon lex = load_lexicon_file(cfg.lexicon_path);
  std::vector<AttrTag> tags;
  for (const std::string& name : tag_names) {
    auto t = tag_from_name(name);
    if (!t) {
      std::cerr << "unknown tag: " << name << '\n';
      return 2;
    }
    tags.push_back(*t);
  }
  VerbGrammar grammar(lex);
  try {
    for (const std::string& s : grammar.generate(lemma, tags)) std::cout << s << '\n';
  } catch (const UnknownLemmaError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cmd_evaluate(const Config& cfg, const std::string& gold_path) {
  Lexicon lex = load_lexicon_file(cfg.lexicon_path);
  OrderingRules rules = cfg.rules_path.empty() ? OrderingRules::defaults()
                                               : OrderingRules::load_file(cfg.rules_path);
  VerbGrammar grammar(lex);
  std::vector<GoldEntry> gold = load_gold_file(gold_path);
  EvalMode mode = cfg.eval_mode == "type" ? EvalMode::Type : EvalMode::Token;
  std::vector<JudgedItem> items = group_gold(gold, mode);
  for (JudgedItem& item : items) {
    item.produced = grammar.analyze(item.surface);
    if (!cfg.no_filter) item.produced = filter(item.produced, std::nullopt, rules);
  }
  try {
    EvalReport report = evaluate(items);
    std::cout << (cfg.jsonl ? format_report_jsonl(report) : format_report_text(report));
  } catch (const EmptyEvalSetError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Japanese noun/verb/adjective morphological analyzer and generator"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--lexicon", cfg.lexicon_path, "lexicon TSV path")->capture_default_str();
  app.add_option("--pos-map", cfg.pos_map_path, "pos role map TSV (default: built-in ids)");
  app.add_option("--rules", cfg.rules_path, "ordering rules file (default: built-in template)");
  app.add_flag("--no-filter", cfg.no_filter, "emit raw analyses without the order/lemma filter");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "read N#/V#/A# lines from stdin, write analyses to stdout");

  std::string lemma;
  std::vector<std::string> tag_names;
  CLI::App* generate = app.add_subcommand("generate", "print all surfaces for lemma + tags");
  generate->add_option("lemma", lemma, "dictionary form")->required();
  generate->add_option("tags", tag_names, "attribute tag names, stem outward");

  std::string gold_path;
  CLI::App* evaluate = app.add_subcommand("evaluate", "score the analyzer against a gold TSV");
  evaluate->add_option("gold", gold_path, "gold corpus TSV")->required();
  evaluate->add_option("--eval-mode", cfg.eval_mode, "token or type items")
      ->check(CLI::IsMember({"token", "type"}))
      ->capture_default_str();
  evaluate->add_flag("--jsonl", cfg.jsonl, "machine-readable JSON-lines report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
    if (app.got_subcommand(generate)) return cmd_generate(cfg, lemma, tag_names);
    if (app.got_subcommand(evaluate)) return cmd_evaluate(cfg, gold_path);
  } catch (const jmorph::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
