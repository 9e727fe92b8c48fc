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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jmorph/errors.hpp"
#include "jmorph/eval.hpp"
#include "jmorph/lexicon.hpp"
#include "jmorph/noun.hpp"
#include "jmorph/postfilter.hpp"
#include "jmorph/verb.hpp"

namespace py = pybind11;
using namespace jmorph;

namespace {

std::vector<AttrTag> to_tags(const std::vector<std::string>& names) {
  std::vector<AttrTag> tags;
  for (const std::string& name : names) {
    auto t = tag_from_name(name);
    if (!t) throw py::value_error("unknown tag: " + name);
    tags.push_back(*t);
  }
  return tags;
}

std::vector<std::string> tag_names(const std::vector<AttrTag>& tags) {
  std::vector<std::string> names;
  for (AttrTag t : tags) names.emplace_back(tag_name(t));
  return names;
}

// (lemma, "v"/"adj", [tag, ...])
using PyAnalysis = std::tuple<std::string, std::string, std::vector<std::string>>;

PyAnalysis from_analysis(const Analysis& a) {
  return {a.lemma, std::string(tag_name(a.cls)), tag_names(a.tags)};
}

Analysis to_analysis(const PyAnalysis& t) {
  auto cls = tag_from_name(std::get<1>(t));
  if (!cls || (*cls != AttrTag::v && *cls != AttrTag::adj))
    throw py::value_error("class must be v or adj: " + std::get<1>(t));
  return {std::get<0>(t), *cls, to_tags(std::get<2>(t))};
}

OrderingRules rules_from(const std::optional<std::string>& path) {
  return path ? OrderingRules::load_file(*path) : OrderingRules::defaults();
}

}  // namespace

PYBIND11_MODULE(jmorph, m) {
  m.doc() = "Finite-state morphological analyzer and generator for Japanese "
            "nouns, verbs and adjectives";

  py::register_exception<Error>(m, "Error");

  py::class_<Lexicon>(m, "Lexicon", "Conjugable lexeme inventory")
      .def("__len__", [](const Lexicon& lex) { return lex.size(); })
      .def("lemmas", [](const Lexicon& lex) {
        std::vector<std::string> out;
        for (const Lexeme& e : lex.entries()) out.push_back(e.lemma);
        return out;
      });

  m.def("load_lexicon", &load_lexicon_file, py::arg("path"),
        "Load a lemma/reading/group TSV lexicon");

  py::class_<VerbGrammar>(m, "VerbGrammar",
                          "Compiled verb/adjective generator and its inversion")
      .def(py::init<Lexicon>(), py::arg("lexicon"))
      .def(
          "generate",
          [](const VerbGrammar& g, const std::string& lemma,
             const std::vector<std::string>& tags) { return g.generate(lemma, to_tags(tags)); },
          py::arg("lemma"), py::arg("tags"),
          "All surface forms of lemma under the tag sequence, sorted")
      .def(
          "analyze",
          [](const VerbGrammar& g, const std::string& surface) {
            std::vector<PyAnalysis> out;
            for (const Analysis& a : g.analyze(surface)) out.push_back(from_analysis(a));
            return out;
          },
          py::arg("surface"), "All readings of the surface as (lemma, class, tags) tuples");

  m.def(
      "analyze_noun",
      [](const std::string& line, const Lexicon& lex,
         const std::optional<std::string>& pos_map) {
        PosRoleMap roles = pos_map ? PosRoleMap::load_file(*pos_map) : PosRoleMap::defaults();
        NounAnalysis a = analyze_noun(parse_line(line), roles, lex);
        return py::make_tuple(a.head, tag_names(a.attrs));
      },
      py::arg("line"), py::arg("lexicon"), py::arg("pos_map") = std::nullopt,
      "Analyze one pre-segmented noun line; returns (head, attrs)");

  m.def(
      "filter_analyses",
      [](const std::vector<PyAnalysis>& analyses, const std::optional<std::string>& mecab_lemma,
         const std::optional<std::string>& rules_path) {
        std::vector<Analysis> in;
        for (const PyAnalysis& a : analyses) in.push_back(to_analysis(a));
        std::vector<PyAnalysis> out;
        for (const Analysis& a : filter(in, mecab_lemma, rules_from(rules_path)))
          out.push_back(from_analysis(a));
        return out;
      },
      py::arg("analyses"), py::arg("mecab_lemma") = std::nullopt,
      py::arg("rules") = std::nullopt,
      "Drop analyses with invalid morpheme order or a mismatched lemma");

  m.def(
      "evaluate_gold",
      [](const VerbGrammar& g, const std::string& gold_path, const std::string& mode,
         bool use_filter, const std::optional<std::string>& rules_path) {
        if (mode != "token" && mode != "type") throw py::value_error("mode must be token or type");
        auto items = group_gold(load_gold_file(gold_path),
                                mode == "token" ? EvalMode::Token : EvalMode::Type);
        OrderingRules rules = rules_from(rules_path);
        for (JudgedItem& item : items) {
          item.produced = g.analyze(item.surface);
          if (use_filter) item.produced = filter(item.produced, std::nullopt, rules);
        }
        EvalReport rep = evaluate(items);
        py::list per_item;
        for (const ItemScore& s : rep.per_item)
          per_item.append(py::make_tuple(s.surface, s.precision, s.hit));
        py::dict out;
        out["items"] = rep.n_items;
        out["precision"] = rep.precision;
        out["recall"] = rep.recall;
        out["per_item"] = per_item;
        return out;
      },
      py::arg("grammar"), py::arg("gold_path"), py::arg("mode") = "token",
      py::arg("filter") = true, py::arg("rules") = std::nullopt,
      "Score the grammar against a gold TSV; returns precision/recall per item");
}
