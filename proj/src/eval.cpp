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

#include "jmorph/eval.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jmorph/errors.hpp"

namespace jmorph {

EvalReport evaluate(const std::vector<JudgedItem>& items) {
  if (items.empty()) throw EmptyEvalSetError();
  EvalReport rep;
  rep.n_items = items.size();
  size_t hits = 0;
  double precision_sum = 0.0;
  for (const JudgedItem& item : items) {
    std::set<Analysis> gold(item.gold.begin(), item.gold.end());
    std::set<Analysis> produced(item.produced.begin(), item.produced.end());
    size_t correct = 0;
    for (const Analysis& a : produced) correct += gold.count(a);
    ItemScore score;
    score.surface = item.surface;
    score.precision =
        produced.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(produced.size());
    score.hit = correct > 0;
    precision_sum += score.precision;
    hits += score.hit ? 1 : 0;
    rep.per_item.push_back(std::move(score));
  }
  rep.precision = precision_sum / static_cast<double>(items.size());
  rep.recall = static_cast<double>(hits) / static_cast<double>(items.size());
  return rep;
}

std::vector<GoldEntry> load_gold(std::istream& in) {
  std::vector<GoldEntry> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 4)
      throw ParseError(lineno, "expected surface<TAB>lemma<TAB>class<TAB>tags, got " +
                                   std::to_string(fields.size()) + " fields");
    GoldEntry e;
    e.surface = fields[0];
    e.analysis.lemma = fields[1];
    auto cls = tag_from_name(fields[2]);
    if (!cls || (*cls != AttrTag::v && *cls != AttrTag::adj))
      throw ParseError(lineno, "class must be v or adj: " + fields[2]);
    e.analysis.cls = *cls;
    if (!fields[3].empty() && fields[3] != "-") {
      std::stringstream ts(fields[3]);
      std::string name;
      while (std::getline(ts, name, '+')) {
        auto t = tag_from_name(name);
        if (!t) throw ParseError(lineno, "unknown tag: " + name);
        e.analysis.tags.push_back(*t);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GoldEntry> load_gold_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open gold file: " + path);
  return load_gold(in);
}

std::vector<JudgedItem> group_gold(const std::vector<GoldEntry>& entries, EvalMode mode) {
  std::vector<JudgedItem> items;
  if (mode == EvalMode::Token) {
    for (const GoldEntry& e : entries) {
      if (items.empty() || items.back().surface != e.surface) {
        items.push_back({e.surface, {}, {}});
      }
      items.back().gold.push_back(e.analysis);
    }
  } else {
    for (const GoldEntry& e : entries) {
      auto it = std::find_if(items.begin(), items.end(),
                             [&](const JudgedItem& i) { return i.surface == e.surface; });
      if (it == items.end()) {
        items.push_back({e.surface, {}, {}});
        it = std::prev(items.end());
      }
      it->gold.push_back(e.analysis);
    }
  }
  for (JudgedItem& item : items) {
    std::sort(item.gold.begin(), item.gold.end());
    item.gold.erase(std::unique(item.gold.begin(), item.gold.end()), item.gold.end());
  }
  return items;
}

std::string format_report_text(const EvalReport& report) {
  size_t width = 7;  // header "surface"
  for (const ItemScore& s : report.per_item) width = std::max(width, s.surface.size());
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << "surface";
  os << std::string(width - 7, ' ') << "  precision  hit\n";
  for (const ItemScore& s : report.per_item) {
    os << s.surface << std::string(width - s.surface.size(), ' ');
    os << "  " << s.precision << "     " << (s.hit ? "yes" : "no") << '\n';
  }
  os << "items " << report.n_items << "  precision " << report.precision << "  recall "
     << report.recall << '\n';
  return os.str();
}

std::string format_report_jsonl(const EvalReport& report) {
  std::string out;
  for (const ItemScore& s : report.per_item) {
    nlohmann::json j = {{"surface", s.surface}, {"precision", s.precision}, {"hit", s.hit}};
    out += j.dump();
    out += '\n';
  }
  nlohmann::json summary = {{"items", report.n_items},
                            {"precision", report.precision},
                            {"recall", report.recall}};
  out += summary.dump();
  out += '\n';
  return out;
}

}  // namespace jmorph
