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

#include "jmorph/postfilter.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "jmorph/errors.hpp"

namespace jmorph {

OrderingRules OrderingRules::defaults() {
  using enum AttrTag;
  OrderingRules r;
  const AttrTag chain[] = {caus, pasv, pot, pol, neg};
  r.terminals = {te, cond, vol, imp, pfv, prog};
  for (size_t i = 0; i < std::size(chain); ++i)
    for (size_t j = i + 1; j < std::size(chain); ++j)
      r.precedence.emplace_back(chain[i], chain[j]);
  for (AttrTag a : chain)
    for (AttrTag t : r.terminals) r.precedence.emplace_back(a, t);
  r.precedence.emplace_back(caus, caus);
  r.precedence.emplace_back(pasv, pasv);
  return r;
}

namespace {

// Rejects cyclic precedence (self-pairs mean "no repetition", not an edge).
void check_acyclic(const std::vector<std::pair<AttrTag, AttrTag>>& pairs) {
  std::map<AttrTag, std::vector<AttrTag>> adj;
  std::set<AttrTag> nodes;
  for (auto [a, b] : pairs) {
    if (a == b) continue;
    adj[a].push_back(b);
    nodes.insert(a);
    nodes.insert(b);
  }
  std::map<AttrTag, int> state;  // 0 new, 1 open, 2 done
  std::vector<std::pair<AttrTag, size_t>> stack;
  for (AttrTag root : nodes) {
    if (state[root]) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [n, idx] = stack.back();
      auto& next = adj[n];
      if (idx == next.size()) {
        state[n] = 2;
        stack.pop_back();
        continue;
      }
      AttrTag m = next[idx++];
      if (state[m] == 1) throw InvariantError(0, "precedence relation has a cycle");
      if (state[m] == 0) {
        state[m] = 1;
        stack.push_back({m, 0});
      }
    }
  }
}

}  // namespace

OrderingRules OrderingRules::load(std::istream& in) {
  OrderingRules r;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(lineno, "expected tagA<TAB>tagB or terminal<TAB>tag");
    std::string lhs = line.substr(0, tab);
    std::string rhs = line.substr(tab + 1);
    auto b = tag_from_name(rhs);
    if (!b) throw ParseError(lineno, "unknown tag: " + rhs);
    if (lhs == "terminal") {
      r.terminals.push_back(*b);
      continue;
    }
    auto a = tag_from_name(lhs);
    if (!a) throw ParseError(lineno, "unknown tag: " + lhs);
    r.precedence.emplace_back(*a, *b);
  }
  check_acyclic(r.precedence);
  return r;
}

OrderingRules OrderingRules::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ordering rules: " + path);
  return load(in);
}

bool valid_order(const std::vector<AttrTag>& tags, const OrderingRules& rules) {
  auto positions = [&](AttrTag t) {
    std::vector<size_t> out;
    for (size_t i = 0; i < tags.size(); ++i)
      if (tags[i] == t) out.push_back(i);
    return out;
  };
  for (auto [a, b] : rules.precedence) {
    auto pa = positions(a);
    if (a == b) {
      if (pa.size() > 1) return false;
      continue;
    }
    auto pb = positions(b);
    if (!pa.empty() && !pb.empty() && pa.back() > pb.front()) return false;
  }
  bool terminal_set = !rules.terminals.empty();
  for (size_t i = 0; i < tags.size(); ++i) {
    bool is_term = terminal_set && std::find(rules.terminals.begin(), rules.terminals.end(),
                                             tags[i]) != rules.terminals.end();
    if (is_term && i + 1 < tags.size() &&
        !(tags[i] == AttrTag::te && tags[i + 1] == AttrTag::prog))
      return false;
    if (tags[i] == AttrTag::prog && (i == 0 || tags[i - 1] != AttrTag::te)) return false;
  }
  return true;
}

std::vector<Analysis> filter(const std::vector<Analysis>& analyses,
                             const std::optional<std::string>& mecab_lemma,
                             const OrderingRules& rules) {
  std::vector<Analysis> out;
  for (const Analysis& a : analyses) {
    if (mecab_lemma && a.lemma != *mecab_lemma) continue;
    if (!valid_order(a.tags, rules)) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace jmorph
