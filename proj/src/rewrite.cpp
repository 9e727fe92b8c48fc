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

#include "jmorph/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace jmorph {

namespace {

struct TrieNode {
  SymSeq str;
  std::map<Symbol, uint32_t> next;
  int pattern = -1;  // rule index when str is a full pattern
};

bool is_suffix(const SymSeq& suf, const SymSeq& s) {
  if (suf.size() > s.size()) return false;
  return std::equal(suf.rbegin(), suf.rend(), s.rbegin());
}

}  // namespace

// The scanner buffers input while it sits on a trie prefix and flushes the
// abandoned part on mismatch (Aho-Corasick failure), emitting the
// replacement and restarting at the root whenever a whole pattern has been
// read. Delayed output is realized with epsilon-input emission chains; the
// end-of-input flush is an epsilon chain to a final state, which is harmless
// mid-string because the final state has no outgoing arcs for known symbols.
Transducer build_replace(const std::vector<ReplacePattern>& rules, bool optional) {
  if (rules.empty()) throw std::invalid_argument("build_replace: no rules");
  std::vector<TrieNode> trie(1);
  for (size_t r = 0; r < rules.size(); ++r) {
    const SymSeq& p = rules[r].pattern;
    if (p.empty()) throw std::invalid_argument("build_replace: empty pattern");
    for (Symbol s : p)
      if (s.is_eps() || s.is_any())
        throw std::invalid_argument("build_replace: pattern contains epsilon/wildcard");
    uint32_t q = 0;
    for (Symbol s : p) {
      auto it = trie[q].next.find(s);
      if (it == trie[q].next.end()) {
        trie.push_back({trie[q].str, {}, -1});
        trie.back().str.push_back(s);
        it = trie[q].next.emplace(s, static_cast<uint32_t>(trie.size() - 1)).first;
      }
      q = it->second;
    }
    if (trie[q].pattern >= 0) throw std::invalid_argument("build_replace: duplicate pattern");
    trie[q].pattern = static_cast<int>(r);
  }
  // A pattern hiding strictly inside another pattern's pending window would
  // be missed by this one-pass scanner; reject such rule sets outright.
  for (const TrieNode& node : trie)
    for (const auto& rule : rules)
      if (rule.pattern.size() < node.str.size() && is_suffix(rule.pattern, node.str))
        throw std::logic_error("build_replace: pattern nested inside another pattern's window");

  std::set<Symbol> sigma_set;
  for (const auto& r : rules) {
    sigma_set.insert(r.pattern.begin(), r.pattern.end());
    for (Symbol s : r.replacement) {
      if (s.is_eps() || s.is_any())
        throw std::invalid_argument("build_replace: replacement contains epsilon/wildcard");
      sigma_set.insert(s);
    }
  }

  std::map<SymSeq, uint32_t> node_by_str;
  for (uint32_t i = 0; i < trie.size(); ++i) node_by_str[trie[i].str] = i;
  auto longest_live_suffix = [&](const SymSeq& t) {
    for (size_t len = t.size() - 1;; --len) {
      SymSeq suf(t.end() - static_cast<ptrdiff_t>(len), t.end());
      if (auto it = node_by_str.find(suf); it != node_by_str.end()) return it->second;
      if (len == 0) break;
    }
    return 0u;  // root; unreachable fallthrough guard
  };

  TransducerBuilder b;
  b.add_states(static_cast<uint32_t>(trie.size()));  // state id == trie node id
  b.set_start(0);
  for (Symbol s : sigma_set) b.add_sigma(s);

  auto emit_chain = [&](StateId from, Symbol consume, const SymSeq& out, StateId target) {
    SymSeq in = consume.is_eps() ? SymSeq{} : SymSeq{consume};
    if (in.empty() && out.empty()) {
      b.add_arc(from, target, Symbol::eps(), Symbol::eps());
      return;
    }
    size_t n = std::max(in.size(), out.size());
    StateId cur = from;
    for (size_t i = 0; i < n; ++i) {
      Symbol is = i < in.size() ? in[i] : Symbol::eps();
      Symbol os = i < out.size() ? out[i] : Symbol::eps();
      StateId next = (i + 1 == n) ? target : b.add_state();
      b.add_arc(cur, next, is, os);
      cur = next;
    }
  };

  for (uint32_t q = 0; q < trie.size(); ++q) {
    const SymSeq& pending = trie[q].str;
    // end-of-input / unknown-symbol flush
    StateId flushed = q;
    if (!pending.empty()) {
      flushed = b.add_state();
      emit_chain(q, Symbol::eps(), pending, flushed);
    }
    b.add_final(flushed);
    b.add_arc(flushed, 0, Symbol::any(), Symbol::any());

    for (Symbol c : sigma_set) {
      SymSeq t = pending;
      t.push_back(c);
      auto child = trie[q].next.find(c);
      uint32_t target;
      SymSeq emit;
      int matched;
      if (child != trie[q].next.end()) {
        target = child->second;
        matched = trie[target].pattern;
        if (matched < 0) {
          b.add_arc(q, target, c, Symbol::eps());
          continue;
        }
        emit = rules[static_cast<size_t>(matched)].replacement;
      } else {
        target = longest_live_suffix(t);
        matched = trie[target].pattern;
        SymSeq flush(t.begin(), t.end() - static_cast<ptrdiff_t>(trie[target].str.size()));
        if (matched < 0) {
          emit_chain(q, c, flush, target);
          continue;
        }
        emit = flush;
        const SymSeq& rep = rules[static_cast<size_t>(matched)].replacement;
        emit.insert(emit.end(), rep.begin(), rep.end());
      }
      emit_chain(q, c, emit, 0);
      if (optional) emit_chain(q, c, t, 0);  // keep the window unreplaced
    }
  }
  return std::move(b).build();
}

Transducer rewrite_rule(const SymSeq& lhs, const SymSeq& rhs, const SymSeq& left_ctx,
                        const SymSeq& right_ctx) {
  if (lhs.empty()) throw std::invalid_argument("rewrite_rule: empty lhs");
  ReplacePattern r;
  r.pattern = left_ctx;
  r.pattern.insert(r.pattern.end(), lhs.begin(), lhs.end());
  r.pattern.insert(r.pattern.end(), right_ctx.begin(), right_ctx.end());
  r.replacement = left_ctx;
  r.replacement.insert(r.replacement.end(), rhs.begin(), rhs.end());
  r.replacement.insert(r.replacement.end(), right_ctx.begin(), right_ctx.end());
  return build_replace({r}, false);
}

}  // namespace jmorph
