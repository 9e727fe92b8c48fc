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

#include "jmorph/fst.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "jmorph/errors.hpp"

namespace jmorph {

namespace {

constexpr StateId kNoState = UINT32_MAX;

// Arcs are kept sorted by (from, in, out, to) so application and composition
// can binary-search a state's arcs by input label.
bool arc_less(const Arc& x, const Arc& y) {
  if (x.from != y.from) return x.from < y.from;
  if (x.in != y.in) return x.in < y.in;
  if (x.out != y.out) return x.out < y.out;
  return x.to < y.to;
}

}  // namespace

// Keep only states that lie on some path from the start to a final state,
// renumber them in BFS order from the start, and freeze the result. A
// machine with no accepting path collapses to the canonical empty relation
// (its alphabet is preserved so wildcard semantics stay stable).
Transducer Transducer::finish(uint32_t num_states, StateId start, std::vector<StateId> finals,
                              std::vector<Arc> arcs, std::vector<Symbol> sigma,
                              bool has_wildcard) {
  // forward reachability
  std::vector<std::vector<uint32_t>> fwd(num_states), bwd(num_states);
  for (uint32_t i = 0; i < arcs.size(); ++i) {
    fwd[arcs[i].from].push_back(i);
    bwd[arcs[i].to].push_back(i);
  }
  std::vector<uint8_t> reach(num_states, 0), coreach(num_states, 0);
  std::vector<StateId> queue;
  reach[start] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    StateId s = queue.back();
    queue.pop_back();
    for (uint32_t ai : fwd[s])
      if (!reach[arcs[ai].to]) {
        reach[arcs[ai].to] = 1;
        queue.push_back(arcs[ai].to);
      }
  }
  for (StateId f : finals)
    if (!coreach[f]) {
      coreach[f] = 1;
      queue.push_back(f);
    }
  while (!queue.empty()) {
    StateId s = queue.back();
    queue.pop_back();
    for (uint32_t ai : bwd[s])
      if (!coreach[arcs[ai].from]) {
        coreach[arcs[ai].from] = 1;
        queue.push_back(arcs[ai].from);
      }
  }

  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());

  Transducer t;
  t.sigma_ = std::move(sigma);
  t.has_wildcard_ = has_wildcard;
  if (!reach[start] || !coreach[start]) return t;  // empty relation

  // stable renumbering: BFS over live states
  std::vector<StateId> remap(num_states, kNoState);
  std::vector<StateId> order;
  remap[start] = 0;
  order.push_back(start);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    StateId s = order[qi];
    // deterministic expansion: arcs sorted per state below; sort indices here
    std::vector<uint32_t> out = fwd[s];
    std::sort(out.begin(), out.end(),
              [&](uint32_t x, uint32_t y) { return arc_less(arcs[x], arcs[y]); });
    for (uint32_t ai : out) {
      StateId to = arcs[ai].to;
      if (reach[to] && coreach[to] && remap[to] == kNoState) {
        remap[to] = static_cast<StateId>(order.size());
        order.push_back(to);
      }
    }
  }

  t.state_count_ = static_cast<uint32_t>(order.size());
  t.start_ = 0;
  t.final_mask_.assign(t.state_count_, 0);
  for (StateId f : finals)
    if (remap[f] != kNoState) t.final_mask_[remap[f]] = 1;
  for (StateId s = 0; s < t.state_count_; ++s)
    if (t.final_mask_[s]) t.finals_.push_back(s);

  for (const Arc& a : arcs) {
    if (remap[a.from] == kNoState || remap[a.to] == kNoState) continue;
    t.arcs_.push_back({remap[a.from], remap[a.to], a.in, a.out});
  }
  std::sort(t.arcs_.begin(), t.arcs_.end(), arc_less);
  t.arcs_.erase(std::unique(t.arcs_.begin(), t.arcs_.end()), t.arcs_.end());
  t.offsets_.assign(t.state_count_ + 1, 0);
  for (const Arc& a : t.arcs_) ++t.offsets_[a.from + 1];
  for (uint32_t s = 0; s < t.state_count_; ++s) t.offsets_[s + 1] += t.offsets_[s];
  return t;
}

namespace {

// Copy a machine's states/arcs into a builder at a fixed offset.
StateId splice(TransducerBuilder& b, const Transducer& t, StateId offset) {
  for (const Arc& a : t.arcs()) b.add_arc(a.from + offset, a.to + offset, a.in, a.out);
  for (Symbol s : t.sigma()) b.add_sigma(s);
  return t.start() + offset;
}

// Instantiate wildcard identity arcs over `extra` symbols and widen the
// alphabet, so two machines can agree on what "unknown" means.
Transducer expand_unknown(const Transducer& t, const std::vector<Symbol>& extra) {
  std::vector<Symbol> fresh;
  for (Symbol s : extra)
    if (!t.in_sigma(s)) fresh.push_back(s);
  if (fresh.empty()) return t;
  TransducerBuilder b;
  b.add_states(t.state_count());
  b.set_start(t.start());
  for (StateId f : t.finals()) b.add_final(f);
  for (const Arc& a : t.arcs()) {
    b.add_arc(a.from, a.to, a.in, a.out);
    if (a.in.is_any() && t.has_wildcard())
      for (Symbol s : fresh) b.add_arc(a.from, a.to, s, s);
  }
  for (Symbol s : t.sigma()) b.add_sigma(s);
  for (Symbol s : fresh) b.add_sigma(s);
  return std::move(b).build();
}

}  // namespace

Transducer::Transducer() = default;

bool Transducer::in_sigma(Symbol s) const {
  return std::binary_search(sigma_.begin(), sigma_.end(), s);
}

std::string Transducer::dump_att() const {
  std::string out;
  for (const Arc& a : arcs_) {
    out += std::to_string(a.from);
    out += '\t';
    out += std::to_string(a.to);
    out += '\t';
    out += render_symbol(a.in);
    out += '\t';
    out += render_symbol(a.out);
    out += '\n';
  }
  for (StateId f : finals_) {
    out += std::to_string(f);
    out += '\n';
  }
  return out;
}

StateId TransducerBuilder::add_state() { return num_states_++; }

StateId TransducerBuilder::add_states(uint32_t n) {
  StateId first = num_states_;
  num_states_ += n;
  return first;
}

void TransducerBuilder::set_start(StateId s) {
  start_ = s;
  has_start_ = true;
}

void TransducerBuilder::add_final(StateId s) { finals_.push_back(s); }

void TransducerBuilder::add_arc(StateId from, StateId to, Symbol in, Symbol out) {
  if (from >= num_states_ || to >= num_states_)
    throw std::logic_error("TransducerBuilder: arc references unknown state");
  if ((in.is_any() || out.is_any()) && !(in.is_any() && out.is_any()))
    throw std::logic_error("TransducerBuilder: wildcard arcs must be identity");
  arcs_.push_back({from, to, in, out});
  if (!in.is_eps() && !in.is_any()) sigma_.push_back(in);
  if (!out.is_eps() && !out.is_any()) sigma_.push_back(out);
}

StateId TransducerBuilder::add_path(StateId from, const SymSeq& in, const SymSeq& out) {
  size_t n = std::max(in.size(), out.size());
  StateId cur = from;
  if (n == 0) return cur;
  for (size_t i = 0; i < n; ++i) {
    StateId next = add_state();
    add_arc(cur, next, i < in.size() ? in[i] : Symbol::eps(), i < out.size() ? out[i] : Symbol::eps());
    cur = next;
  }
  return cur;
}

void TransducerBuilder::add_sigma(Symbol s) {
  if (!s.is_eps() && !s.is_any()) sigma_.push_back(s);
}

Transducer TransducerBuilder::build() && {
  if (!has_start_) throw std::logic_error("TransducerBuilder: no start state");
  bool wildcard = false;
  for (const Arc& a : arcs_)
    if (a.in.is_any()) wildcard = true;
  return Transducer::finish(num_states_, start_, std::move(finals_), std::move(arcs_),
                            std::move(sigma_), wildcard);
}

Transducer literal(const SymSeq& s) { return cross(s, s); }

Transducer cross(const SymSeq& in, const SymSeq& out) {
  for (Symbol s : in)
    if (s.is_eps() || s.is_any()) throw std::invalid_argument("cross: tape contains epsilon/wildcard");
  for (Symbol s : out)
    if (s.is_eps() || s.is_any()) throw std::invalid_argument("cross: tape contains epsilon/wildcard");
  TransducerBuilder b;
  StateId q0 = b.add_state();
  b.set_start(q0);
  b.add_final(b.add_path(q0, in, out));
  return std::move(b).build();
}

Transducer union_(const Transducer& a0, const Transducer& b0) {
  Transducer a = expand_unknown(a0, b0.sigma());
  Transducer b = expand_unknown(b0, a.sigma());
  TransducerBuilder bld;
  StateId q0 = bld.add_state();
  bld.set_start(q0);
  StateId ab = bld.add_states(a.state_count());
  StateId bb = bld.add_states(b.state_count());
  bld.add_arc(q0, splice(bld, a, ab), Symbol::eps(), Symbol::eps());
  bld.add_arc(q0, splice(bld, b, bb), Symbol::eps(), Symbol::eps());
  for (StateId f : a.finals()) bld.add_final(f + ab);
  for (StateId f : b.finals()) bld.add_final(f + bb);
  return std::move(bld).build();
}

Transducer concat(const Transducer& a0, const Transducer& b0) {
  Transducer a = expand_unknown(a0, b0.sigma());
  Transducer b = expand_unknown(b0, a.sigma());
  TransducerBuilder bld;
  StateId ab = bld.add_states(a.state_count());
  StateId bb = bld.add_states(b.state_count());
  bld.set_start(splice(bld, a, ab));
  StateId bstart = splice(bld, b, bb);
  for (StateId f : a.finals()) bld.add_arc(f + ab, bstart, Symbol::eps(), Symbol::eps());
  for (StateId f : b.finals()) bld.add_final(f + bb);
  return std::move(bld).build();
}

Transducer closure(const Transducer& a) {
  TransducerBuilder bld;
  StateId q0 = bld.add_state();
  bld.set_start(q0);
  bld.add_final(q0);
  StateId ab = bld.add_states(a.state_count());
  bld.add_arc(q0, splice(bld, a, ab), Symbol::eps(), Symbol::eps());
  for (StateId f : a.finals()) bld.add_arc(f + ab, q0, Symbol::eps(), Symbol::eps());
  return std::move(bld).build();
}

Transducer invert(const Transducer& a) {
  TransducerBuilder bld;
  bld.add_states(a.state_count());
  bld.set_start(a.start());
  for (StateId f : a.finals()) bld.add_final(f);
  for (const Arc& arc : a.arcs()) bld.add_arc(arc.from, arc.to, arc.out, arc.in);
  for (Symbol s : a.sigma()) bld.add_sigma(s);
  return std::move(bld).build();
}

Transducer compose(const Transducer& a0, const Transducer& b0) {
  Transducer a = expand_unknown(a0, b0.sigma());
  Transducer b = expand_unknown(b0, a.sigma());

  // product construction over pairs reachable from (start, start); the
  // wildcard acts as one ordinary symbol since the alphabets now agree
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> order;
  TransducerBuilder bld;
  auto state_of = [&](StateId qa, StateId qb) {
    auto [it, fresh] = ids.try_emplace({qa, qb}, static_cast<StateId>(order.size()));
    if (fresh) {
      order.emplace_back(qa, qb);
      bld.add_state();
    }
    return it->second;
  };
  StateId q0 = state_of(a.start(), b.start());
  bld.set_start(q0);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    auto [qa, qb] = order[qi];
    StateId q = state_of(qa, qb);
    if (a.is_final(qa) && b.is_final(qb)) bld.add_final(q);
    auto barcs = b.arcs_from(qb);
    for (const Arc& ba : barcs)
      if (ba.in.is_eps()) bld.add_arc(q, state_of(qa, ba.to), Symbol::eps(), ba.out);
    for (const Arc& aa : a.arcs_from(qa)) {
      if (aa.out.is_eps()) {
        bld.add_arc(q, state_of(aa.to, qb), aa.in, Symbol::eps());
        continue;
      }
      // match aa.out against b's input labels (binary search on sorted arcs)
      auto lo = std::lower_bound(barcs.begin(), barcs.end(), aa.out,
                                 [](const Arc& x, Symbol s) { return x.in < s; });
      for (auto it = lo; it != barcs.end() && it->in == aa.out; ++it)
        bld.add_arc(q, state_of(aa.to, it->to), aa.in, it->out);
    }
  }
  for (Symbol s : a.sigma()) bld.add_sigma(s);
  for (Symbol s : b.sigma()) bld.add_sigma(s);
  return std::move(bld).build();
}

namespace {

struct Applier {
  const Transducer& t;
  const SymSeq& input;
  ApplyOptions opt;
  std::set<SymSeq> results;
  SymSeq cur;
  // (state, output length) pairs seen since the last consuming arc; a
  // repeat means a no-progress epsilon cycle, which is pruned
  std::vector<std::pair<StateId, size_t>> trail;

  void run(StateId state, size_t pos, uint32_t eps_run) {
    if (pos == input.size() && t.is_final(state)) results.insert(cur);
    for (const Arc& a : t.arcs_from(state)) {
      if (a.in.is_eps()) {
        size_t nlen = cur.size() + (a.out.is_eps() ? 0 : 1);
        if (std::find(trail.begin(), trail.end(), std::make_pair(a.to, nlen)) != trail.end())
          continue;
        if (eps_run + 1 > opt.max_epsilon_chain) throw EpsilonBoundError(opt.max_epsilon_chain);
        trail.emplace_back(a.to, nlen);
        if (!a.out.is_eps()) cur.push_back(a.out);
        run(a.to, pos, eps_run + 1);
        if (!a.out.is_eps()) cur.pop_back();
        trail.pop_back();
      } else {
        if (pos >= input.size()) continue;
        Symbol s = input[pos];
        bool match = a.in.is_any() ? !t.in_sigma(s) : a.in == s;
        if (!match) continue;
        Symbol out = a.out.is_any() ? s : a.out;
        if (!out.is_eps()) cur.push_back(out);
        std::vector<std::pair<StateId, size_t>> saved;
        saved.swap(trail);
        run(a.to, pos + 1, 0);
        saved.swap(trail);
        if (!out.is_eps()) cur.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<SymSeq> apply_down(const Transducer& t, const SymSeq& input, ApplyOptions opt) {
  for (Symbol s : input)
    if (s.is_eps() || s.is_any())
      throw std::invalid_argument("apply_down: input contains epsilon/wildcard");
  Applier ap{t, input, opt, {}, {}, {}};
  ap.run(t.start(), 0, 0);
  return {ap.results.begin(), ap.results.end()};
}

std::vector<SymSeq> apply_up(const Transducer& t, const SymSeq& input, ApplyOptions opt) {
  return apply_down(invert(t), input, opt);
}

}  // namespace jmorph
