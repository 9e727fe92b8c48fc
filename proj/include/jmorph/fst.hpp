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

#ifndef JMORPH_FST_HPP
#define JMORPH_FST_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jmorph/symbols.hpp"

namespace jmorph {

using StateId = uint32_t;

struct Arc {
  StateId from;
  StateId to;
  Symbol in;
  Symbol out;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Unweighted finite-state transducer over Symbol tapes. Instances are
// immutable: every operation returns a new machine, trimmed (only states on
// some accepting path survive) with arcs sorted by (from, in), so concurrent
// application needs no locking. `sigma` is the machine's known alphabet;
// wildcard arcs match exactly the symbols outside it.
class Transducer {
 public:
  Transducer();  // empty relation: one start state, no finals, no arcs

  uint32_t state_count() const { return state_count_; }
  StateId start() const { return start_; }
  const std::vector<StateId>& finals() const { return finals_; }
  bool is_final(StateId s) const { return final_mask_[s] != 0; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const Arc> arcs_from(StateId s) const {
    return {arcs_.data() + offsets_[s], arcs_.data() + offsets_[s + 1]};
  }
  const std::vector<Symbol>& sigma() const { return sigma_; }
  bool in_sigma(Symbol s) const;
  bool has_wildcard() const { return has_wildcard_; }

  // AT&T-style dump: one "from<TAB>to<TAB>in<TAB>out" line per arc followed
  // by one line per final state.
  std::string dump_att() const;

 private:
  friend class TransducerBuilder;
  // Trims to accepting paths, renumbers states BFS-stably, sorts arcs by
  // (from, in, out, to), and freezes the result.
  static Transducer finish(uint32_t num_states, StateId start, std::vector<StateId> finals,
                           std::vector<Arc> arcs, std::vector<Symbol> sigma, bool has_wildcard);

  uint32_t state_count_ = 1;
  StateId start_ = 0;
  std::vector<StateId> finals_;
  std::vector<uint8_t> final_mask_ = {0};
  std::vector<Arc> arcs_;
  std::vector<uint32_t> offsets_ = {0, 0};
  std::vector<Symbol> sigma_;
  bool has_wildcard_ = false;
};

// Mutable construction surface; build() trims, sorts and freezes.
class TransducerBuilder {
 public:
  StateId add_state();
  StateId add_states(uint32_t n);  // returns id of the first
  void set_start(StateId s);
  void add_final(StateId s);
  // Wildcard arcs must be identity (any:any); anything else is a logic error.
  void add_arc(StateId from, StateId to, Symbol in, Symbol out);
  // Convenience: arc chain emitting `out` while consuming `in`, shorter side
  // padded with epsilon. Returns the state the chain ends in.
  StateId add_path(StateId from, const SymSeq& in, const SymSeq& out);
  void add_sigma(Symbol s);
  uint32_t state_count() const { return num_states_; }

  Transducer build() &&;

 private:
  uint32_t num_states_ = 0;
  bool has_start_ = false;
  StateId start_ = 0;
  std::vector<StateId> finals_;
  std::vector<Arc> arcs_;
  std::vector<Symbol> sigma_;
};

// Construction algebra. Binary operations first harmonize alphabets: each
// side's wildcard arcs are instantiated over the symbols only the other side
// knows, so the wildcard keeps meaning "unknown to both".
Transducer literal(const SymSeq& s);
Transducer cross(const SymSeq& in, const SymSeq& out);
Transducer union_(const Transducer& a, const Transducer& b);
Transducer concat(const Transducer& a, const Transducer& b);
Transducer closure(const Transducer& a);
Transducer compose(const Transducer& a, const Transducer& b);
Transducer invert(const Transducer& a);

struct ApplyOptions {
  // Longest run of consecutive epsilon-input arcs a path may take. Pure
  // no-progress epsilon cycles are pruned instead of counted; only chains
  // that keep growing the output can hit the bound.
  uint32_t max_epsilon_chain = 64;
};

// All outputs the machine relates to `input`, deduplicated and sorted
// lexicographically. `input` must not contain epsilon.
std::vector<SymSeq> apply_down(const Transducer& t, const SymSeq& input, ApplyOptions opt = {});
// apply_down against the inverted machine.
std::vector<SymSeq> apply_up(const Transducer& t, const SymSeq& input, ApplyOptions opt = {});

}  // namespace jmorph

#endif  // JMORPH_FST_HPP
