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

#ifndef JMORPH_POSTFILTER_HPP
#define JMORPH_POSTFILTER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jmorph/analysis.hpp"

namespace jmorph {

// Morpheme-order constraints: precedence pairs (every occurrence of the
// first tag must come before every occurrence of the second; a pair of a
// tag with itself bans repetition) plus a set of terminal tags that must
// end the sequence. One exception is built in: te may be followed by
// exactly one prog, and prog always requires an immediately preceding te.
struct OrderingRules {
  std::vector<std::pair<AttrTag, AttrTag>> precedence;
  std::vector<AttrTag> terminals;

  // Slot template: causative < passive < potential < polite < negation,
  // all before the terminal slot {te, cond, vol, imp, pfv, prog}; voice
  // tags may not repeat.
  static OrderingRules defaults();
  // One rule per line: `tagA<TAB>tagB` (A precedes B) or `terminal<TAB>tag`.
  // The file defines the whole relation; it does not extend the defaults.
  // Throws ParseError on malformed lines, InvariantError on a cyclic
  // precedence relation.
  static OrderingRules load(std::istream& in);
  static OrderingRules load_file(const std::string& path);
};

bool valid_order(const std::vector<AttrTag>& tags, const OrderingRules& rules);

// Keeps every analysis whose tag sequence satisfies the rules and whose
// lemma matches the upstream tagger's lemma when one is supplied.
std::vector<Analysis> filter(const std::vector<Analysis>& analyses,
                             const std::optional<std::string>& mecab_lemma,
                             const OrderingRules& rules);

}  // namespace jmorph

#endif  // JMORPH_POSTFILTER_HPP
