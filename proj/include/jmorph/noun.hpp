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

#ifndef JMORPH_NOUN_HPP
#define JMORPH_NOUN_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jmorph/lexicon.hpp"
#include "jmorph/tags.hpp"

namespace jmorph {

struct SegToken {
  std::string surface;
  int pos_id = 0;
  friend bool operator==(const SegToken&, const SegToken&) = default;
};

// A pre-segmented input line: class marker plus (surface, pos id) pairs.
struct SegmentedInput {
  char marker = 'N';
  std::vector<SegToken> tokens;
  friend bool operator==(const SegmentedInput&, const SegmentedInput&) = default;
};

// Parses `<marker>#surface/pos_id surface/pos_id ...$`. Surfaces are kept
// byte-exact. Throws FormatError with a 1-based byte column on deviation.
SegmentedInput parse_line(std::string_view line);

enum class PosRole : uint8_t {
  HonorificPrefix,
  NounHead,
  HonorificSuffix,
  CollectiveSuffix,
  Pronoun,
  PossessiveNo,
  Other,
};

std::string_view role_name(PosRole r);

// pos_id -> role. Ids vary across tagger dictionary versions, so the
// default covers the conventional ids and a TSV file can override it.
class PosRoleMap {
 public:
  static PosRoleMap defaults();
  // TSV `pos_id<TAB>role`; '#' comments and blank lines ignored.
  static PosRoleMap load(std::istream& in);
  static PosRoleMap load_file(const std::string& path);

  void set(int pos_id, PosRole role) { map_[pos_id] = role; }
  PosRole role_of(int pos_id) const;  // Other when unmapped

 private:
  std::map<int, PosRole> map_;
};

// Single attribute analysis of a noun phrase. For pronoun heads `head` is
// the marker string "prn" and `surface` keeps the actual pronoun form.
struct NounAnalysis {
  std::string head;
  std::string surface;  // head token as written (debug aid for prn heads)
  std::vector<AttrTag> attrs;
  friend bool operator==(const NounAnalysis&, const NounAnalysis&) = default;
};

std::string to_string(const NounAnalysis& a);  // head<TAB>attr1 attr2 ...

// Applies the affix rule table: honorific prefixes mark politeness,
// honorific suffixes mark animacy (and formality where the suffix carries
// it), collective suffixes mark collectivity or promote pronoun number to
// plural, and a trailing no-particle marks possession.
NounAnalysis analyze_noun(const SegmentedInput& input, const PosRoleMap& roles,
                          const Lexicon& lex);

}  // namespace jmorph

#endif  // JMORPH_NOUN_HPP
