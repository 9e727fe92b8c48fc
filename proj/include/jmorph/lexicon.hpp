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

#ifndef JMORPH_LEXICON_HPP
#define JMORPH_LEXICON_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jmorph/tags.hpp"

namespace jmorph {

enum class ConjGroup : uint8_t {
  Ichidan,
  GodanU,
  GodanK,
  GodanG,
  GodanS,
  GodanT,
  GodanN,
  GodanB,
  GodanM,
  GodanR,
  SaIrregular,
  KaIrregular,
  IAdjective,
  NaAdjective,
};

std::string_view group_name(ConjGroup g);
std::optional<ConjGroup> group_from_name(std::string_view name);
bool is_godan(ConjGroup g);
bool is_verb_group(ConjGroup g);

enum class LexFlag : uint8_t {
  // Geminate te/ta forms (行って rather than the row-regular 行いて).
  GeminateTe = 1,
};

struct Lexeme {
  std::string lemma;
  std::string reading;  // kana reading; may be empty for kana lemmas
  ConjGroup group;
  uint8_t flags = 0;

  bool has_flag(LexFlag f) const { return flags & static_cast<uint8_t>(f); }
  friend bool operator==(const Lexeme&, const Lexeme&) = default;
};

class Lexicon {
 public:
  // Throws InvariantError on bad lemma shape or duplicate (lemma, group).
  // The line number is carried into the error for loader diagnostics.
  void add(Lexeme lex, size_t line = 0);
  const std::vector<Lexeme>& entries() const { return entries_; }
  // All entries sharing a lemma (homographs across groups are allowed).
  std::vector<const Lexeme*> find(std::string_view lemma) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::vector<Lexeme> entries_;
};

// TSV with header "lemma<TAB>reading<TAB>group", optional fourth flags
// column (comma-separated), '#' comment lines and blank lines ignored.
// Throws ParseError/InvariantError with 1-based line numbers and
// EmptyLexiconError when no entries survive.
Lexicon load_lexicon(std::istream& in);
Lexicon load_lexicon_file(const std::string& path);
std::string save_lexicon(const Lexicon& lex);

// Personal pronoun inventory. Attribute fields are absent when the table
// leaves them unmarked (e.g. 私 has no gender and no formality).
struct PronounEntry {
  std::string surface;
  AttrTag person;                      // per1/per2/per3
  AttrTag number;                      // sg/pl
  std::optional<AttrTag> gender;       // male/female
  std::optional<AttrTag> formality;    // formal/informal
};

std::span<const PronounEntry> pronoun_table();
const PronounEntry* pronoun_lookup(std::string_view surface);

}  // namespace jmorph

#endif  // JMORPH_LEXICON_HPP
