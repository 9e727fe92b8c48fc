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

#ifndef JMORPH_VERB_HPP
#define JMORPH_VERB_HPP

#include <string>
#include <string_view>
#include <vector>

#include "jmorph/analysis.hpp"
#include "jmorph/fst.hpp"
#include "jmorph/lexicon.hpp"

namespace jmorph {

// The six conjugation bases. Godan verbs map each base to a vowel column of
// the lemma's consonant row; ichidan verbs share one stem for the first two
// and build the rest on the lemma; the irregular verbs and i-adjectives use
// lexicalized tables.
enum class StemBase : uint8_t {
  Irrealis,      // あ column
  Continuative,  // い column
  Terminal,      // う column (the lemma itself)
  Attributive,   // same surface as terminal in the modern language
  Hypothetical,  // え column
  Imperative,    // え column (godan), ろ/よ (ichidan)
};

// Base form of a conjugable lexeme. Throws NotConjugableError for
// na-adjectives, which inflect through the copula instead of a stem.
std::string stem(const Lexeme& lex, StemBase base);

// Lexical tape for a reading: lemma characters, then the class tag, then
// the attribute tags in morpheme order.
SymSeq lexical_input(std::string_view lemma, AttrTag cls, const std::vector<AttrTag>& tags);

// Parses a lexical tape back into an Analysis. Throws std::invalid_argument
// when the sequence is not lemma chars + class tag + attr tags.
Analysis parse_lexical(const SymSeq& seq);

// Maps lexical tapes to pre-phonological surface strings (stem base kana
// spliced in, euphony boundaries still marked). Deliberately permits every
// suffix order its continuation classes allow, so it over-generates.
Transducer morphotactics(const Lexicon& lex);

// Surface realization cascade: godan te/ta euphony at the marked stem
// boundary, then the optional colloquial contractions (ている→てる,
// てしまう→ちゃう) as parallel outputs.
Transducer phonology();

// compose(morphotactics, phonology). Throws EmptyLexiconError.
Transducer build_generator(const Lexicon& lex);

// Compiled generator plus its inversion. Immutable once constructed;
// generate/analyze are safe to call concurrently.
class VerbGrammar {
 public:
  explicit VerbGrammar(Lexicon lex);

  // All surfaces for the lemma under the given tag sequence, sorted. An
  // empty tag list yields the dictionary form. Throws UnknownLemmaError.
  std::vector<std::string> generate(std::string_view lemma,
                                    const std::vector<AttrTag>& tags) const;

  // Every reading of the surface, deduplicated, ordered by (lemma, class,
  // tags). Unanalyzable input returns an empty set.
  std::vector<Analysis> analyze(std::string_view surface) const;

  const Transducer& generator() const { return generator_; }
  const Transducer& analyzer() const { return analyzer_; }
  const Lexicon& lexicon() const { return lex_; }

 private:
  Lexicon lex_;
  Transducer generator_;
  Transducer analyzer_;
};

}  // namespace jmorph

#endif  // JMORPH_VERB_HPP
