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

#ifndef JMORPH_ERRORS_HPP
#define JMORPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jmorph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file content (lexicon, pos map, ordering rules, gold data).
struct ParseError : Error {
  size_t line;
  ParseError(size_t line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Well-formed file whose content breaks a structural guarantee.
struct InvariantError : Error {
  size_t line;
  InvariantError(size_t line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Malformed pre-segmented input line; column is a 1-based byte offset.
struct FormatError : Error {
  size_t column;
  FormatError(size_t column_, const std::string& what_)
      : Error("column " + std::to_string(column_) + ": " + what_), column(column_) {}
};

// A part-of-speech id with no mapped role, or a token whose role cannot
// attach at its position in the input.
struct UnknownRoleError : Error {
  int pos_id;
  UnknownRoleError(int pos_id_, const std::string& what_) : Error(what_), pos_id(pos_id_) {}
};

// Noun input consisting only of affixes.
struct EmptyHeadError : Error {
  EmptyHeadError() : Error("no head token in noun input") {}
};

// stem() on a lexeme class that has no conjugation bases.
struct NotConjugableError : Error {
  using Error::Error;
};

struct UnknownLemmaError : Error {
  std::string lemma;
  explicit UnknownLemmaError(const std::string& lemma_)
      : Error("unknown lemma: " + lemma_), lemma(lemma_) {}
};

struct EmptyLexiconError : Error {
  EmptyLexiconError() : Error("lexicon has no entries") {}
};

struct EmptyEvalSetError : Error {
  EmptyEvalSetError() : Error("evaluation set is empty") {}
};

// A transducer application path exceeded the consecutive epsilon-input
// bound; signals a pathological grammar rather than a normal miss.
struct EpsilonBoundError : Error {
  EpsilonBoundError(uint32_t bound)
      : Error("epsilon chain exceeded bound of " + std::to_string(bound)) {}
};

}  // namespace jmorph

#endif  // JMORPH_ERRORS_HPP
