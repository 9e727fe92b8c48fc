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

#ifndef JMORPH_SYMBOLS_HPP
#define JMORPH_SYMBOLS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jmorph/tags.hpp"

namespace jmorph {

// Tape symbol: epsilon, a Unicode character, a tag, or the unknown-symbol
// wildcard. Tags cover the AttrTag registry plus internal boundary markers
// used between a stem and a phonology-sensitive suffix. The wildcard stands
// for "any symbol outside this machine's alphabet" and only ever appears on
// identity arcs; it is what lets replacement transducers pass arbitrary text
// through without enumerating Unicode.
class Symbol {
 public:
  static constexpr uint32_t kEpsCode = 0;
  static constexpr uint32_t kCharBase = 1;                        // code = codepoint + 1
  static constexpr uint32_t kTagBase = 0x110001;                  // code = kTagBase + tag id
  static constexpr uint32_t kAnyCode = 0x7FFFFFFF;

  // Internal marker tag ids start above the attr registry.
  static constexpr uint32_t kEuphonyMarkId = 64;  // godan stem boundary before te/ta

  constexpr Symbol() : code_(kEpsCode) {}

  static constexpr Symbol eps() { return Symbol(kEpsCode); }
  static constexpr Symbol any() { return Symbol(kAnyCode); }
  static constexpr Symbol chr(char32_t c) { return Symbol(kCharBase + static_cast<uint32_t>(c)); }
  static constexpr Symbol tag(uint32_t tag_id) { return Symbol(kTagBase + tag_id); }
  static constexpr Symbol attr(AttrTag t) { return tag(static_cast<uint32_t>(t)); }
  static constexpr Symbol euphony_mark() { return tag(kEuphonyMarkId); }

  constexpr bool is_eps() const { return code_ == kEpsCode; }
  constexpr bool is_any() const { return code_ == kAnyCode; }
  constexpr bool is_char() const { return code_ >= kCharBase && code_ < kCharBase + 0x110000; }
  constexpr bool is_tag() const { return code_ >= kTagBase && code_ != kAnyCode; }
  constexpr bool is_attr() const { return is_tag() && tag_id() < kAttrTagCount; }

  constexpr char32_t chr_value() const { return static_cast<char32_t>(code_ - kCharBase); }
  constexpr uint32_t tag_id() const { return code_ - kTagBase; }
  constexpr AttrTag attr_value() const { return static_cast<AttrTag>(tag_id()); }
  constexpr uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Symbol a, Symbol b) = default;

 private:
  explicit constexpr Symbol(uint32_t code) : code_(code) {}
  uint32_t code_;
};

using SymSeq = std::vector<Symbol>;

// UTF-8 text -> character symbols.
SymSeq to_symbols(std::string_view utf8);

// Text with bracketed tag names ("言う[v][pfv]", "[eu]") -> symbols.
SymSeq parse_symbols(std::string_view spec);

// Inverse of parse_symbols; epsilon renders as <eps>, the wildcard as <any>.
std::string render_symbols(const SymSeq& seq);
std::string render_symbol(Symbol s);

// Character-only sequences -> UTF-8; throws std::logic_error on tags.
std::string render_string(const SymSeq& seq);

}  // namespace jmorph

#endif  // JMORPH_SYMBOLS_HPP
