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

#include "jmorph/symbols.hpp"

#include <stdexcept>

#include "jmorph/utf8.hpp"

namespace jmorph {

SymSeq to_symbols(std::string_view utf8) {
  SymSeq out;
  for (char32_t c : utf8_decode(utf8)) out.push_back(Symbol::chr(c));
  return out;
}

SymSeq parse_symbols(std::string_view spec) {
  SymSeq out;
  std::u32string text = utf8_decode(spec);
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == U'[') {
      size_t close = text.find(U']', i + 1);
      if (close == std::u32string::npos) throw std::invalid_argument("parse_symbols: unclosed '['");
      std::string name = utf8_encode(std::u32string_view(text).substr(i + 1, close - i - 1));
      if (name == "eu") {
        out.push_back(Symbol::euphony_mark());
      } else if (auto t = tag_from_name(name)) {
        out.push_back(Symbol::attr(*t));
      } else {
        throw std::invalid_argument("parse_symbols: unknown tag name '" + name + "'");
      }
      i = close + 1;
    } else {
      out.push_back(Symbol::chr(text[i]));
      ++i;
    }
  }
  return out;
}

std::string render_symbol(Symbol s) {
  if (s.is_eps()) return "<eps>";
  if (s.is_any()) return "<any>";
  if (s.is_char()) {
    std::string out;
    utf8_append(out, s.chr_value());
    return out;
  }
  uint32_t id = s.tag_id();
  if (id < kAttrTagCount) return "[" + std::string(tag_name(static_cast<AttrTag>(id))) + "]";
  if (id == Symbol::kEuphonyMarkId) return "[eu]";
  return "[tag" + std::to_string(id) + "]";
}

std::string render_symbols(const SymSeq& seq) {
  std::string out;
  for (Symbol s : seq) out += render_symbol(s);
  return out;
}

std::string render_string(const SymSeq& seq) {
  std::string out;
  for (Symbol s : seq) {
    if (!s.is_char()) throw std::logic_error("render_string: non-character symbol " + render_symbol(s));
    utf8_append(out, s.chr_value());
  }
  return out;
}

}  // namespace jmorph
