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

#ifndef JMORPH_TAGS_HPP
#define JMORPH_TAGS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace jmorph {

// Closed registry of morphological attribute tags. The numeric values are
// the canonical ordering used wherever tag sequences are compared, and the
// names are the stable ASCII identifiers used in all serialized output.
enum class AttrTag : uint8_t {
  // verb/adjective inflection
  pol,
  pfv,
  neg,
  pasv,
  te,
  prog,
  cond,
  vol,
  imp,
  caus,
  pot,
  // lexical class markers
  v,
  adj,
  adv,
  // noun attributes
  polite,
  formal,
  informal,
  animate,
  collective,
  possessive,
  // pronoun attributes
  per1,
  per2,
  per3,
  sg,
  pl,
  male,
  female,
  prn,
};

inline constexpr uint32_t kAttrTagCount = 28;

inline constexpr std::array<std::string_view, kAttrTagCount> kAttrTagNames = {
    "pol",    "pfv",    "neg",      "pasv",    "te",         "prog",       "cond",
    "vol",    "imp",    "caus",     "pot",     "v",          "adj",        "adv",
    "polite", "formal", "informal", "animate", "collective", "possessive", "per1",
    "per2",   "per3",   "sg",       "pl",      "male",       "female",     "prn",
};

inline constexpr std::string_view tag_name(AttrTag t) {
  return kAttrTagNames[static_cast<uint32_t>(t)];
}

inline std::optional<AttrTag> tag_from_name(std::string_view name) {
  for (uint32_t i = 0; i < kAttrTagCount; ++i)
    if (kAttrTagNames[i] == name) return static_cast<AttrTag>(i);
  return std::nullopt;
}

}  // namespace jmorph

#endif  // JMORPH_TAGS_HPP
