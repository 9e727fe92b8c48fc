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

#ifndef JMORPH_ANALYSIS_HPP
#define JMORPH_ANALYSIS_HPP

#include <compare>
#include <string>
#include <vector>

#include "jmorph/tags.hpp"

namespace jmorph {

// One reading of an inflected word: dictionary form, word class and the
// inflection tags in the order the grammar emits them.
struct Analysis {
  std::string lemma;
  AttrTag cls;                 // AttrTag::v or AttrTag::adj
  std::vector<AttrTag> tags;   // inflection attributes, grammar order

  friend auto operator<=>(const Analysis&, const Analysis&) = default;
};

std::string to_string(const Analysis& a);

}  // namespace jmorph

#endif  // JMORPH_ANALYSIS_HPP
