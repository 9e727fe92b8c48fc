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

#ifndef JMORPH_REWRITE_HPP
#define JMORPH_REWRITE_HPP

#include <vector>

#include "jmorph/fst.hpp"

namespace jmorph {

// Obligatory left-to-right replacement: maps any string to the same string
// with every non-overlapping occurrence of left_ctx·lhs·right_ctx replaced
// by left_ctx·rhs·right_ctx. When two candidate occurrences start at the
// same position, the shorter pattern wins (the scanner matches eagerly).
// lhs must be non-empty.
Transducer rewrite_rule(const SymSeq& lhs, const SymSeq& rhs, const SymSeq& left_ctx = {},
                        const SymSeq& right_ctx = {});

struct ReplacePattern {
  SymSeq pattern;      // full match, contexts already folded in
  SymSeq replacement;
};

// Scanner over several patterns at once, equivalent to composing the
// single-pattern rules when the patterns cannot interact. Preconditions
// checked at build time: every pattern non-empty, and no pattern may occur
// strictly inside the scanner's pending window (i.e. no pattern is a proper
// suffix of another pattern's prefix extended by one symbol); rule sets that
// violate this need the full two-level construction, which this toolkit
// deliberately avoids. With `optional`, each matched window independently
// yields both the replaced and the original text.
Transducer build_replace(const std::vector<ReplacePattern>& rules, bool optional);

}  // namespace jmorph

#endif  // JMORPH_REWRITE_HPP
