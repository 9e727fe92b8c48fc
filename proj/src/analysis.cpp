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

#include "jmorph/analysis.hpp"

namespace jmorph {

std::string to_string(const Analysis& a) {
  std::string out = a.lemma;
  out += '[';
  out += tag_name(a.cls);
  out += ']';
  for (AttrTag t : a.tags) {
    out += '[';
    out += tag_name(t);
    out += ']';
  }
  return out;
}

}  // namespace jmorph
