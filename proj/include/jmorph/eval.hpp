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

#ifndef JMORPH_EVAL_HPP
#define JMORPH_EVAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jmorph/analysis.hpp"

namespace jmorph {

// One scored occurrence: what the analyzer produced against what a human
// judged correct for this surface.
struct JudgedItem {
  std::string surface;
  std::vector<Analysis> produced;
  std::vector<Analysis> gold;
};

struct ItemScore {
  std::string surface;
  double precision = 0.0;
  bool hit = false;
};

struct EvalReport {
  size_t n_items = 0;
  double precision = 0.0;  // mean of per-item |produced ∩ gold| / |produced|
  double recall = 0.0;     // fraction of items with at least one hit
  std::vector<ItemScore> per_item;
};

// Scores the items. An empty produced set contributes item-precision 0.
// Throws EmptyEvalSetError on an empty list.
EvalReport evaluate(const std::vector<JudgedItem>& items);

// Gold corpus row: TSV `surface<TAB>lemma<TAB>class<TAB>tag1+tag2+...`,
// several rows per surface allowed; "-" or an empty tag field means the
// bare dictionary form.
struct GoldEntry {
  std::string surface;
  Analysis analysis;
};

std::vector<GoldEntry> load_gold(std::istream& in);  // throws ParseError
std::vector<GoldEntry> load_gold_file(const std::string& path);

enum class EvalMode : uint8_t {
  Token,  // consecutive rows with one surface form one item
  Type,   // all rows with one surface merge into one item
};

// Groups gold rows into items with empty produced sets; the caller fills
// produced by running its analyzer on each item's surface.
std::vector<JudgedItem> group_gold(const std::vector<GoldEntry>& entries, EvalMode mode);

std::string format_report_text(const EvalReport& report);
// One JSON object per item, then a summary object.
std::string format_report_jsonl(const EvalReport& report);

}  // namespace jmorph

#endif  // JMORPH_EVAL_HPP
