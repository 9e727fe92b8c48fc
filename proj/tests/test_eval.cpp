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

#include <algorithm>
#include <random>
#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "jmorph/errors.hpp"
#include "jmorph/eval.hpp"

using namespace jmorph;
using enum AttrTag;

namespace {

const Analysis kMiru{"見る", v, {pot}};
const Analysis kMirareru{"見る", v, {pasv}};
const Analysis kKaku{"書く", v, {te}};
const Analysis kTakai{"高い", adj, {neg}};

std::vector<GoldEntry> parse_gold(const std::string& text) {
  std::istringstream in(text);
  return load_gold(in);
}

}  // namespace

TEST_CASE("item precision is the overlap share of produced analyses") {
  JudgedItem half{"見られる", {kMiru, kMirareru}, {kMirareru}};
  JudgedItem miss{"書いて", {}, {kKaku}};
  JudgedItem full{"高くない", {kTakai}, {kTakai}};

  EvalReport rep = evaluate({half, miss, full});
  REQUIRE(rep.per_item.size() == 3);
  CHECK(rep.per_item[0].precision == doctest::Approx(0.5));
  CHECK(rep.per_item[0].hit);
  CHECK(rep.per_item[1].precision == 0.0);  // nothing produced
  CHECK(!rep.per_item[1].hit);
  CHECK(rep.per_item[2].precision == doctest::Approx(1.0));
  CHECK(rep.n_items == 3);
  CHECK(rep.precision == doctest::Approx(0.5));
  CHECK(rep.recall == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("precision averages per item not per analysis") {
  JudgedItem a{"x", {kTakai}, {kTakai}};
  JudgedItem b{"y", {kMiru, kMirareru}, {kMirareru}};
  EvalReport rep = evaluate({a, b});
  CHECK(rep.precision == doctest::Approx(0.75));
  CHECK(rep.recall == doctest::Approx(1.0));
}

TEST_CASE("duplicate produced analyses collapse before scoring") {
  JudgedItem item{"見られる", {kMirareru, kMirareru, kMiru}, {kMirareru}};
  EvalReport rep = evaluate({item});
  CHECK(rep.per_item[0].precision == doctest::Approx(0.5));
}

TEST_CASE("an empty item list is an error") {
  CHECK_THROWS_AS(evaluate({}), EmptyEvalSetError);
}

TEST_CASE("gold rows parse surfaces classes and tag chains") {
  auto entries = parse_gold(
      "# comment\n"
      "\n"
      "食べた\t食べる\tv\tpfv\r\n"
      "高い\t高い\tadj\t-\n"
      "静かな\t静か\tadj\t\n"
      "信じられている\t信じる\tv\tpasv+te+prog\n");
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].surface == "食べた");
  CHECK(entries[0].analysis == Analysis{"食べる", v, {pfv}});
  CHECK(entries[1].analysis == Analysis{"高い", adj, {}});
  CHECK(entries[2].analysis == Analysis{"静か", adj, {}});
  CHECK(entries[3].analysis == Analysis{"信じる", v, {pasv, te, prog}});
}

TEST_CASE("malformed gold rows raise ParseError with the line number") {
  try {
    parse_gold("食べた\t食べる\tv\tpfv\n食べた\t食べる\tnoun\tpfv\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_gold("x\ty\tpol\t-\n"), ParseError);  // tag, not a class
  CHECK_THROWS_AS(parse_gold("x\ty\tv\n"), ParseError);       // three fields
  CHECK_THROWS_AS(parse_gold("x\ty\tv\tshiny\n"), ParseError);
}

TEST_CASE("token mode splits repeated surfaces and type mode merges them") {
  auto entries = parse_gold(
      "見られる\t見る\tv\tpasv\n"
      "見られる\t見る\tv\tpot\n"
      "書いて\t書く\tv\tte\n"
      "見られる\t見る\tv\tpasv\n");

  auto tokens = group_gold(entries, EvalMode::Token);
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].surface == "見られる");
  CHECK(tokens[0].gold.size() == 2);
  CHECK(tokens[1].surface == "書いて");
  CHECK(tokens[2].surface == "見られる");
  CHECK(tokens[2].gold == std::vector<Analysis>{{"見る", v, {pasv}}});

  auto types = group_gold(entries, EvalMode::Type);
  REQUIRE(types.size() == 2);
  CHECK(types[0].surface == "見られる");
  CHECK(types[0].gold.size() == 2);  // duplicate pasv row collapsed
  CHECK(types[1].surface == "書いて");
  for (const auto& item : types) CHECK(item.produced.empty());
}

TEST_CASE("text report pads surfaces and prints a summary line") {
  EvalReport rep;
  rep.n_items = 2;
  rep.precision = 0.75;
  rep.recall = 1.0;
  rep.per_item = {{"a", 1.0, true}, {"b", 0.5, true}};
  CHECK(format_report_text(rep) ==
        "surface  precision  hit\n"
        "a        1.0000     yes\n"
        "b        0.5000     yes\n"
        "items 2  precision 0.7500  recall 1.0000\n");
}

TEST_CASE("jsonl report emits one object per item plus a summary") {
  JudgedItem a{"x", {kTakai}, {kTakai}};
  JudgedItem b{"y", {}, {kMiru}};
  std::istringstream lines(format_report_jsonl(evaluate({a, b})));
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["surface"] == "x");
  CHECK(rows[0]["precision"] == 1.0);
  CHECK(rows[0]["hit"] == true);
  CHECK(rows[1]["hit"] == false);
  CHECK(rows[2]["items"] == 2);
  CHECK(rows[2]["precision"] == 0.5);
  CHECK(rows[2]["recall"] == 0.5);
}

TEST_CASE("perfect output scores one and dropping a wrong guess never hurts") {
  std::mt19937 rng(8080);
  const std::vector<Analysis> pool = {kMiru, kMirareru, kKaku, kTakai, {"する", v, {}}};
  std::uniform_int_distribution<size_t> d_items(1, 6), d_pick(0, pool.size() - 1),
      d_len(0, 3);
  for (int round = 0; round < 200; ++round) {
    std::vector<JudgedItem> items;
    size_t n = d_items(rng);
    for (size_t i = 0; i < n; ++i) {
      JudgedItem item;
      item.surface = "s" + std::to_string(i);
      for (size_t k = d_len(rng); k > 0; --k) item.gold.push_back(pool[d_pick(rng)]);
      if (item.gold.empty()) item.gold.push_back(pool[d_pick(rng)]);
      for (size_t k = d_len(rng); k > 0; --k) item.produced.push_back(pool[d_pick(rng)]);
      items.push_back(std::move(item));
    }

    EvalReport rep = evaluate(items);
    REQUIRE(rep.per_item.size() == items.size());
    size_t hits = 0;
    for (const ItemScore& s : rep.per_item) {
      REQUIRE(s.precision >= 0.0);
      REQUIRE(s.precision <= 1.0);
      hits += s.hit ? 1 : 0;
    }
    REQUIRE(rep.recall == doctest::Approx(double(hits) / double(items.size())));

    // echoing the gold back is a perfect run
    std::vector<JudgedItem> echoed = items;
    for (JudgedItem& item : echoed) item.produced = item.gold;
    EvalReport perfect = evaluate(echoed);
    REQUIRE(perfect.precision == doctest::Approx(1.0));
    REQUIRE(perfect.recall == doctest::Approx(1.0));

    // deleting a produced analysis that is not in the gold cannot lower any score
    std::vector<JudgedItem> pruned = items;
    for (JudgedItem& item : pruned) {
      auto wrong = std::find_if(item.produced.begin(), item.produced.end(), [&](const Analysis& a) {
        return std::find(item.gold.begin(), item.gold.end(), a) == item.gold.end();
      });
      if (wrong != item.produced.end()) item.produced.erase(wrong);
    }
    EvalReport after = evaluate(pruned);
    for (size_t i = 0; i < items.size(); ++i) {
      REQUIRE(after.per_item[i].precision >= rep.per_item[i].precision - 1e-12);
      REQUIRE(after.per_item[i].hit == rep.per_item[i].hit);
    }
    REQUIRE(after.recall == doctest::Approx(rep.recall));
  }
}

TEST_CASE("the shipped gold corpora load and group cleanly") {
  auto verbs = load_gold_file(std::string(JMORPH_DATA_DIR) + "/gold/verbs.tsv");
  CHECK(verbs.size() >= 9);
  CHECK(group_gold(verbs, EvalMode::Token).size() == 7);
  auto adjectives = load_gold_file(std::string(JMORPH_DATA_DIR) + "/gold/adjectives.tsv");
  CHECK(group_gold(adjectives, EvalMode::Token).size() == 5);
}
