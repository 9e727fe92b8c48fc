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

// Acceptance harness: eight release criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jmorph/errors.hpp"
#include "jmorph/eval.hpp"
#include "jmorph/fst.hpp"
#include "jmorph/lexicon.hpp"
#include "jmorph/noun.hpp"
#include "jmorph/postfilter.hpp"
#include "jmorph/symbols.hpp"
#include "jmorph/verb.hpp"
#include "support/oracle.hpp"

using namespace jmorph;
using jmorph::testing::all_inputs;
using jmorph::testing::oracle_apply;
using jmorph::testing::random_machine;
using enum AttrTag;

namespace {

struct Check {
  bool ok = true;
  std::string detail;  // first failure, shown in the FAIL line
  std::string note;    // shown even on PASS
  size_t count = 0;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool has_reading(const std::vector<Analysis>& readings, const Analysis& want) {
  return std::find(readings.begin(), readings.end(), want) != readings.end();
}

std::string tagset_str(const std::vector<AttrTag>& tags) {
  std::string out;
  for (AttrTag t : tags) {
    if (!out.empty()) out += '+';
    out += std::string(tag_name(t));
  }
  return out.empty() ? "-" : out;
}

std::set<std::string> gen_set(const VerbGrammar& g, const std::string& lemma,
                              const std::vector<AttrTag>& tags) {
  auto forms = g.generate(lemma, tags);
  return {forms.begin(), forms.end()};
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const std::string& x : s) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out;
}

// C1: the published example analyses reproduce exactly and quickly.
Check c1_golden_suite(const VerbGrammar& g, const Lexicon& lex, double build_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  PosRoleMap roles = PosRoleMap::defaults();
  auto noun = [&](const char* line) {
    return to_string(analyze_noun(parse_line(line), roles, lex));
  };
  c.expect(noun("N#お/30 医者/38 様/55$") == "医者\tformal animate polite", "honorific noun row");
  c.expect(noun("N#少年/38 達/51$") == "少年\tcollective", "collective noun row");
  c.expect(noun("N#彼女/59 達/51$") == "prn\tper3 female pl informal", "pronoun plural row");

  struct VaRow {
    const char* surface;
    Analysis want;
  };
  const std::vector<VaRow> rows = {
      {"言った", {"言う", v, {pfv}}},
      {"助かりでした", {"助かる", v, {pol, pfv}}},
      {"信じられている", {"信じる", v, {pasv, te, prog}}},
      {"信じられている", {"信ずる", v, {pasv, te, prog}}},
      {"見られない", {"見る", v, {pot, neg}}},
      {"見られない", {"見る", v, {pasv, neg}}},
      {"容易な", {"容易", adj, {adv}}},
      {"悪くない", {"悪い", adj, {neg}}},
      {"奇麗だった", {"奇麗", adj, {pfv}}},
      {"好きです", {"好く", v, {pol}}},
      {"好きです", {"好き", adj, {pol}}},
      {"美しかった", {"美しい", adj, {pfv}}},
      {"寝て", {"寝る", v, {te}}},
      {"食べて", {"食べる", v, {te}}},
  };
  for (const VaRow& row : rows)
    c.expect(has_reading(g.analyze(row.surface), row.want),
             std::string(row.surface) + " misses " + to_string(row.want));

  c.expect(gen_set(g, "寝る", {te}) == std::set<std::string>{"寝て"}, "generate 寝る te");
  c.expect(gen_set(g, "食べる", {te}) == std::set<std::string>{"食べて"}, "generate 食べる te");

  double total = build_seconds + seconds_since(t0);
  c.expect(total < 5.0, "suite took " + std::to_string(total) + " s");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f s incl. grammar build", total);
  c.note = buf;
  return c;
}

// C2: application equals naive path enumeration; algebraic laws hold.
Check c2_fst_oracle() {
  Check c;
  std::mt19937 rng(777001);
  const auto inputs4 = all_inputs(4);
  for (int i = 0; i < 500 && c.ok; ++i) {
    Transducer t = random_machine(rng);
    for (const SymSeq& in : inputs4) {
      auto got = apply_down(t, in);
      auto want = oracle_apply(t, in);
      c.expect(std::set<SymSeq>(got.begin(), got.end()) == want && got.size() == want.size(),
               "apply_down disagrees with the oracle on machine " + std::to_string(i));
      if (!c.ok) break;
    }
    Transducer back = invert(invert(t));
    c.expect(back.arcs() == t.arcs() && back.finals() == t.finals() && back.start() == t.start(),
             "invert is not an involution on machine " + std::to_string(i));
  }
  const auto inputs3 = all_inputs(3);
  for (int i = 0; i < 150 && c.ok; ++i) {
    Transducer a = random_machine(rng);
    Transducer b = random_machine(rng);
    Transducer d = random_machine(rng);
    Transducer left = compose(compose(a, b), d);
    Transducer right = compose(a, compose(b, d));
    for (const SymSeq& in : inputs3) {
      c.expect(apply_down(left, in) == apply_down(right, in),
               "compose associativity fails on triple " + std::to_string(i));
      if (!c.ok) break;
    }
  }
  return c;
}

// C3: generate then analyze recovers the original lemma and tag sequence.
Check c3_round_trip(const VerbGrammar& g) {
  Check c;
  std::vector<std::vector<AttrTag>> seqs;
  for (AttrTag t : {pol, pfv, neg, pasv, te, cond, vol, imp, caus, pot, prog, adv})
    seqs.push_back({t});
  seqs.push_back({pol, pfv});
  seqs.push_back({pasv, te, prog});
  seqs.push_back({pot, neg});
  seqs.push_back({pasv, neg});
  seqs.push_back({te, prog});

  std::set<std::string> lemmas;
  for (const Lexeme& e : g.lexicon().entries()) lemmas.insert(e.lemma);

  size_t generated = 0;
  for (const std::string& lemma : lemmas) {
    std::set<AttrTag> classes;
    for (const Lexeme* e : g.lexicon().find(lemma))
      classes.insert(is_verb_group(e->group) ? v : adj);
    for (const std::vector<AttrTag>& tags : seqs) {
      for (const std::string& surface : g.generate(lemma, tags)) {
        ++generated;
        auto readings = g.analyze(surface);
        bool found = false;
        for (AttrTag cls : classes) found = found || has_reading(readings, {lemma, cls, tags});
        c.expect(found, surface + " does not analyze back to " + lemma + " " + tagset_str(tags));
        if (!c.ok) return c;
      }
    }
  }
  c.expect(generated >= 5 * lemmas.size(),
           "only " + std::to_string(generated) + " surfaces generated");
  c.note = std::to_string(generated) + " surfaces round-tripped";
  return c;
}

// C4: hand-built sound-change table, te/ta for every godan row plus the
// irregulars, with the colloquial contractions as parallel outputs.
Check c4_euphony_table(const VerbGrammar& g) {
  Check c;
  struct Row {
    const char* lemma;
    std::vector<AttrTag> tags;
    std::set<std::string> want;
  };
  const std::vector<Row> rows = {
      {"言う", {te}, {"言って"}},     {"言う", {pfv}, {"言った"}},
      {"書く", {te}, {"書いて"}},     {"書く", {pfv}, {"書いた"}},
      {"泳ぐ", {te}, {"泳いで"}},     {"泳ぐ", {pfv}, {"泳いだ"}},
      {"話す", {te}, {"話して"}},     {"話す", {pfv}, {"話した"}},
      {"待つ", {te}, {"待って"}},     {"待つ", {pfv}, {"待った"}},
      {"死ぬ", {te}, {"死んで"}},     {"死ぬ", {pfv}, {"死んだ"}},
      {"遊ぶ", {te}, {"遊んで"}},     {"遊ぶ", {pfv}, {"遊んだ"}},
      {"飲む", {te}, {"飲んで"}},     {"飲む", {pfv}, {"飲んだ"}},
      {"取る", {te}, {"取って"}},     {"取る", {pfv}, {"取った"}},
      {"する", {te}, {"して"}},       {"する", {pfv}, {"した"}},
      {"くる", {te}, {"きて"}},       {"くる", {pfv}, {"きた"}},
      {"来る", {te}, {"来て"}},       {"来る", {pfv}, {"来た"}},
      {"行く", {te}, {"行って"}},     {"行く", {pfv}, {"行った"}},
      {"食べる", {te}, {"食べて"}},   {"食べる", {pfv}, {"食べた"}},
      {"食べる", {te, prog}, {"食べている", "食べてる"}},
      {"書く", {te, prog}, {"書いている", "書いてる"}},
      {"する", {te, prog}, {"している", "してる"}},
      {"飲む", {te, prog}, {"飲んでいる"}},  // んで blocks the てる contraction
      {"泳ぐ", {te, prog}, {"泳いでいる"}},
  };
  c.expect(rows.size() >= 22, "table too small");
  for (const Row& row : rows) {
    auto got = gen_set(g, row.lemma, row.tags);
    c.expect(got == row.want, std::string(row.lemma) + " " + tagset_str(row.tags) + " gives {" +
                                  join(got) + "} wants {" + join(row.want) + "}");
  }

  // The grammar only reaches the いる auxiliary, so the -chau contraction
  // is checked on the sound-change cascade directly.
  Transducer cascade = phonology();
  auto surf = [&](const char* s) {
    std::set<std::string> out;
    for (const SymSeq& seq : apply_down(cascade, parse_symbols(s))) out.insert(render_string(seq));
    return out;
  };
  c.expect(surf("食べてしまう") == std::set<std::string>{"食べちゃう", "食べてしまう"},
           "てしまう contraction");
  c.expect(surf("飲んでしまう") == std::set<std::string>{"飲んでしまう"},
           "でしまう must not contract");
  return c;
}

// C5: the pronoun inventory analyzes to exactly its attribute table, and
// pronoun + collective suffix pluralizes instead of marking collectivity.
Check c5_pronouns(const Lexicon& lex) {
  Check c;
  PosRoleMap roles = PosRoleMap::defaults();
  struct Row {
    std::vector<std::string> surfaces;
    std::vector<AttrTag> attrs;  // render order: person, gender, number, formality
  };
  const std::vector<Row> rows = {
      {{"私", "わたし"}, {per1, sg}},
      {{"我", "吾", "余"}, {per1, sg, formal}},
      {{"こちら"}, {per1, sg, informal}},
      {{"儂", "わし"}, {per1, male, sg}},
      {{"己", "おのれ"}, {per1, male, sg, formal}},
      {{"僕"}, {per1, male, sg, informal}},
      {{"あたし", "うち"}, {per1, female, sg, informal}},
      {{"われわれ", "我々"}, {per1, pl, informal}},
      {{"僕ら", "僕達"}, {per1, male, pl, informal}},
      {{"あなた", "貴方"}, {per2, sg}},
      {{"あんた", "君"}, {per2, sg, informal}},
      {{"きさま", "お前"}, {per2, male, sg, informal}},
      {{"君たち"}, {per2, pl, informal}},
      {{"かれ", "やつ", "奴"}, {per3, sg, informal}},
      {{"彼女"}, {per3, female, sg, informal}},
      {{"奴ら", "奴等", "彼ら"}, {per3, pl, informal}},
      {{"彼女ら"}, {per3, female, pl, informal}},
  };
  const std::vector<std::string> collectives = {"達", "等", "ら", "たち", "かた", "方"};

  size_t surfaces = 0;
  for (const Row& row : rows) {
    std::vector<AttrTag> plural = row.attrs;
    std::replace(plural.begin(), plural.end(), sg, pl);
    for (const std::string& p : row.surfaces) {
      ++surfaces;
      NounAnalysis a = analyze_noun(parse_line("N#" + p + "/59$"), roles, lex);
      c.expect(a.head == "prn" && a.surface == p && a.attrs == row.attrs,
               p + " analyzes as " + to_string(a));
      for (const std::string& suf : collectives) {
        NounAnalysis b =
            analyze_noun(parse_line("N#" + p + "/59 " + suf + "/51$"), roles, lex);
        bool no_coll =
            std::find(b.attrs.begin(), b.attrs.end(), collective) == b.attrs.end();
        c.expect(b.head == "prn" && b.attrs == plural && no_coll,
                 p + suf + " analyzes as " + to_string(b));
      }
    }
  }
  c.expect(surfaces == 32, "expected 32 pronoun surfaces, saw " + std::to_string(surfaces));
  return c;
}

// C6: scoring formulas against hand-computed mixtures.
Check c6_eval_formulas() {
  Check c;
  const Analysis a1{"見る", v, {pot}};
  const Analysis a2{"見る", v, {pasv}};
  const Analysis a3{"書く", v, {te}};
  auto near = [](double x, double y) { return std::fabs(x - y) < 1e-12; };
  auto score = [&](const std::vector<JudgedItem>& items) { return evaluate(items); };

  EvalReport r1 = score({{"s", {a1, a2}, {a2}}});
  c.expect(near(r1.precision, 0.5) && near(r1.recall, 1.0), "half-right single item");

  EvalReport r2 = score({{"s", {}, {a2}}});
  c.expect(near(r2.precision, 0.0) && near(r2.recall, 0.0), "empty produced set");

  EvalReport r3 = score({{"s", {a3}, {a3}}, {"t", {a1, a2}, {a2}}});
  c.expect(near(r3.precision, 0.75) && near(r3.recall, 1.0), "mean of 1.0 and 0.5");

  EvalReport r4 = score({{"s", {a1, a2}, {a1}}, {"t", {}, {a3}}, {"u", {a3}, {a3}}});
  c.expect(near(r4.precision, 0.5) && near(r4.recall, 2.0 / 3.0), "three-way mixture");

  EvalReport r5 = score({{"s", {a2, a2, a1}, {a2}}});
  c.expect(near(r5.precision, 0.5), "duplicates collapse before scoring");

  EvalReport r6 = score(
      {{"s", {a3}, {a3}}, {"t", {a1}, {a2}}, {"u", {a1, a2}, {a2}}, {"w", {}, {a1}}});
  c.expect(near(r6.precision, 0.375) && near(r6.recall, 0.5), "four-way mixture");
  return c;
}

// C7: filter algebra on random sets, then measured effect on the example
// fixture with the upstream tagger's lemmas supplied.
Check c7_postfilter(const VerbGrammar& g) {
  Check c;
  OrderingRules rules = OrderingRules::defaults();

  std::mt19937 rng(90210);
  const AttrTag pool[] = {pol, pfv, neg, pasv, te, prog, cond, vol, imp, caus, pot};
  std::uniform_int_distribution<size_t> d_n(0, 6), d_len(0, 4), d_tag(0, std::size(pool) - 1);
  for (int round = 0; round < 200 && c.ok; ++round) {
    std::vector<Analysis> s;
    size_t n = d_n(rng);
    for (size_t i = 0; i < n; ++i) {
      Analysis a{"見る", v, {}};
      for (size_t k = d_len(rng); k > 0; --k) a.tags.push_back(pool[d_tag(rng)]);
      s.push_back(std::move(a));
    }
    auto once = filter(s, std::nullopt, rules);
    c.expect(filter(once, std::nullopt, rules) == once, "filter is not idempotent");
    c.expect(once.size() <= s.size(), "filter grew the set");
    std::vector<Analysis> sub(s.begin(), s.begin() + s.size() / 2);
    for (const Analysis& a : filter(sub, std::nullopt, rules))
      c.expect(std::find(once.begin(), once.end(), a) != once.end(), "filter is not monotone");
  }

  struct Fx {
    std::string surface;
    std::string mecab;
    std::vector<Analysis> gold;
  };
  const std::vector<Fx> fixture = {
      {"言った", "言う", {{"言う", v, {pfv}}}},
      {"助かりでした", "助かる", {{"助かる", v, {pol, pfv}}}},
      {"信じられている", "信じる",
       {{"信じる", v, {pasv, te, prog}}, {"信ずる", v, {pasv, te, prog}}}},
      {"見られない", "見る", {{"見る", v, {pot, neg}}, {"見る", v, {pasv, neg}}}},
      {"容易な", "容易", {{"容易", adj, {adv}}}},
      {"悪くない", "悪い", {{"悪い", adj, {neg}}}},
      {"奇麗だった", "奇麗", {{"奇麗", adj, {pfv}}}},
      {"好きです", "好き", {{"好く", v, {pol}}, {"好き", adj, {pol}}}},
      {"美しかった", "美しい", {{"美しい", adj, {pfv}}}},
  };
  std::vector<JudgedItem> raw, filtered;
  for (const Fx& fx : fixture) {
    auto readings = g.analyze(fx.surface);
    raw.push_back({fx.surface, readings, fx.gold});
    filtered.push_back({fx.surface, filter(readings, fx.mecab, rules), fx.gold});
  }
  EvalReport before = evaluate(raw);
  EvalReport after = evaluate(filtered);
  c.expect(std::fabs(before.recall - 1.0) < 1e-12, "raw recall below 1.0");
  c.expect(std::fabs(after.recall - 1.0) < 1e-12, "filtered recall below 1.0");
  c.expect(after.precision >= before.precision - 1e-12, "filtering lowered precision");
  char buf[96];
  std::snprintf(buf, sizeof(buf), "precision %.4f -> %.4f, recall 1.0", before.precision,
                after.precision);
  c.note = buf;
  return c;
}

// C8: adjectives conjugate less, so their measured precision should not
// fall below the verbs' on the shipped gold corpora.
Check c8_precision_trend(const VerbGrammar& g) {
  Check c;
  OrderingRules rules = OrderingRules::defaults();
  auto run = [&](const std::string& path) {
    auto items = group_gold(load_gold_file(path), EvalMode::Token);
    for (JudgedItem& item : items)
      item.produced = filter(g.analyze(item.surface), std::nullopt, rules);
    return evaluate(items);
  };
  EvalReport verbs = run(std::string(JMORPH_DATA_DIR) + "/gold/verbs.tsv");
  EvalReport adjectives = run(std::string(JMORPH_DATA_DIR) + "/gold/adjectives.tsv");
  c.expect(adjectives.precision >= verbs.precision, "adjective precision below verb precision");
  c.expect(std::fabs(verbs.recall - 1.0) < 1e-12 && std::fabs(adjectives.recall - 1.0) < 1e-12,
           "gold corpora recall below 1.0");
  char buf[96];
  std::snprintf(buf, sizeof(buf), "adj %.4f >= verb %.4f", adjectives.precision,
                verbs.precision);
  c.note = buf;
  return c;
}

}  // namespace

int main() {
  Lexicon lex;
  double build_seconds = 0.0;
  const VerbGrammar* grammar = nullptr;
  try {
    auto t0 = std::chrono::steady_clock::now();
    lex = load_lexicon_file(std::string(JMORPH_DATA_DIR) + "/lexicon.tsv");
    static VerbGrammar g(lex);
    build_seconds = seconds_since(t0);
    grammar = &g;
  } catch (const std::exception& e) {
    std::printf("FAIL - setup: %s\n", e.what());
    return 2;
  }

  struct Row {
    int id;
    const char* label;
    std::function<Check()> run;
  };
  const std::vector<Row> criteria = {
      {1, "golden analysis suite (nouns, verbs, adjectives, te-forms) in under 5 s",
       [&] { return c1_golden_suite(*grammar, lex, build_seconds); }},
      {2, "transducer application matches the path-enumeration oracle; inversion and "
          "composition laws hold",
       [] { return c2_fst_oracle(); }},
      {3, "every generated surface analyzes back to its lemma and tags",
       [&] { return c3_round_trip(*grammar); }},
      {4, "sound-change and contraction gold table reproduced exactly",
       [&] { return c4_euphony_table(*grammar); }},
      {5, "pronoun inventory and collective pluralization analyze exactly",
       [&] { return c5_pronouns(lex); }},
      {6, "precision and recall match hand-computed mixtures", [] { return c6_eval_formulas(); }},
      {7, "post-filter algebra holds; filtering keeps recall and does not hurt precision",
       [&] { return c7_postfilter(*grammar); }},
      {8, "adjective precision at least verb precision on the gold corpora",
       [&] { return c8_precision_trend(*grammar); }},
  };

  int failures = 0;
  for (const Row& row : criteria) {
    Check c;
    try {
      c = row.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::string extra;
    if (!c.ok)
      extra = " (" + c.detail + ")";
    else if (!c.note.empty())
      extra = " (" + c.note + ")";
    std::printf("%s - C%d: %s%s\n", c.ok ? "PASS" : "FAIL", row.id, row.label, extra.c_str());
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
