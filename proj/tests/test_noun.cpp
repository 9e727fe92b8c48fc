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

#include <sstream>

#include <doctest.h>

#include "jmorph/errors.hpp"
#include "jmorph/noun.hpp"

using namespace jmorph;

namespace {

const Lexicon kEmptyLexicon;

NounAnalysis run(std::string_view line) {
  return analyze_noun(parse_line(line), PosRoleMap::defaults(), kEmptyLexicon);
}

}  // namespace

TEST_CASE("input lines parse into tokens") {
  SegmentedInput in = parse_line("N#お/30 医者/38 様/55$");
  CHECK(in.marker == 'N');
  REQUIRE(in.tokens.size() == 3);
  CHECK(in.tokens[0] == SegToken{"お", 30});
  CHECK(in.tokens[1] == SegToken{"医者", 38});
  CHECK(in.tokens[2] == SegToken{"様", 55});

  SegmentedInput two = parse_line("N#少年/38 達/51$");
  CHECK(two.tokens == std::vector<SegToken>{{"少年", 38}, {"達", 51}});
}

TEST_CASE("format deviations raise errors with byte columns") {
  CHECK_THROWS_AS(parse_line("N#少年/38 達/51"), FormatError);   // missing terminator
  CHECK_THROWS_AS(parse_line("N少年/38$"), FormatError);         // missing '#'
  CHECK_THROWS_AS(parse_line("n#少年/38$"), FormatError);        // bad marker
  CHECK_THROWS_AS(parse_line("N#少年/ab$"), FormatError);        // non-integer pos id
  CHECK_THROWS_AS(parse_line("N#/38$"), FormatError);            // empty surface
  CHECK_THROWS_AS(parse_line("N#少年/38  達/51$"), FormatError);  // empty token
  CHECK_THROWS_AS(parse_line("N#$"), FormatError);               // no tokens
  try {
    parse_line("N#少年/38 達/51");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.column == sizeof("N#少年/38 達/51"));  // one past the end
  }
}

TEST_CASE("affix attributes accumulate on the head") {
  NounAnalysis a = run("N#お/30 医者/38 様/55$");
  CHECK(a.head == "医者");
  CHECK(a.attrs == std::vector<AttrTag>{AttrTag::formal, AttrTag::animate, AttrTag::polite});
  CHECK(to_string(a) == "医者\tformal animate polite");
}

TEST_CASE("collective suffix marks plain nouns collective") {
  NounAnalysis a = run("N#少年/38 達/51$");
  CHECK(a.head == "少年");
  CHECK(a.attrs == std::vector<AttrTag>{AttrTag::collective});
}

TEST_CASE("pronoun heads use the embedded table") {
  NounAnalysis a = run("N#私/59$");
  CHECK(a.head == "prn");
  CHECK(a.surface == "私");
  CHECK(a.attrs == std::vector<AttrTag>{AttrTag::per1, AttrTag::sg});
}

TEST_CASE("pronoun plus collective promotes number instead") {
  NounAnalysis a = run("N#彼女/59 達/51$");
  CHECK(a.head == "prn");
  CHECK(a.attrs == std::vector<AttrTag>{AttrTag::per3, AttrTag::female, AttrTag::pl,
                                        AttrTag::informal});
  CHECK(to_string(a) == "prn\tper3 female pl informal");
}

TEST_CASE("san only marks animacy") {
  NounAnalysis a = run("N#田中/38 さん/55$");
  CHECK(a.attrs == std::vector<AttrTag>{AttrTag::animate});
  NounAnalysis chan = run("N#田中/38 ちゃん/55$");
  CHECK(chan.attrs == std::vector<AttrTag>{AttrTag::informal, AttrTag::animate});
  NounAnalysis sama = run("N#田中/38 様/55$");
  CHECK(sama.attrs == std::vector<AttrTag>{AttrTag::formal, AttrTag::animate});
}

TEST_CASE("trailing no token marks possession") {
  NounAnalysis a = run("N#先生/38 の/63$");
  CHECK(a.head == "先生");
  CHECK(a.attrs == std::vector<AttrTag>{AttrTag::possessive});
  CHECK_THROWS_AS(run("N#の/63 先生/38$"), UnknownRoleError);   // not trailing
  CHECK_THROWS_AS(run("N#先生/38 は/63$"), UnknownRoleError);   // wrong surface
}

TEST_CASE("heads are mandatory and unique") {
  CHECK_THROWS_AS(run("N#お/30$"), EmptyHeadError);
  CHECK_THROWS_AS(run("N#医者/38 先生/38$"), UnknownRoleError);
  CHECK_THROWS_AS(run("N#医者/38 を/999$"), UnknownRoleError);  // unmapped id
}

TEST_CASE("unknown collective surfaces are rejected") {
  CHECK_THROWS_AS(run("N#少年/38 さん/51$"), UnknownRoleError);
}

TEST_CASE("single head yields no attributes") {
  NounAnalysis a = run("N#机/38$");
  CHECK(a.head == "机");
  CHECK(a.attrs.empty());
  CHECK(to_string(a) == "机");
}

TEST_CASE("role maps load from tsv and extend the defaults") {
  std::istringstream in("# extra ids\n100\tnoun-head\n30\tother\n");
  PosRoleMap m = PosRoleMap::load(in);
  CHECK(m.role_of(100) == PosRole::NounHead);
  CHECK(m.role_of(30) == PosRole::Other);     // overridden
  CHECK(m.role_of(38) == PosRole::NounHead);  // inherited default
  CHECK(m.role_of(12345) == PosRole::Other);  // unmapped
  std::istringstream bad("100\tnot-a-role\n");
  CHECK_THROWS_AS(PosRoleMap::load(bad), ParseError);
}

TEST_CASE("every builtin role name round trips") {
  for (PosRole r : {PosRole::HonorificPrefix, PosRole::NounHead, PosRole::HonorificSuffix,
                    PosRole::CollectiveSuffix, PosRole::Pronoun, PosRole::PossessiveNo,
                    PosRole::Other}) {
    CHECK(!role_name(r).empty());
  }
}
