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

#include "jmorph/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "jmorph/errors.hpp"
#include "jmorph/utf8.hpp"

namespace jmorph {

namespace {

constexpr std::array<std::string_view, 14> kGroupNames = {
    "ichidan", "godan-u", "godan-k", "godan-g", "godan-s", "godan-t",  "godan-n",
    "godan-b", "godan-m", "godan-r", "sa-irreg", "ka-irreg", "i-adj",  "na-adj",
};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// The final kana a lemma of each godan row must carry.
std::string_view godan_ending(ConjGroup g) {
  switch (g) {
    case ConjGroup::GodanU: return "う";
    case ConjGroup::GodanK: return "く";
    case ConjGroup::GodanG: return "ぐ";
    case ConjGroup::GodanS: return "す";
    case ConjGroup::GodanT: return "つ";
    case ConjGroup::GodanN: return "ぬ";
    case ConjGroup::GodanB: return "ぶ";
    case ConjGroup::GodanM: return "む";
    case ConjGroup::GodanR: return "る";
    default: return "";
  }
}

void check_shape(const Lexeme& lex, size_t line) {
  if (lex.lemma.empty()) throw InvariantError(line, "empty lemma");
  std::u32string lemma32 = utf8_decode(lex.lemma);
  switch (lex.group) {
    case ConjGroup::Ichidan:
      if (!ends_with(lex.lemma, "る"))
        throw InvariantError(line, "ichidan lemma must end in る: " + lex.lemma);
      if (lemma32.size() < 2) throw InvariantError(line, "ichidan lemma needs a stem: " + lex.lemma);
      break;
    case ConjGroup::SaIrregular:
      if (!ends_with(lex.lemma, "する") && !ends_with(lex.lemma, "ずる"))
        throw InvariantError(line, "sa-irreg lemma must end in する or ずる: " + lex.lemma);
      break;
    case ConjGroup::KaIrregular:
      if (!ends_with(lex.lemma, "くる") && !ends_with(lex.lemma, "来る"))
        throw InvariantError(line, "ka-irreg lemma must end in くる or 来る: " + lex.lemma);
      break;
    case ConjGroup::IAdjective:
      if (!ends_with(lex.lemma, "い"))
        throw InvariantError(line, "i-adj lemma must end in い: " + lex.lemma);
      if (lemma32.size() < 2) throw InvariantError(line, "i-adj lemma needs a stem: " + lex.lemma);
      break;
    case ConjGroup::NaAdjective:
      break;
    default: {
      std::string_view ending = godan_ending(lex.group);
      if (!ends_with(lex.lemma, ending))
        throw InvariantError(line, "lemma must end in " + std::string(ending) + " for " +
                                       std::string(group_name(lex.group)) + ": " + lex.lemma);
      if (lemma32.size() < 2) throw InvariantError(line, "godan lemma needs a stem: " + lex.lemma);
      break;
    }
  }
  if (lex.has_flag(LexFlag::GeminateTe) && !is_godan(lex.group))
    throw InvariantError(line, "tte flag only applies to godan lemmas: " + lex.lemma);
}

}  // namespace

std::string_view group_name(ConjGroup g) { return kGroupNames[static_cast<uint32_t>(g)]; }

std::optional<ConjGroup> group_from_name(std::string_view name) {
  for (uint32_t i = 0; i < kGroupNames.size(); ++i)
    if (kGroupNames[i] == name) return static_cast<ConjGroup>(i);
  return std::nullopt;
}

bool is_godan(ConjGroup g) {
  return g >= ConjGroup::GodanU && g <= ConjGroup::GodanR;
}

bool is_verb_group(ConjGroup g) {
  return g != ConjGroup::IAdjective && g != ConjGroup::NaAdjective;
}

void Lexicon::add(Lexeme lex, size_t line) {
  check_shape(lex, line);
  for (const Lexeme& e : entries_)
    if (e.lemma == lex.lemma && e.group == lex.group)
      throw InvariantError(line, "duplicate entry: " + lex.lemma);
  entries_.push_back(std::move(lex));
}

std::vector<const Lexeme*> Lexicon::find(std::string_view lemma) const {
  std::vector<const Lexeme*> out;
  for (const Lexeme& e : entries_)
    if (e.lemma == lemma) out.push_back(&e);
  return out;
}

Lexicon load_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  size_t lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (!saw_header) {
      if (fields.size() < 3 || fields[0] != "lemma" || fields[1] != "reading" || fields[2] != "group")
        throw ParseError(lineno, "expected header lemma<TAB>reading<TAB>group");
      saw_header = true;
      continue;
    }
    if (fields.size() != 3 && fields.size() != 4)
      throw ParseError(lineno, "expected 3 or 4 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    Lexeme e;
    e.lemma = fields[0];
    e.reading = fields[1];
    auto g = group_from_name(fields[2]);
    if (!g) throw ParseError(lineno, "unknown conjugation group: " + fields[2]);
    e.group = *g;
    if (fields.size() == 4 && !fields[3].empty()) {
      std::stringstream fs(fields[3]);
      std::string flag;
      while (std::getline(fs, flag, ',')) {
        if (flag == "tte")
          e.flags |= static_cast<uint8_t>(LexFlag::GeminateTe);
        else
          throw ParseError(lineno, "unknown flag: " + flag);
      }
    }
    lex.add(std::move(e), lineno);
  }
  if (!saw_header) throw ParseError(lineno, "missing header");
  if (lex.empty()) throw EmptyLexiconError();
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file: " + path);
  return load_lexicon(in);
}

std::string save_lexicon(const Lexicon& lex) {
  std::string out = "lemma\treading\tgroup\n";
  for (const Lexeme& e : lex.entries()) {
    out += e.lemma;
    out += '\t';
    out += e.reading;
    out += '\t';
    out += group_name(e.group);
    if (e.has_flag(LexFlag::GeminateTe)) out += "\ttte";
    out += '\n';
  }
  return out;
}

namespace {

std::optional<AttrTag> opt(AttrTag t) { return t; }

const std::vector<PronounEntry> kPronouns = [] {
  using T = AttrTag;
  std::vector<PronounEntry> v;
  auto row = [&](std::initializer_list<const char*> surfaces, T person, T number,
                 std::optional<T> gender, std::optional<T> formality) {
    for (const char* s : surfaces) v.push_back({s, person, number, gender, formality});
  };
  row({"私", "わたし"}, T::per1, T::sg, {}, {});
  row({"我", "吾", "余"}, T::per1, T::sg, {}, opt(T::formal));
  row({"こちら"}, T::per1, T::sg, {}, opt(T::informal));
  row({"儂", "わし"}, T::per1, T::sg, opt(T::male), {});
  row({"己", "おのれ"}, T::per1, T::sg, opt(T::male), opt(T::formal));
  row({"僕"}, T::per1, T::sg, opt(T::male), opt(T::informal));
  row({"あたし", "うち"}, T::per1, T::sg, opt(T::female), opt(T::informal));
  row({"われわれ", "我々"}, T::per1, T::pl, {}, opt(T::informal));
  row({"僕ら", "僕達"}, T::per1, T::pl, opt(T::male), opt(T::informal));
  row({"あなた", "貴方"}, T::per2, T::sg, {}, {});
  row({"あんた", "君"}, T::per2, T::sg, {}, opt(T::informal));
  row({"きさま", "お前"}, T::per2, T::sg, opt(T::male), opt(T::informal));
  row({"君たち"}, T::per2, T::pl, {}, opt(T::informal));
  row({"かれ", "やつ", "奴"}, T::per3, T::sg, {}, opt(T::informal));
  row({"彼女"}, T::per3, T::sg, opt(T::female), opt(T::informal));
  row({"奴ら", "奴等", "彼ら"}, T::per3, T::pl, {}, opt(T::informal));
  row({"彼女ら"}, T::per3, T::pl, opt(T::female), opt(T::informal));
  return v;
}();

}  // namespace

std::span<const PronounEntry> pronoun_table() { return kPronouns; }

const PronounEntry* pronoun_lookup(std::string_view surface) {
  for (const PronounEntry& e : kPronouns)
    if (e.surface == surface) return &e;
  return nullptr;
}

}  // namespace jmorph
