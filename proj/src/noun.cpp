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

#include "jmorph/noun.hpp"

#include <array>
#include <fstream>
#include <optional>
#include <sstream>

#include "jmorph/errors.hpp"

namespace jmorph {

namespace {

constexpr std::array<std::string_view, 7> kRoleNames = {
    "honorific-prefix", "noun-head",     "honorific-suffix", "collective-suffix",
    "pronoun",          "possessive-no", "other",
};

bool is_collective_suffix(std::string_view s) {
  return s == "達" || s == "等" || s == "方" || s == "たち" || s == "ら" || s == "かた";
}

}  // namespace

std::string_view role_name(PosRole r) { return kRoleNames[static_cast<uint32_t>(r)]; }

SegmentedInput parse_line(std::string_view line) {
  auto col = [&](size_t byte_pos) { return byte_pos + 1; };
  if (line.size() < 2 || line[1] != '#')
    throw FormatError(col(line.size() < 2 ? line.size() : 1), "expected '<marker>#'");
  if (line[0] < 'A' || line[0] > 'Z')
    throw FormatError(col(0), "marker must be an upper-case letter");
  if (line.back() != '$') throw FormatError(col(line.size()), "missing '$' terminator");

  SegmentedInput out;
  out.marker = line[0];
  std::string_view body = line.substr(2, line.size() - 3);
  size_t base = 2;
  size_t pos = 0;
  while (true) {
    size_t space = body.find(' ', pos);
    std::string_view pair =
        body.substr(pos, space == std::string_view::npos ? std::string_view::npos : space - pos);
    size_t slash = pair.rfind('/');
    if (pair.empty()) throw FormatError(col(base + pos), "empty token");
    if (slash == std::string_view::npos)
      throw FormatError(col(base + pos), "token missing '/pos_id'");
    std::string_view surface = pair.substr(0, slash);
    std::string_view digits = pair.substr(slash + 1);
    if (surface.empty()) throw FormatError(col(base + pos), "empty token surface");
    if (digits.empty()) throw FormatError(col(base + pos + slash + 1), "empty pos_id");
    int id = 0;
    for (size_t i = 0; i < digits.size(); ++i) {
      char c = digits[i];
      if (c < '0' || c > '9')
        throw FormatError(col(base + pos + slash + 1 + i), "pos_id must be a non-negative integer");
      id = id * 10 + (c - '0');
    }
    out.tokens.push_back({std::string(surface), id});
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return out;
}

PosRoleMap PosRoleMap::defaults() {
  PosRoleMap m;
  m.set(30, PosRole::HonorificPrefix);
  m.set(38, PosRole::NounHead);
  m.set(51, PosRole::CollectiveSuffix);
  m.set(55, PosRole::HonorificSuffix);
  m.set(59, PosRole::Pronoun);
  m.set(63, PosRole::PossessiveNo);
  return m;
}

PosRoleMap PosRoleMap::load(std::istream& in) {
  PosRoleMap m = defaults();
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(lineno, "expected pos_id<TAB>role");
    std::string id_s = line.substr(0, tab);
    std::string role_s = line.substr(tab + 1);
    int id;
    try {
      size_t used;
      id = std::stoi(id_s, &used);
      if (used != id_s.size() || id < 0) throw std::invalid_argument("");
    } catch (std::exception&) {
      throw ParseError(lineno, "pos_id must be a non-negative integer: " + id_s);
    }
    std::optional<PosRole> role;
    for (uint32_t i = 0; i < kRoleNames.size(); ++i)
      if (kRoleNames[i] == role_s) role = static_cast<PosRole>(i);
    if (!role) throw ParseError(lineno, "unknown role: " + role_s);
    m.set(id, *role);
  }
  return m;
}

PosRoleMap PosRoleMap::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open pos role map: " + path);
  return load(in);
}

PosRole PosRoleMap::role_of(int pos_id) const {
  auto it = map_.find(pos_id);
  return it == map_.end() ? PosRole::Other : it->second;
}

std::string to_string(const NounAnalysis& a) {
  std::string out = a.head;
  if (a.attrs.empty()) return out;
  out += '\t';
  for (size_t i = 0; i < a.attrs.size(); ++i) {
    if (i) out += ' ';
    out += tag_name(a.attrs[i]);
  }
  return out;
}

NounAnalysis analyze_noun(const SegmentedInput& input, const PosRoleMap& roles,
                          const Lexicon& lex) {
  (void)lex;  // noun heads need no dictionary entry; pronouns use the embedded table

  // The head plus independent attribute slots; rendering below fixes the
  // canonical order so stacked affixes always serialize the same way.
  std::optional<SegToken> head;
  const PronounEntry* pronoun = nullptr;
  std::optional<AttrTag> formality;
  bool animate = false;
  bool polite = false;
  bool collective = false;
  bool plural_promotion = false;
  bool possessive = false;

  for (size_t i = 0; i < input.tokens.size(); ++i) {
    const SegToken& tok = input.tokens[i];
    switch (roles.role_of(tok.pos_id)) {
      case PosRole::HonorificPrefix:
        polite = true;
        break;
      case PosRole::NounHead:
      case PosRole::Pronoun:
        if (head)
          throw UnknownRoleError(tok.pos_id, "second head token: " + tok.surface);
        head = tok;
        pronoun = pronoun_lookup(tok.surface);
        break;
      case PosRole::HonorificSuffix:
        animate = true;
        if (tok.surface == "ちゃん" || tok.surface == "君")
          formality = AttrTag::informal;
        else if (tok.surface == "様")
          formality = AttrTag::formal;
        // さん and unlisted honorifics mark animacy alone
        break;
      case PosRole::CollectiveSuffix:
        if (is_collective_suffix(tok.surface)) {
          collective = true;
          plural_promotion = true;
        } else {
          throw UnknownRoleError(tok.pos_id, "unknown collective suffix: " + tok.surface);
        }
        break;
      case PosRole::PossessiveNo:
        if (tok.surface != "の")
          throw UnknownRoleError(tok.pos_id, "possessive role on non-の token: " + tok.surface);
        if (i + 1 != input.tokens.size())
          throw UnknownRoleError(tok.pos_id, "possessive の must be the final token");
        possessive = true;
        break;
      case PosRole::Other:
        throw UnknownRoleError(tok.pos_id,
                               "no role for pos id " + std::to_string(tok.pos_id) + ": " +
                                   tok.surface);
    }
  }
  if (!head) throw EmptyHeadError();

  NounAnalysis out;
  out.surface = head->surface;
  if (pronoun) {
    out.head = "prn";
    out.attrs.push_back(pronoun->person);
    if (pronoun->gender) out.attrs.push_back(*pronoun->gender);
    out.attrs.push_back(plural_promotion ? AttrTag::pl : pronoun->number);
    if (pronoun->formality) out.attrs.push_back(*pronoun->formality);
    if (polite) out.attrs.push_back(AttrTag::polite);
    if (possessive) out.attrs.push_back(AttrTag::possessive);
  } else {
    out.head = head->surface;
    if (formality) out.attrs.push_back(*formality);
    if (animate) out.attrs.push_back(AttrTag::animate);
    if (polite) out.attrs.push_back(AttrTag::polite);
    if (collective) out.attrs.push_back(AttrTag::collective);
    if (possessive) out.attrs.push_back(AttrTag::possessive);
  }
  return out;
}

}  // namespace jmorph
