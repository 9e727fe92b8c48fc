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

#include "jmorph/verb.hpp"

#include <array>
#include <set>
#include <stdexcept>

#include "jmorph/errors.hpp"
#include "jmorph/rewrite.hpp"
#include "jmorph/utf8.hpp"

namespace jmorph {

namespace {

struct RowKana {
  std::u32string_view a, i, u, e, o;
};

RowKana row_of(ConjGroup g) {
  switch (g) {
    case ConjGroup::GodanU: return {U"わ", U"い", U"う", U"え", U"お"};
    case ConjGroup::GodanK: return {U"か", U"き", U"く", U"け", U"こ"};
    case ConjGroup::GodanG: return {U"が", U"ぎ", U"ぐ", U"げ", U"ご"};
    case ConjGroup::GodanS: return {U"さ", U"し", U"す", U"せ", U"そ"};
    case ConjGroup::GodanT: return {U"た", U"ち", U"つ", U"て", U"と"};
    case ConjGroup::GodanN: return {U"な", U"に", U"ぬ", U"ね", U"の"};
    case ConjGroup::GodanB: return {U"ば", U"び", U"ぶ", U"べ", U"ぼ"};
    case ConjGroup::GodanM: return {U"ま", U"み", U"む", U"め", U"も"};
    case ConjGroup::GodanR: return {U"ら", U"り", U"る", U"れ", U"ろ"};
    default: throw std::logic_error("row_of: not a godan group");
  }
}

std::string drop_last(const std::u32string& s, size_t n) {
  return utf8_encode(s.substr(0, s.size() - n));
}

}  // namespace

std::string stem(const Lexeme& lex, StemBase base) {
  std::u32string chars = utf8_decode(lex.lemma);
  switch (lex.group) {
    case ConjGroup::NaAdjective:
      throw NotConjugableError("na-adjective " + lex.lemma +
                               " has no conjugation bases; it inflects through the copula");
    case ConjGroup::Ichidan: {
      std::string st = drop_last(chars, 1);
      switch (base) {
        case StemBase::Irrealis:
        case StemBase::Continuative: return st;
        case StemBase::Terminal:
        case StemBase::Attributive: return lex.lemma;
        case StemBase::Hypothetical: return st + "れ";
        case StemBase::Imperative: return st + "ろ";
      }
      break;
    }
    case ConjGroup::IAdjective: {
      std::string st = drop_last(chars, 1);
      switch (base) {
        case StemBase::Irrealis: return st + "かろ";
        case StemBase::Continuative: return st + "く";
        case StemBase::Terminal:
        case StemBase::Attributive: return lex.lemma;
        case StemBase::Hypothetical: return st + "けれ";
        case StemBase::Imperative: return st + "かれ";
      }
      break;
    }
    case ConjGroup::SaIrregular: {
      std::string st = drop_last(chars, 2);
      bool zuru = chars[chars.size() - 2] == U'ず';
      switch (base) {
        case StemBase::Irrealis:
        case StemBase::Continuative: return st + (zuru ? "じ" : "し");
        case StemBase::Terminal:
        case StemBase::Attributive: return lex.lemma;
        case StemBase::Hypothetical: return st + (zuru ? "ずれ" : "すれ");
        case StemBase::Imperative: return st + (zuru ? "じろ" : "しろ");
      }
      break;
    }
    case ConjGroup::KaIrregular: {
      bool kanji = chars[chars.size() - 2] == U'来';
      if (kanji) {
        std::string st = drop_last(chars, 1);  // the 来 stays in every base
        switch (base) {
          case StemBase::Irrealis:
          case StemBase::Continuative: return st;
          case StemBase::Terminal:
          case StemBase::Attributive: return lex.lemma;
          case StemBase::Hypothetical: return st + "れ";
          case StemBase::Imperative: return st + "い";
        }
      } else {
        std::string st = drop_last(chars, 2);
        switch (base) {
          case StemBase::Irrealis: return st + "こ";
          case StemBase::Continuative: return st + "き";
          case StemBase::Terminal:
          case StemBase::Attributive: return lex.lemma;
          case StemBase::Hypothetical: return st + "くれ";
          case StemBase::Imperative: return st + "こい";
        }
      }
      break;
    }
    default: {  // godan rows
      std::string st = drop_last(chars, 1);
      RowKana row = row_of(lex.group);
      switch (base) {
        case StemBase::Irrealis: return st + utf8_encode(std::u32string(row.a));
        case StemBase::Continuative: return st + utf8_encode(std::u32string(row.i));
        case StemBase::Terminal:
        case StemBase::Attributive: return lex.lemma;
        case StemBase::Hypothetical: return st + utf8_encode(std::u32string(row.e));
        case StemBase::Imperative: return st + utf8_encode(std::u32string(row.e));
      }
      break;
    }
  }
  throw std::logic_error("stem: unreachable");
}

SymSeq lexical_input(std::string_view lemma, AttrTag cls, const std::vector<AttrTag>& tags) {
  SymSeq seq = to_symbols(lemma);
  seq.push_back(Symbol::attr(cls));
  for (AttrTag t : tags) seq.push_back(Symbol::attr(t));
  return seq;
}

Analysis parse_lexical(const SymSeq& seq) {
  Analysis a;
  std::u32string lemma;
  size_t i = 0;
  for (; i < seq.size() && seq[i].is_char(); ++i) lemma.push_back(seq[i].chr_value());
  if (lemma.empty()) throw std::invalid_argument("lexical tape has no lemma characters");
  if (i == seq.size() || !seq[i].is_attr())
    throw std::invalid_argument("lexical tape has no class tag");
  a.lemma = utf8_encode(lemma);
  a.cls = seq[i].attr_value();
  if (a.cls != AttrTag::v && a.cls != AttrTag::adj)
    throw std::invalid_argument("lexical tape class tag is not v/adj");
  for (++i; i < seq.size(); ++i) {
    if (!seq[i].is_attr()) throw std::invalid_argument("lexical tape has a non-attribute suffix");
    a.tags.push_back(seq[i].attr_value());
  }
  return a;
}

namespace {

constexpr int kMaxDepth = 6;  // nested suffix slots

Symbol sym1(char32_t c) { return Symbol::chr(c); }

// Wires the morphotactic graph. Suffix nodes that do not depend on the
// stem's kana row are created once and shared by every lexeme.
struct GraphBuilder {
  TransducerBuilder b;
  StateId q0, acc;
  std::array<StateId, kMaxDepth> ich, iadj, te_st;
  StateId cont_pol, teta, cont_plain, cont_eu;
  StateId irr, e_col, o_col, dict, hyp, si, sa, se, zi, ko, kam, naadj;
  StateId pre_ich, pre_iadj, pre_irr, pre_e, pre_o, pre_dict, pre_cont_eu, pre_cont_plain,
      pre_cont_pol, pre_teta, pre_si, pre_sa, pre_se, pre_zi, pre_ko, pre_hyp, pre_kam;

  // Arc chain consuming `tags` while emitting `out`, ending on an existing
  // state. `mark` prefixes the output with the euphony boundary.
  void suf(StateId from, std::initializer_list<AttrTag> tags, std::string_view out, StateId to,
           bool mark = false) {
    SymSeq in, os;
    for (AttrTag t : tags) in.push_back(Symbol::attr(t));
    if (mark) os.push_back(Symbol::euphony_mark());
    for (Symbol s : to_symbols(out)) os.push_back(s);
    size_t n = std::max(in.size(), os.size());
    if (n == 0) {
      b.add_arc(from, to, Symbol::eps(), Symbol::eps());
      return;
    }
    StateId cur = from;
    for (size_t k = 0; k < n; ++k) {
      StateId next = k + 1 == n ? to : b.add_state();
      b.add_arc(cur, next, k < in.size() ? in[k] : Symbol::eps(),
                k < os.size() ? os[k] : Symbol::eps());
      cur = next;
    }
  }

  void eps_link(StateId from, StateId to) {
    b.add_arc(from, to, Symbol::eps(), Symbol::eps());
  }

  // from --(in_seq : out_seq)--> to with fresh intermediate states.
  void link(StateId from, const SymSeq& in, const SymSeq& out, StateId to) {
    size_t n = std::max(in.size(), out.size());
    StateId cur = from;
    for (size_t k = 0; k < n; ++k) {
      StateId next = k + 1 == n ? to : b.add_state();
      b.add_arc(cur, next, k < in.size() ? in[k] : Symbol::eps(),
                k < out.size() ? out[k] : Symbol::eps());
      cur = next;
    }
  }

  StateId identity_prefix(const SymSeq& cs, size_t n) {
    StateId cur = q0;
    for (size_t k = 0; k < n; ++k) {
      StateId next = b.add_state();
      b.add_arc(cur, next, cs[k], cs[k]);
      cur = next;
    }
    return cur;
  }

  void colloquial_negations(StateId from) {
    using enum AttrTag;
    for (std::string_view s : {"ぬ", "ん", "ず", "ずな", "ざる", "なきゃ"}) suf(from, {neg}, s, acc);
  }

  void build_shared() {
    using enum AttrTag;
    q0 = b.add_state();
    b.set_start(q0);
    acc = b.add_state();
    b.add_final(acc);
    for (int d = 0; d < kMaxDepth; ++d) {
      ich[d] = b.add_state();
      iadj[d] = b.add_state();
      te_st[d] = b.add_state();
      b.add_final(te_st[d]);
    }
    cont_pol = b.add_state();
    teta = b.add_state();
    cont_plain = b.add_state();
    cont_eu = b.add_state();
    irr = b.add_state();
    e_col = b.add_state();
    o_col = b.add_state();
    dict = b.add_state();
    b.add_final(dict);
    hyp = b.add_state();
    si = b.add_state();
    sa = b.add_state();
    se = b.add_state();
    zi = b.add_state();
    ko = b.add_state();
    kam = b.add_state();
    naadj = b.add_state();
    b.add_final(naadj);

    // polite block: ます/ました/ません plus the nominal です/でした
    suf(cont_pol, {pol}, "ます", acc);
    suf(cont_pol, {pol, pfv}, "ました", acc);
    suf(cont_pol, {pol, neg}, "ません", acc);
    suf(cont_pol, {pol}, "です", acc);
    suf(cont_pol, {pol, pfv}, "でした", acc);

    // te/ta/tara attachment without sound change (s-row, irregulars,
    // geminate stems that already emitted っ)
    suf(teta, {te}, "て", te_st[0]);
    suf(teta, {pfv}, "た", acc);
    suf(teta, {cond}, "たら", acc);

    eps_link(cont_plain, cont_pol);
    eps_link(cont_plain, teta);

    // euphony rows mark the boundary so phonology can rewrite it
    eps_link(cont_eu, cont_pol);
    suf(cont_eu, {te}, "て", te_st[0], true);
    suf(cont_eu, {pfv}, "た", acc, true);
    suf(cont_eu, {cond}, "たら", acc, true);

    // godan irrealis continuations
    suf(irr, {neg}, "な", iadj[1]);
    colloquial_negations(irr);
    suf(irr, {pasv}, "れ", ich[1]);
    suf(irr, {caus}, "せ", ich[1]);

    // godan e-column: conditional, bare imperative, potential
    suf(e_col, {cond}, "ば", acc);
    suf(e_col, {imp}, "", acc);
    suf(e_col, {pot}, "", ich[1]);

    suf(o_col, {vol}, "う", acc);

    suf(dict, {neg}, "な", acc);  // prohibitive on the dictionary form
    suf(hyp, {cond}, "ば", acc);

    // する group: し hosts the plain-continuative block plus its own forms
    eps_link(si, cont_plain);
    suf(si, {neg}, "な", iadj[1]);
    suf(si, {neg}, "なきゃ", acc);
    suf(si, {vol}, "よう", acc);
    suf(si, {imp}, "ろ", acc);
    suf(sa, {pasv}, "れ", ich[1]);
    suf(sa, {caus}, "せ", ich[1]);
    colloquial_negations(se);
    suf(se, {imp}, "よ", acc);
    // ずる lemmas take the ichidan-style passive/potential/causative on じ
    eps_link(zi, si);
    suf(zi, {pasv}, "られ", ich[1]);
    suf(zi, {pot}, "られ", ich[1]);
    suf(zi, {caus}, "させ", ich[1]);

    // くる group irrealis (こ)
    suf(ko, {neg}, "な", iadj[1]);
    colloquial_negations(ko);
    suf(ko, {pasv}, "られ", ich[1]);
    suf(ko, {pot}, "られ", ich[1]);
    suf(ko, {caus}, "させ", ich[1]);
    suf(ko, {vol}, "よう", acc);
    suf(ko, {imp}, "い", acc);

    // 来る keeps the kanji stem for every base, so the base vowel is mute
    eps_link(kam, cont_plain);
    eps_link(kam, ko);
    suf(kam, {}, "れ", hyp);
    suf(kam, {}, "る", dict);

    // ichidan-like stems at each nesting depth
    for (int d = 0; d < kMaxDepth; ++d) {
      bool deeper = d + 1 < kMaxDepth;
      suf(ich[d], {}, "る", acc);
      suf(ich[d], {pfv}, "た", acc);
      suf(ich[d], {te}, "て", te_st[d]);
      suf(ich[d], {cond}, "れば", acc);
      suf(ich[d], {cond}, "たら", acc);
      suf(ich[d], {vol}, "よう", acc);
      suf(ich[d], {imp}, "ろ", acc);
      suf(ich[d], {imp}, "よ", acc);
      suf(ich[d], {neg}, "るな", acc);
      colloquial_negations(ich[d]);
      eps_link(ich[d], cont_pol);
      if (deeper) {
        suf(ich[d], {neg}, "な", iadj[d + 1]);
        suf(ich[d], {pasv}, "られ", ich[d + 1]);
        suf(ich[d], {pot}, "られ", ich[d + 1]);
        suf(ich[d], {caus}, "させ", ich[d + 1]);
        suf(te_st[d], {prog}, "い", ich[d + 1]);
      }
      suf(iadj[d], {}, "い", acc);
      suf(iadj[d], {pfv}, "かった", acc);
      suf(iadj[d], {te}, "くて", acc);
      suf(iadj[d], {cond}, "ければ", acc);
      suf(iadj[d], {cond}, "かったら", acc);
      suf(iadj[d], {adv}, "く", acc);
      suf(iadj[d], {pol}, "いです", acc);
      if (deeper) suf(iadj[d], {neg}, "くな", iadj[d + 1]);
    }

    // na-adjective copula paradigm
    suf(naadj, {}, "だ", acc);
    suf(naadj, {pfv}, "だった", acc);
    suf(naadj, {pol}, "です", acc);
    suf(naadj, {pol, pfv}, "でした", acc);
    suf(naadj, {neg}, "ではな", iadj[1]);
    suf(naadj, {neg}, "じゃな", iadj[1]);
    suf(naadj, {adv}, "に", acc);
    suf(naadj, {adv}, "な", acc);
    suf(naadj, {te}, "で", acc);
    suf(naadj, {cond}, "なら", acc);
    suf(naadj, {cond}, "ならば", acc);

    // class-tag gates in front of each shared suffix node
    auto gate = [&](StateId target) {
      StateId p = b.add_state();
      b.add_arc(p, target, Symbol::attr(AttrTag::v), Symbol::eps());
      return p;
    };
    pre_ich = gate(ich[0]);
    pre_irr = gate(irr);
    pre_e = gate(e_col);
    pre_o = gate(o_col);
    pre_dict = gate(dict);
    pre_cont_eu = gate(cont_eu);
    pre_cont_plain = gate(cont_plain);
    pre_cont_pol = gate(cont_pol);
    pre_teta = gate(teta);
    pre_si = gate(si);
    pre_sa = gate(sa);
    pre_se = gate(se);
    pre_zi = gate(zi);
    pre_ko = gate(ko);
    pre_hyp = gate(hyp);
    pre_kam = gate(kam);
    pre_iadj = b.add_state();
    b.add_arc(pre_iadj, iadj[0], Symbol::attr(AttrTag::adj), Symbol::eps());
  }

  void add_lexeme(const Lexeme& e) {
    SymSeq cs = to_symbols(e.lemma);
    size_t n = cs.size();
    switch (e.group) {
      case ConjGroup::Ichidan: {
        StateId p = identity_prefix(cs, n - 1);
        b.add_arc(p, pre_ich, cs[n - 1], Symbol::eps());
        break;
      }
      case ConjGroup::IAdjective: {
        StateId p = identity_prefix(cs, n - 1);
        b.add_arc(p, pre_iadj, cs[n - 1], Symbol::eps());
        break;
      }
      case ConjGroup::NaAdjective: {
        StateId p = identity_prefix(cs, n);
        b.add_arc(p, naadj, Symbol::attr(AttrTag::adj), Symbol::eps());
        break;
      }
      case ConjGroup::SaIrregular: {
        StateId p = identity_prefix(cs, n - 2);
        SymSeq end = {cs[n - 2], cs[n - 1]};
        bool zuru = cs[n - 2] == sym1(U'ず');
        if (zuru) {
          link(p, end, to_symbols("じ"), pre_zi);
          link(p, end, to_symbols("ぜ"), pre_se);
          link(p, end, to_symbols("ずれ"), pre_hyp);
          link(p, end, to_symbols("ずる"), pre_dict);
        } else {
          link(p, end, to_symbols("し"), pre_si);
          link(p, end, to_symbols("さ"), pre_sa);
          link(p, end, to_symbols("せ"), pre_se);
          link(p, end, to_symbols("すれ"), pre_hyp);
          link(p, end, to_symbols("する"), pre_dict);
        }
        break;
      }
      case ConjGroup::KaIrregular: {
        StateId p = identity_prefix(cs, n - 2);
        SymSeq end = {cs[n - 2], cs[n - 1]};
        if (cs[n - 2] == sym1(U'来')) {
          link(p, end, to_symbols("来"), pre_kam);
        } else {
          link(p, end, to_symbols("き"), pre_cont_plain);
          link(p, end, to_symbols("こ"), pre_ko);
          link(p, end, to_symbols("くれ"), pre_hyp);
          link(p, end, to_symbols("くる"), pre_dict);
        }
        break;
      }
      default: {  // godan rows
        StateId p = identity_prefix(cs, n - 1);
        Symbol last = cs[n - 1];
        RowKana row = row_of(e.group);
        b.add_arc(p, pre_irr, last, sym1(row.a[0]));
        StateId cont = e.has_flag(LexFlag::GeminateTe) ? pre_cont_pol
                       : e.group == ConjGroup::GodanS  ? pre_cont_plain
                                                       : pre_cont_eu;
        b.add_arc(p, cont, last, sym1(row.i[0]));
        b.add_arc(p, pre_e, last, sym1(row.e[0]));
        b.add_arc(p, pre_o, last, sym1(row.o[0]));
        b.add_arc(p, pre_dict, last, last);
        if (e.has_flag(LexFlag::GeminateTe)) b.add_arc(p, pre_teta, last, sym1(U'っ'));
        break;
      }
    }
  }
};

}  // namespace

Transducer morphotactics(const Lexicon& lex) {
  if (lex.empty()) throw EmptyLexiconError();
  GraphBuilder g;
  g.build_shared();
  for (const Lexeme& e : lex.entries()) g.add_lexeme(e);
  return std::move(g.b).build();
}

Transducer phonology() {
  std::vector<ReplacePattern> pats;
  auto pat = [&](std::string_view kana, std::string_view suffix, std::string_view repl) {
    SymSeq p = to_symbols(kana);
    p.push_back(Symbol::euphony_mark());
    for (Symbol s : to_symbols(suffix)) p.push_back(s);
    pats.push_back({p, to_symbols(repl)});
  };
  for (std::string_view k : {"い", "ち", "り"}) {
    pat(k, "て", "って");
    pat(k, "た", "った");
  }
  for (std::string_view k : {"び", "み", "に"}) {
    pat(k, "て", "んで");
    pat(k, "た", "んだ");
  }
  pat("き", "て", "いて");
  pat("き", "た", "いた");
  pat("ぎ", "て", "いで");
  pat("ぎ", "た", "いだ");
  Transducer t = build_replace(pats, false);
  t = compose(t, build_replace({{to_symbols("ている"), to_symbols("てる")}}, true));
  t = compose(t, build_replace({{to_symbols("てしまう"), to_symbols("ちゃう")}}, true));
  return t;
}

Transducer build_generator(const Lexicon& lex) { return compose(morphotactics(lex), phonology()); }

VerbGrammar::VerbGrammar(Lexicon lex)
    : lex_(std::move(lex)), generator_(build_generator(lex_)), analyzer_(invert(generator_)) {}

std::vector<std::string> VerbGrammar::generate(std::string_view lemma,
                                               const std::vector<AttrTag>& tags) const {
  auto entries = lex_.find(lemma);
  if (entries.empty()) throw UnknownLemmaError(std::string(lemma));
  std::set<AttrTag> classes;
  for (const Lexeme* e : entries)
    classes.insert(is_verb_group(e->group) ? AttrTag::v : AttrTag::adj);
  std::set<std::string> out;
  for (AttrTag cls : classes)
    for (const SymSeq& o : apply_down(generator_, lexical_input(lemma, cls, tags)))
      out.insert(render_string(o));
  return {out.begin(), out.end()};
}

std::vector<Analysis> VerbGrammar::analyze(std::string_view surface) const {
  std::set<Analysis> found;
  for (const SymSeq& o : apply_down(analyzer_, to_symbols(surface))) found.insert(parse_lexical(o));
  return {found.begin(), found.end()};
}

}  // namespace jmorph
