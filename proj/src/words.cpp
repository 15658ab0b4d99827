#include "cmband/words.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cmband {

namespace {

void check_letter(const Letter& l) {
  if (l.index < 0) throw word_error(word_error::BadLetter, "negative letter index");
  bool want_sign = !l.special();
  if (want_sign && l.sign == 0)
    throw word_error(word_error::BadLetter, "finite letter without sign");
  if (!want_sign && l.sign != 0)
    throw word_error(word_error::BadLetter, "endpoint letter 0/inf carries no sign");
}

bool word_lex_less(const ModuleWord& a, const ModuleWord& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Letter& x, const Letter& y) { return x.key() < y.key(); });
}

}  // namespace

StringDatum validate_string(const ModuleWord& w) {
  if (w.empty()) throw word_error(word_error::Empty, "empty string word");
  for (const auto& l : w) check_letter(l);
  for (size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k].family == w[k + 1].family)
      throw word_error(word_error::NonAlternating, "adjacent letters from one branch");
  for (size_t k = 1; k + 1 < w.size(); ++k)
    if (w[k].special())
      throw word_error(word_error::IndexZeroInfInterior,
                       "letter with index 0 or inf inside the word");
  StringDatum d;
  d.word = w;
  if (w.size() == 2 && w[0].index == 0 && w[1].index == 0) d.exceptional = true;
  return d;
}

BandDatum validate_band(const ModuleWord& w, int m, const Rat& lambda) {
  if (m < 1) throw word_error(word_error::BadShape, "multiplicity must be positive");
  if (lambda == 0) throw word_error(word_error::ZeroLambda, "lambda must be nonzero");
  if (w.empty() || w.size() % 2 != 0)
    throw word_error(word_error::BadShape, "band word needs an even, positive letter count");
  for (const auto& l : w) {
    check_letter(l);
    if (l.special())
      throw word_error(word_error::BadShape, "band letters need finite nonzero index");
  }
  for (size_t k = 0; k < w.size(); ++k)
    if (w[k].family == w[(k + 1) % w.size()].family)
      throw word_error(word_error::NonAlternating, "band word must alternate branches");

  ModuleWord norm = w;
  if (norm[0].family == Family::Y) std::rotate(norm.begin(), norm.begin() + 1, norm.end());
  if (is_periodic(norm)) throw word_error(word_error::Periodic, "periodic band word");
  return BandDatum{norm, m, lambda};
}

ModuleWord opposite(const ModuleWord& w) {
  ModuleWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.sign = -l.sign;
  return r;
}

ModuleWord tau(const ModuleWord& w) {
  ModuleWord r = w;
  for (auto& l : r) l.family = other(l.family);
  return r;
}

ModuleWord shift_pairs(const ModuleWord& w, int pairs) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  int s = ((2 * pairs) % n + n) % n;
  ModuleWord r = w;
  std::rotate(r.begin(), r.begin() + s, r.end());
  return r;
}

bool is_periodic(const ModuleWord& w) {
  int pairs = static_cast<int>(w.size()) / 2;
  for (int d = 1; d < pairs; ++d) {
    if (pairs % d != 0) continue;
    if (shift_pairs(w, d) == w) return true;
  }
  return false;
}

bool equivalent_strings(const StringDatum& a, const StringDatum& b) {
  return a.word == b.word || a.word == opposite(b.word);
}

namespace {

std::vector<ModuleWord> rotations(const ModuleWord& w) {
  std::vector<ModuleWord> out;
  int pairs = static_cast<int>(w.size()) / 2;
  for (int l = 0; l < pairs; ++l) out.push_back(shift_pairs(w, l));
  return out;
}

// Reverse with sign flip, rotated back to an x-first reading.
ModuleWord band_opposite(const ModuleWord& w) {
  ModuleWord r = opposite(w);
  if (!r.empty() && r[0].family == Family::Y)
    std::rotate(r.begin(), r.begin() + 1, r.end());
  return r;
}

}  // namespace

bool equivalent_bands(const BandDatum& a, const BandDatum& b) {
  if (a.multiplicity != b.multiplicity || a.lambda != b.lambda) return false;
  return canonical_band_word(a.word) == canonical_band_word(b.word);
}

bool equivalent_bands_bunch_mode(const BandDatum& a, const BandDatum& b) {
  if (a.multiplicity != b.multiplicity) return false;
  if (a.word.size() != b.word.size()) return false;
  bool same_class = canonical_band_word(a.word) == canonical_band_word(b.word);
  bool op_class = canonical_band_word(band_opposite(a.word)) == canonical_band_word(b.word);
  if (same_class && a.lambda == b.lambda) return true;
  return op_class && b.lambda != 0 && a.lambda == Rat(1) / b.lambda;
}

ModuleWord canonical_string_word(const ModuleWord& w) {
  ModuleWord o = opposite(w);
  return word_lex_less(o, w) ? o : w;
}

ModuleWord canonical_band_word(const ModuleWord& w) {
  ModuleWord best = w;
  for (const auto& r : rotations(w))
    if (word_lex_less(r, best)) best = r;
  return best;
}

namespace {

std::vector<Letter> letter_choices(Family f, int max_index, bool endpoint) {
  std::vector<Letter> out;
  if (endpoint) out.push_back(Letter{f, 0, 0});
  for (int i = 1; i <= max_index; ++i) {
    out.push_back(Letter{f, i, +1});
    out.push_back(Letter{f, i, -1});
  }
  if (endpoint) out.push_back(Letter{f, kInf, 0});
  std::sort(out.begin(), out.end(), [](const Letter& a, const Letter& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace

std::vector<StringDatum> enumerate_strings(int max_letters, int max_index) {
  if (max_letters < 1 || max_index < 1)
    throw word_error(word_error::BadShape, "enumeration bounds must be positive");
  std::vector<StringDatum> out;
  ModuleWord cur;
  auto emit = [&] {
    if (cur == canonical_string_word(cur)) out.push_back(validate_string(cur));
  };
  // cur is always a valid word on entry; specials stay confined to the ends
  // because a trailing special never recurses.
  auto rec = [&](auto&& self, int remaining) -> void {
    emit();
    if (remaining == 0) return;
    Family next = other(cur.back().family);
    for (const auto& l : letter_choices(next, max_index, true)) {
      cur.push_back(l);
      if (l.special()) emit();
      else self(self, remaining - 1);
      cur.pop_back();
    }
  };
  for (Family start : {Family::X, Family::Y}) {
    for (const auto& l : letter_choices(start, max_index, true)) {
      cur.push_back(l);
      rec(rec, max_letters - 1);
      cur.pop_back();
    }
  }
  std::sort(out.begin(), out.end(), [](const StringDatum& a, const StringDatum& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return word_lex_less(a.word, b.word);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const StringDatum& a, const StringDatum& b) { return a.word == b.word; }),
            out.end());
  return out;
}

std::vector<ModuleWord> enumerate_band_words(int max_letters, int max_index) {
  if (max_letters < 2 || max_index < 1) return {};
  std::vector<ModuleWord> out;
  ModuleWord cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (!is_periodic(cur) && cur == canonical_band_word(cur)) out.push_back(cur);
      return;
    }
    Family next = cur.empty() ? Family::X : other(cur.back().family);
    for (const auto& l : letter_choices(next, max_index, false)) {
      cur.push_back(l);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  for (int len = 2; len <= max_letters; len += 2) rec(rec, len);
  std::sort(out.begin(), out.end(), [](const ModuleWord& a, const ModuleWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return word_lex_less(a, b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

std::string index_str(int i) { return i == kInf ? "inf" : std::to_string(i); }

}  // namespace

std::string word_str(const ModuleWord& w) {
  std::ostringstream out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out << " ";
    out << (w[k].family == Family::X ? "x" : "y") << "[" << index_str(w[k].index) << "]";
    if (w[k].sign > 0) out << "+";
    if (w[k].sign < 0) out << "-";
  }
  return out.str();
}

std::string band_str(const BandDatum& b) {
  std::ostringstream out;
  out << "band(" << word_str(b.word) << "; m=" << b.multiplicity
      << "; lambda=" << rat_str(b.lambda) << ")";
  return out.str();
}

ModuleWord parse_word(const std::string& text) {
  ModuleWord w;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    char f = text[i];
    if (f != 'x' && f != 'y') throw word_error(word_error::BadLetter, "expected x or y");
    ++i;
    if (i >= text.size() || text[i] != '[')
      throw word_error(word_error::BadLetter, "expected [index]");
    ++i;
    size_t close = text.find(']', i);
    if (close == std::string::npos) throw word_error(word_error::BadLetter, "missing ]");
    std::string idx = text.substr(i, close - i);
    i = close + 1;
    Letter l;
    l.family = f == 'x' ? Family::X : Family::Y;
    if (idx == "inf") l.index = kInf;
    else {
      try {
        l.index = std::stoi(idx);
      } catch (...) {
        throw word_error(word_error::BadLetter, "bad index: " + idx);
      }
      if (l.index < 0) throw word_error(word_error::BadLetter, "bad index: " + idx);
    }
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      l.sign = text[i] == '+' ? +1 : -1;
      ++i;
    }
    w.push_back(l);
    skip();
  }
  if (w.empty()) throw word_error(word_error::Empty, "empty word");
  return w;
}

ParsedDatum parse_datum(const std::string& text) {
  ParsedDatum out;
  size_t b = text.find_first_not_of(" \t");
  if (b != std::string::npos && text.compare(b, 5, "band(") == 0) {
    size_t open = text.find('(', b);
    size_t close = text.rfind(')');
    if (close == std::string::npos || close < open)
      throw word_error(word_error::BadShape, "unbalanced band(...)");
    std::string inner = text.substr(open + 1, close - open - 1);
    std::vector<std::string> parts;
    std::stringstream ss(inner);
    std::string p;
    while (std::getline(ss, p, ';')) parts.push_back(p);
    if (parts.size() != 3)
      throw word_error(word_error::BadShape, "band(...) needs word; m=..; lambda=..");
    ModuleWord w = parse_word(parts[0]);
    auto field = [&](const std::string& s, const std::string& key) {
      size_t eq = s.find('=');
      if (eq == std::string::npos) throw word_error(word_error::BadShape, "missing " + key);
      std::string k = s.substr(0, eq);
      k.erase(std::remove_if(k.begin(), k.end(), ::isspace), k.end());
      if (k != key) throw word_error(word_error::BadShape, "expected " + key + "=...");
      return s.substr(eq + 1);
    };
    int m = std::stoi(field(parts[1], "m"));
    Rat lambda = parse_rat(field(parts[2], "lambda"));
    out.band_datum = validate_band(w, m, lambda);
  } else {
    out.string_datum = validate_string(parse_word(text));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bunch of chains.

std::string symbol_str(const BunchSymbol& s) {
  switch (s.kind) {
    case SymKind::Xi: return "xi[" + index_str(s.index) + "]";
    case SymKind::Alpha: return "alpha[" + index_str(s.index) + "]";
    case SymKind::Zeta: return "zeta[" + index_str(s.index) + "]";
    case SymKind::Beta: return "beta[" + index_str(s.index) + "]";
    case SymKind::Gamma: return "gamma";
    case SymKind::Delta: return "delta";
  }
  return "?";
}

std::pair<int, int> chain_position(const BunchSymbol& s) {
  switch (s.kind) {
    case SymKind::Xi:
    case SymKind::Zeta:
      return {0, s.index};
    case SymKind::Alpha:
    case SymKind::Beta:
      return {1, s.index == kInf ? 0 : kInf - s.index};
    default:
      return {2, 0};
  }
}

bool tilde_holds(const BunchSymbol& a, const BunchSymbol& b) {
  auto pair_match = [](const BunchSymbol& p, const BunchSymbol& q, SymKind k1, SymKind k2) {
    return p.kind == k1 && q.kind == k2 && p.index == q.index && p.index >= 1 && p.index != kInf;
  };
  if ((a.kind == SymKind::Gamma && b.kind == SymKind::Delta) ||
      (a.kind == SymKind::Delta && b.kind == SymKind::Gamma))
    return true;
  return pair_match(a, b, SymKind::Xi, SymKind::Alpha) ||
         pair_match(a, b, SymKind::Alpha, SymKind::Xi) ||
         pair_match(a, b, SymKind::Zeta, SymKind::Beta) ||
         pair_match(a, b, SymKind::Beta, SymKind::Zeta);
}

bool dash_holds(const BunchSymbol& a, const BunchSymbol& b) {
  if (a.kind == SymKind::Gamma) return b.in_Ex();
  if (b.kind == SymKind::Gamma) return a.in_Ex();
  if (a.kind == SymKind::Delta) return b.in_Ey();
  if (b.kind == SymKind::Delta) return a.in_Ey();
  return false;
}

bool valid_full_word(const FullWord& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.syms.empty()) return fail("empty word");
  if (w.rels.size() + 1 != w.syms.size()) return fail("relation count mismatch");
  for (size_t k = 0; k < w.rels.size(); ++k) {
    bool ok = w.rels[k] == Rel::Tilde ? tilde_holds(w.syms[k], w.syms[k + 1])
                                      : dash_holds(w.syms[k], w.syms[k + 1]);
    if (!ok) return fail("relation " + std::to_string(k) + " does not hold");
    if (k + 1 < w.rels.size() && w.rels[k] == w.rels[k + 1])
      return fail("relations do not alternate");
  }
  if (w.syms.size() == 1) {
    if (!w.syms[0].unpaired()) return fail("single-symbol word must be xi0/alphainf/zeta0/betainf");
    return true;
  }
  if (!w.syms.front().unpaired() && w.rels.front() != Rel::Tilde)
    return fail("word may not open with a dash");
  if (!w.syms.back().unpaired() && w.rels.back() != Rel::Tilde)
    return fail("word may not close with a dash");
  return true;
}

bool valid_cyclic_word(const CyclicWord& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& b = w.base;
  if (b.syms.size() < 2) return fail("cyclic word too short");
  if (b.rels.size() + 1 != b.syms.size()) return fail("relation count mismatch");
  for (size_t k = 0; k < b.rels.size(); ++k) {
    bool ok = b.rels[k] == Rel::Tilde ? tilde_holds(b.syms[k], b.syms[k + 1])
                                      : dash_holds(b.syms[k], b.syms[k + 1]);
    if (!ok) return fail("relation " + std::to_string(k) + " does not hold");
    if (k + 1 < b.rels.size() && b.rels[k] == b.rels[k + 1])
      return fail("relations do not alternate");
  }
  if (b.rels.front() != Rel::Tilde || b.rels.back() != Rel::Tilde)
    return fail("first and second-to-last relations must be tildes");
  if (!dash_holds(b.syms.back(), b.syms.front())) return fail("closing dash does not hold");
  return true;
}

FullWord opposite(const FullWord& w) {
  FullWord r;
  r.syms.assign(w.syms.rbegin(), w.syms.rend());
  r.rels.assign(w.rels.rbegin(), w.rels.rend());
  return r;
}

CyclicWord shift(const CyclicWord& w, int k) {
  if (k % 2 != 0) throw word_error(word_error::OddShift, "cyclic shifts must be even");
  int n = static_cast<int>(w.base.syms.size());
  int s = ((k % n) + n) % n;
  CyclicWord r = w;
  std::rotate(r.base.syms.begin(), r.base.syms.begin() + s, r.base.syms.end());
  // rels viewed cyclically: rels[i] sits between syms[i] and syms[i+1]
  std::vector<Rel> cyc = w.base.rels;
  cyc.push_back(Rel::Dash);
  std::rotate(cyc.begin(), cyc.begin() + s, cyc.end());
  assert(cyc.back() == Rel::Dash);
  cyc.pop_back();
  r.base.rels = cyc;
  return r;
}

bool is_periodic(const CyclicWord& w) {
  int n = static_cast<int>(w.base.syms.size());
  for (int k = 2; k < n; k += 2)
    if (shift(w, k) == w) return true;
  return false;
}

std::string full_word_str(const FullWord& w) {
  std::ostringstream out;
  for (size_t k = 0; k < w.syms.size(); ++k) {
    if (k) out << (w.rels[k - 1] == Rel::Tilde ? " ~ " : " - ");
    out << symbol_str(w.syms[k]);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Letter blocks and the gamma/delta capping.

namespace {

// The two-symbol block of a signed letter, or the lone symbol of an
// unsigned one. Minus means the xi/zeta symbol comes first.
std::vector<BunchSymbol> letter_block(const Letter& l) {
  bool x = l.family == Family::X;
  if (l.index == 0) return {BunchSymbol{x ? SymKind::Xi : SymKind::Zeta, 0}};
  if (l.index == kInf) return {BunchSymbol{x ? SymKind::Alpha : SymKind::Beta, kInf}};
  BunchSymbol lo{x ? SymKind::Xi : SymKind::Zeta, l.index};
  BunchSymbol hi{x ? SymKind::Alpha : SymKind::Beta, l.index};
  if (l.sign < 0) return {lo, hi};
  return {hi, lo};
}

std::optional<Letter> block_letter(const std::vector<BunchSymbol>& blk) {
  if (blk.size() == 1) {
    const auto& s = blk[0];
    if (!s.unpaired()) return std::nullopt;
    Letter l;
    l.family = s.in_Ex() ? Family::X : Family::Y;
    l.index = (s.kind == SymKind::Xi || s.kind == SymKind::Zeta) ? 0 : kInf;
    l.sign = 0;
    return l;
  }
  if (blk.size() != 2) return std::nullopt;
  Letter l;
  l.family = blk[0].in_Ex() ? Family::X : Family::Y;
  l.index = blk[0].index;
  bool first_low = blk[0].kind == SymKind::Xi || blk[0].kind == SymKind::Zeta;
  l.sign = first_low ? -1 : +1;
  return l;
}

// F-pair with gamma facing x blocks and delta facing y blocks.
std::vector<BunchSymbol> pair_before(Family f) {
  if (f == Family::X) return {BunchSymbol{SymKind::Delta}, BunchSymbol{SymKind::Gamma}};
  return {BunchSymbol{SymKind::Gamma}, BunchSymbol{SymKind::Delta}};
}

std::vector<BunchSymbol> pair_after(Family f) { return pair_before(other(f)); }

void append_block(FullWord& w, const std::vector<BunchSymbol>& blk) {
  for (size_t k = 0; k < blk.size(); ++k) {
    if (!w.syms.empty()) w.rels.push_back(k == 0 ? Rel::Dash : Rel::Tilde);
    else if (k > 0) w.rels.push_back(Rel::Tilde);
    w.syms.push_back(blk[k]);
  }
}

}  // namespace

FullWord module_to_bunch(const StringDatum& s) {
  const ModuleWord& w = s.word;
  FullWord out;
  if (w.size() == 1 && w[0].special()) {
    // Lone endpoint letters read per their natural table side: x specials
    // close a word, y specials open one.
    if (w[0].family == Family::X) {
      append_block(out, pair_before(Family::X));
      append_block(out, letter_block(w[0]));
    } else {
      append_block(out, letter_block(w[0]));
      append_block(out, pair_after(Family::Y));
    }
    return out;
  }
  if (!w.front().special()) append_block(out, pair_before(w.front().family));
  for (size_t k = 0; k < w.size(); ++k) {
    if (k > 0) append_block(out, pair_before(w[k].family));
    append_block(out, letter_block(w[k]));
  }
  if (!w.back().special()) append_block(out, pair_after(w.back().family));
  return out;
}

CyclicWord module_to_bunch_band(const ModuleWord& band_word) {
  CyclicWord out;
  for (const auto& l : band_word) {
    append_block(out.base, pair_before(l.family));
    append_block(out.base, letter_block(l));
  }
  // the closing dash from the final beta/zeta back to the opening delta is
  // implicit in the CyclicWord type
  return out;
}

namespace {

// Splits a word into maximal tilde-connected groups.
std::vector<std::vector<BunchSymbol>> tilde_groups(const FullWord& w) {
  std::vector<std::vector<BunchSymbol>> out;
  std::vector<BunchSymbol> cur{w.syms[0]};
  for (size_t k = 0; k < w.rels.size(); ++k) {
    if (w.rels[k] == Rel::Tilde) {
      cur.push_back(w.syms[k + 1]);
    } else {
      out.push_back(cur);
      cur = {w.syms[k + 1]};
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::optional<ModuleWord> bunch_to_module(const FullWord& w) {
  if (!valid_full_word(w)) return std::nullopt;
  ModuleWord letters;
  for (const auto& g : tilde_groups(w)) {
    if (g.size() == 2 && g[0].in_F()) continue;  // gamma/delta pair
    auto l = block_letter(g);
    if (!l) return std::nullopt;
    letters.push_back(*l);
  }
  if (letters.empty()) return std::nullopt;
  StringDatum d;
  try {
    d = validate_string(letters);
  } catch (const word_error&) {
    return std::nullopt;
  }
  if (module_to_bunch(d) == w) return letters;
  auto flipped = validate_string(opposite(letters));
  if (module_to_bunch(flipped) == w) return flipped.word;
  return std::nullopt;
}

std::optional<ModuleWord> bunch_to_module(const CyclicWord& w) {
  if (!valid_cyclic_word(w)) return std::nullopt;
  int n = static_cast<int>(w.base.syms.size());
  for (int k = 0; k < n; k += 2) {
    CyclicWord rot = shift(w, k);
    if (!valid_cyclic_word(rot)) continue;
    auto groups = tilde_groups(rot.base);
    ModuleWord letters;
    bool ok = true;
    for (const auto& g : groups) {
      if (g.size() == 2 && g[0].in_F()) continue;
      auto l = block_letter(g);
      if (!l || l->special()) {
        ok = false;
        break;
      }
      letters.push_back(*l);
    }
    if (!ok || letters.empty() || letters[0].family != Family::X) continue;
    if (module_to_bunch_band(letters) == rot) return letters;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Symbol-level enumeration.

namespace {

struct Token {
  std::vector<BunchSymbol> syms;  // one symbol (special) or a tilde pair
  bool special() const { return syms.size() == 1; }
};

std::vector<Token> all_tokens(int max_index) {
  std::vector<Token> out;
  out.push_back({{BunchSymbol{SymKind::Xi, 0}}});
  out.push_back({{BunchSymbol{SymKind::Alpha, kInf}}});
  out.push_back({{BunchSymbol{SymKind::Zeta, 0}}});
  out.push_back({{BunchSymbol{SymKind::Beta, kInf}}});
  out.push_back({{BunchSymbol{SymKind::Gamma}, BunchSymbol{SymKind::Delta}}});
  out.push_back({{BunchSymbol{SymKind::Delta}, BunchSymbol{SymKind::Gamma}}});
  for (int i = 1; i <= max_index; ++i) {
    out.push_back({{BunchSymbol{SymKind::Xi, i}, BunchSymbol{SymKind::Alpha, i}}});
    out.push_back({{BunchSymbol{SymKind::Alpha, i}, BunchSymbol{SymKind::Xi, i}}});
    out.push_back({{BunchSymbol{SymKind::Zeta, i}, BunchSymbol{SymKind::Beta, i}}});
    out.push_back({{BunchSymbol{SymKind::Beta, i}, BunchSymbol{SymKind::Zeta, i}}});
  }
  return out;
}

FullWord assemble(const std::vector<const Token*>& toks) {
  FullWord w;
  for (const auto* t : toks) append_block(w, t->syms);
  return w;
}

}  // namespace

std::vector<FullWord> enumerate_full_words(int max_symbols, int max_index) {
  std::vector<FullWord> out;
  auto tokens = all_tokens(max_index);
  std::vector<const Token*> cur;
  int used = 0;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) {
      FullWord w = assemble(cur);
      if (valid_full_word(w)) out.push_back(w);
    }
    for (const auto& t : tokens) {
      if (used + static_cast<int>(t.syms.size()) > max_symbols) continue;
      if (!cur.empty()) {
        // specials may not sit in the interior; the previous token must not
        // be a special that already has a neighbor on its left
        if (cur.size() >= 2 && cur.back()->special()) continue;
        if (!dash_holds(cur.back()->syms.back(), t.syms.front())) continue;
      }
      cur.push_back(&t);
      used += static_cast<int>(t.syms.size());
      self(self);
      used -= static_cast<int>(t.syms.size());
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<CyclicWord> enumerate_cyclic_words(int max_symbols, int max_index) {
  std::vector<CyclicWord> out;
  for (const auto& w : enumerate_band_words(max_symbols / 4, max_index)) {
    CyclicWord c = module_to_bunch_band(w);
    if (static_cast<int>(c.base.syms.size()) <= max_symbols && !is_periodic(c))
      out.push_back(c);
  }
  return out;
}

}  // namespace cmband
