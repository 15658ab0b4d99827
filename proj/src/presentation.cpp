#include "cmband/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cmband/canonical_form.hpp"
#include "json.hpp"

namespace cmband {

namespace {

const RingSpec& RA() { return RingSpec::A(); }

RingElem var_pow(const RingSpec& r, const char* v, int e) {
  return RingElem::variable(r, v, e);
}

RingElem a_mono(int ex, int ey, int eu, int ev) {
  Monomial m;
  m.e = {ex, ey, eu, ev};
  return RingElem::monomial(RA(), m);
}

// Entries a letter contributes toward its neighbouring gamma/delta pairs.
// `left` faces the pair before the letter, `right` the pair after it.
struct LetterEntries {
  std::optional<RingElem> left, right;
};

LetterEntries letter_entries(const Letter& l, bool undivided, bool is_first, bool is_last,
                             size_t word_size) {
  LetterEntries e;
  bool x = l.family == Family::X;
  if (l.special()) {
    RingElem entry;
    if (l.index == 0) {
      entry = x ? a_mono(1, 0, 0, 0) : a_mono(0, 1, 0, 0);  // x resp. y
    } else {
      if (undivided) entry = x ? a_mono(1, 0, 1, 0) : a_mono(0, 1, 0, 1);  // ux resp. vy
      else entry = x ? a_mono(0, 0, 1, 0) : a_mono(0, 0, 0, 1);            // u resp. v
    }
    if (word_size == 1) {
      // lone x specials close a word, lone y specials open one
      if (x) e.left = entry;
      else e.right = entry;
    } else if (is_first) {
      e.right = entry;
    } else {
      e.left = entry;
    }
    return e;
  }
  int p = l.index + (undivided ? 1 : 0);
  RingElem power = x ? a_mono(p, 0, 0, 0) : a_mono(0, p, 0, 0);
  RingElem nil;
  if (undivided) nil = x ? a_mono(1, 0, 1, 0) : a_mono(0, 1, 0, 1);  // ux / vy
  else nil = x ? a_mono(0, 0, 1, 0) : a_mono(0, 0, 0, 1);            // u / v
  if (l.sign > 0) {
    e.left = nil;
    e.right = power;
  } else {
    e.left = power;
    e.right = nil;
  }
  return e;
}

bool has_zero_index(const ModuleWord& w) {
  return std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.index == 0; });
}

SummandLabel summand_of(const Letter& l) { return SummandLabel{l.family, l.index}; }

// e * M for an m x m rational block, written at block position (rb, cb).
void put_block(PolyMatrix& gens, int m, int rb, int cb, const RingElem& e, const QMat* blockM) {
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      Rat f = blockM ? (*blockM)(r, c) : (r == c ? Rat(1) : Rat(0));
      if (f == 0) continue;
      gens.at(rb * m + r, cb * m + c) = gens.at(rb * m + r, cb * m + c) + e.scaled(f);
    }
}

QMat jordan_block(int m, const Rat& lambda) {
  QMat j = QMat::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    j(k, k) = lambda;
    if (k + 1 < m) j(k, k + 1) = Rat(1);
  }
  return j;
}

}  // namespace

std::string summand_str(const SummandLabel& s) {
  std::string idx = s.index == kInf ? "inf" : std::to_string(s.index);
  return (s.family == Family::X ? "X[" : "Y[") + idx + "]";
}

Presentation build_string_module(const StringDatum& s) {
  const ModuleWord& w = s.word;
  const bool undiv = has_zero_index(w);
  const int n = static_cast<int>(w.size());

  std::vector<LetterEntries> ent(n);
  for (int k = 0; k < n; ++k)
    ent[k] = letter_entries(w[k], undiv, k == 0, k == n - 1, w.size());

  bool cap_before = ent[0].left.has_value() && (n > 1 ? !w[0].special() : true);
  bool cap_after = ent[n - 1].right.has_value() && (n > 1 ? !w[n - 1].special() : true);

  int t = (n - 1) + (cap_before ? 1 : 0) + (cap_after ? 1 : 0);
  Presentation p;
  p.ring_tag = &RA();
  p.block = 1;
  p.exceptional = s.exceptional;
  for (const auto& l : w) p.row_summands.push_back({summand_of(l)});
  p.gens = PolyMatrix(RA(), n, t);

  int col = 0;
  if (cap_before) p.gens.at(0, col++) = *ent[0].left;
  for (int k = 0; k + 1 < n; ++k, ++col) {
    if (ent[k].right) p.gens.at(k, col) = *ent[k].right;
    if (ent[k + 1].left) p.gens.at(k + 1, col) = *ent[k + 1].left;
  }
  if (cap_after) p.gens.at(n - 1, col++) = *ent[n - 1].right;
  return p;
}

Presentation build_band_module(const BandDatum& b) {
  const ModuleWord& w = b.word;
  const int n = static_cast<int>(w.size());
  const int m = b.multiplicity;

  std::vector<LetterEntries> ent(n);
  for (int k = 0; k < n; ++k) ent[k] = letter_entries(w[k], false, false, false, 2);

  Presentation p;
  p.ring_tag = &RA();
  p.block = m;
  for (const auto& l : w) p.row_summands.push_back({summand_of(l)});
  p.gens = PolyMatrix(RA(), n * m, n * m);

  QMat j = jordan_block(m, b.lambda);
  // column 0 wraps: the Jordan block rides on the last letter's outward entry
  put_block(p.gens, m, 0, 0, *ent[0].left, nullptr);
  put_block(p.gens, m, n - 1, 0, *ent[n - 1].right, &j);
  for (int c = 1; c < n; ++c) {
    put_block(p.gens, m, c - 1, c, *ent[c - 1].right, nullptr);
    put_block(p.gens, m, c, c, *ent[c].left, nullptr);
  }
  return p;
}

Presentation merge_rows(const Presentation& p) {
  if (p.merged) throw word_error(word_error::BadShape, "presentation already merged");
  Presentation out;
  out.ring_tag = p.ring_tag;
  out.block = p.block;
  out.exceptional = p.exceptional;
  out.merged = true;
  const int rb = p.row_blocks();
  const int m = p.block;
  for (int k = 0; k < rb; k += 2) {
    std::vector<SummandLabel> group = p.row_summands[k];
    if (k + 1 < rb)
      group.insert(group.end(), p.row_summands[k + 1].begin(), p.row_summands[k + 1].end());
    out.row_summands.push_back(group);
  }
  out.gens = PolyMatrix(p.gens.ring(), out.row_blocks() * m, p.gens.cols());
  for (int k = 0; k < rb; ++k) {
    int target = k / 2;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < p.gens.cols(); ++c)
        out.gens.at(target * m + r, c) = out.gens.at(target * m + r, c) + p.gens.at(k * m + r, c);
  }
  return out;
}

namespace {

std::vector<int> occurrence_numbers(const std::vector<BunchSymbol>& syms) {
  std::vector<int> occ(syms.size());
  std::map<std::pair<int, int>, int> seen;
  for (size_t p = 0; p < syms.size(); ++p)
    occ[p] = ++seen[{static_cast<int>(syms[p].kind), syms[p].index}];
  return occ;
}

RingElem symbol_weight(const BunchSymbol& s, bool undivided) {
  switch (s.kind) {
    case SymKind::Xi:
      if (s.index == 0) return a_mono(1, 0, 0, 0);  // the (x+y)-scaled idempotent
      return a_mono(s.index + (undivided ? 1 : 0), 0, 0, 0);
    case SymKind::Alpha:
      return undivided ? a_mono(1, 0, 1, 0) : a_mono(0, 0, 1, 0);
    case SymKind::Zeta:
      if (s.index == 0) return a_mono(0, 1, 0, 0);
      return a_mono(0, s.index + (undivided ? 1 : 0), 0, 0);
    case SymKind::Beta:
      return undivided ? a_mono(0, 1, 0, 1) : a_mono(0, 0, 0, 1);
    default:
      throw word_error(word_error::BadShape, "gamma/delta carry no weight");
  }
}

// Common part of the two reconstructions: weight each stripe row, then
// collapse every letter's tilde-paired rows into one presentation row.
Presentation reconstruct(const std::vector<BunchSymbol>& syms, const CanonicalForm& form,
                         bool undivided) {
  auto occ = occurrence_numbers(syms);

  // letters appear as maximal tilde groups of E symbols in word order
  struct LetterRows {
    std::vector<std::pair<BunchSymbol, int>> parts;  // (symbol, occurrence)
  };
  std::vector<LetterRows> letters;
  for (size_t k = 0; k < syms.size(); ++k) {
    if (!syms[k].in_E()) continue;
    bool continues = k > 0 && syms[k - 1].in_E() && tilde_holds(syms[k - 1], syms[k]);
    if (!continues) letters.push_back({});
    letters.back().parts.push_back({syms[k], occ[k]});
  }

  const int m = form.block;
  Presentation p;
  p.ring_tag = &RA();
  p.block = m;
  p.merged = false;
  p.gens = PolyMatrix(RA(), static_cast<int>(letters.size()) * m, form.t * m);
  for (int g = 0; g < static_cast<int>(letters.size()); ++g) {
    std::vector<SummandLabel> summands;
    for (const auto& [sym, o] : letters[g].parts) {
      if (summands.empty()) {
        SummandLabel lbl;
        lbl.family = sym.in_Ex() ? Family::X : Family::Y;
        lbl.index = sym.unpaired() ? ((sym.kind == SymKind::Xi || sym.kind == SymKind::Zeta) ? 0 : kInf)
                                   : sym.index;
        summands.push_back(lbl);
      }
      const QMat& theta = sym.in_Ex() ? form.theta_x : form.theta_y;
      int r0 = form.row_of(sym, o);
      RingElem wgt = symbol_weight(sym, undivided);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < form.t * m; ++c) {
          if (theta(r0 + r, c) == 0) continue;
          p.gens.at(g * m + r, c) = p.gens.at(g * m + r, c) + wgt.scaled(theta(r0 + r, c));
        }
    }
    p.row_summands.push_back(summands);
  }
  return p;
}

}  // namespace

Presentation reconstruct_string(const StringDatum& s) {
  FullWord w = module_to_bunch(s);
  CanonicalForm form = canonical_form_string(w);
  Presentation p = reconstruct(w.syms, form, has_zero_index(s.word));
  p.exceptional = s.exceptional;
  return p;
}

Presentation reconstruct_band(const BandDatum& b) {
  CyclicWord w = module_to_bunch_band(b.word);
  CanonicalForm form = canonical_form_band(w, b.multiplicity, b.lambda);
  return reconstruct(w.base.syms, form, false);
}

// ---------------------------------------------------------------------------
// Translations.

namespace {

enum class Target { P, T };

RingElem translate_entry(const RingElem& e, Target tgt, bool undivided) {
  const RingSpec& out_ring = tgt == Target::P ? RingSpec::P() : RingSpec::T();
  RingElem out(out_ring);
  for (const auto& [m, c] : e.terms()) {
    int ex = m.e[0], ey = m.e[1], eu = m.e[2], ev = m.e[3];
    Monomial r;
    if (tgt == Target::P) {
      // vars x, y, z
      if (eu == 0 && ev == 0 && ey == 0 && ex >= 1) r.e = {ex + (undivided ? 0 : 1), 0, 0, 0};
      else if (eu == 0 && ev == 0 && ex == 0 && ey >= 1) r.e = {0, ey + (undivided ? 0 : 1), 0, 0};
      else if (!undivided && eu == 1 && ex == 0 && ey == 0 && ev == 0) r.e = {1, 0, 1, 0};  // xz
      else if (!undivided && ev == 1 && ex == 0 && ey == 0 && eu == 0) r.e = {0, 1, 1, 0};  // yz
      else if (undivided && eu == 1 && ex == 1 && ey == 0 && ev == 0) r.e = {1, 0, 1, 0};
      else if (undivided && ev == 1 && ey == 1 && ex == 0 && eu == 0) r.e = {0, 1, 1, 0};
      else throw word_error(word_error::BadShape, "entry outside the translation table: " + e.str());
    } else {
      // vars a, b
      int shift = undivided ? 1 : 2;
      if (eu == 0 && ev == 0 && ey == 0 && ex >= 1) r.e = {ex + shift, 0, 0, 0};
      else if (eu == 0 && ev == 0 && ex == 0 && ey >= 1) r.e = {0, ey + shift, 0, 0};
      else if (!undivided && eu == 1 && ex == 0 && ey == 0 && ev == 0) r.e = {2, 1, 0, 0};  // a^2 b
      else if (!undivided && ev == 1 && ex == 0 && ey == 0 && eu == 0) r.e = {1, 2, 0, 0};  // a b^2
      else if (undivided && eu == 1 && ex == 1 && ey == 0 && ev == 0) r.e = {2, 1, 0, 0};
      else if (undivided && ev == 1 && ey == 1 && ex == 0 && eu == 0) r.e = {1, 2, 0, 0};
      else throw word_error(word_error::BadShape, "entry outside the translation table: " + e.str());
    }
    out = out + RingElem::monomial(out_ring, r, c);
  }
  return out;
}

Presentation translate_all(const Presentation& p, Target tgt, bool undivided) {
  Presentation out = p;
  out.ring_tag = tgt == Target::P ? &RingSpec::P() : &RingSpec::T();
  out.gens = PolyMatrix(*out.ring_tag, p.gens.rows(), p.gens.cols());
  for (int r = 0; r < p.gens.rows(); ++r)
    for (int c = 0; c < p.gens.cols(); ++c)
      if (!p.gens.at(r, c).is_zero())
        out.gens.at(r, c) = translate_entry(p.gens.at(r, c), tgt, undivided);
  return out;
}

// Columns holding the literal x (resp. y) entry of an x0/y0 letter.
std::vector<int> columns_with_unit_power(const Presentation& p, int var) {
  std::vector<int> cols;
  Monomial probe;
  probe.e[var] = 1;
  for (int c = 0; c < p.gens.cols(); ++c) {
    bool hit = false;
    for (int r = 0; r < p.gens.rows() && !hit; ++r) hit = p.gens.at(r, c).coeff(probe) != 0;
    if (hit) cols.push_back(c);
  }
  return cols;
}

}  // namespace

Presentation restrict_to_P(const Presentation& p, bool word_has_x0_or_y0) {
  if (p.exceptional)
    throw word_error(word_error::ExceptionalWord,
                     "the string x0 y0 is not generated over P; see exceptional_p_presentation");
  return translate_all(p, Target::P, word_has_x0_or_y0);
}

Presentation exceptional_p_presentation() {
  const RingSpec& P = RingSpec::P();
  Presentation p;
  p.ring_tag = &P;
  p.exceptional = true;
  p.merged = true;
  p.row_summands = {{SummandLabel{Family::X, 0}, SummandLabel{Family::Y, 0}}};
  p.gens = PolyMatrix(P, 1, 2);
  p.gens.at(0, 0) = parse_elem(P, "x + y");
  p.gens.at(0, 1) = parse_elem(P, "x*z");
  return p;
}

Presentation induce_to_T(const Presentation& p, bool word_has_x0_or_y0) {
  Presentation base = p;
  if (word_has_x0_or_y0) {
    auto xcols = columns_with_unit_power(p, 0);
    auto ycols = columns_with_unit_power(p, 1);
    int extra = static_cast<int>(xcols.size() + ycols.size());
    PolyMatrix g(p.gens.ring(), p.gens.rows(), p.gens.cols() + extra);
    for (int r = 0; r < p.gens.rows(); ++r)
      for (int c = 0; c < p.gens.cols(); ++c) g.at(r, c) = p.gens.at(r, c);
    int at = p.gens.cols();
    RingElem u = RingElem::variable(RA(), "u");
    RingElem v = RingElem::variable(RA(), "v");
    for (int c : xcols) {
      for (int r = 0; r < p.gens.rows(); ++r) g.at(r, at) = u * p.gens.at(r, c);
      ++at;
    }
    for (int c : ycols) {
      for (int r = 0; r < p.gens.rows(); ++r) g.at(r, at) = v * p.gens.at(r, c);
      ++at;
    }
    base.gens = g;
  }
  return translate_all(base, Target::T, word_has_x0_or_y0);
}

// ---------------------------------------------------------------------------
// Compact forms.

namespace {

bool compact_conditions(const ModuleWord& w, bool cyclic) {
  if (w.size() % 2 != 0 || w.empty()) return false;
  if (has_zero_index(w)) return false;
  std::vector<int> signs;
  for (const auto& l : w)
    if (!l.special()) signs.push_back(l.sign);
  for (size_t k = 0; k + 1 < signs.size(); ++k)
    if (signs[k] == signs[k + 1]) return false;
  if (cyclic && signs.size() >= 2 && signs.back() == signs.front()) return false;
  if (w.front().index == kInf && !signs.empty() && signs.front() != +1) return false;
  if (w.back().index == kInf && !signs.empty() && signs.back() != -1) return false;
  return true;
}

// Rewrites x^(k+1) -> x^k, y^(k+1) -> y^k and the matched pair
// xz + yz -> z (over T: a^(k+2) -> a^k and a^2 b + a b^2 -> ab).
std::optional<RingElem> compact_entry(const RingElem& e, Target tgt) {
  const RingSpec& ring = e.ring();
  RingElem out(ring);
  Rat cx(0), cy(0);
  for (const auto& [m, c] : e.terms()) {
    if (tgt == Target::P) {
      if (m.e[2] == 1 && m.e[0] == 1 && m.e[1] == 0) {
        cx = c;
        continue;
      }
      if (m.e[2] == 1 && m.e[1] == 1 && m.e[0] == 0) {
        cy = c;
        continue;
      }
      if (m.e[2] == 0 && m.e[1] == 0 && m.e[0] >= 1) {
        Monomial r;
        r.e = {m.e[0] - 1, 0, 0, 0};
        out = out + RingElem::monomial(ring, r, c);
        continue;
      }
      if (m.e[2] == 0 && m.e[0] == 0 && m.e[1] >= 1) {
        Monomial r;
        r.e = {0, m.e[1] - 1, 0, 0};
        out = out + RingElem::monomial(ring, r, c);
        continue;
      }
    } else {
      if (m.e[0] == 2 && m.e[1] == 1) {
        cx = c;
        continue;
      }
      if (m.e[0] == 1 && m.e[1] == 2) {
        cy = c;
        continue;
      }
      if (m.e[1] == 0 && m.e[0] >= 2) {
        Monomial r;
        r.e = {m.e[0] - 2, 0, 0, 0};
        out = out + RingElem::monomial(ring, r, c);
        continue;
      }
      if (m.e[0] == 0 && m.e[1] >= 2) {
        Monomial r;
        r.e = {0, m.e[1] - 2, 0, 0};
        out = out + RingElem::monomial(ring, r, c);
        continue;
      }
    }
    return std::nullopt;
  }
  if (cx != cy) return std::nullopt;
  if (cx != 0) {
    Monomial z;
    if (tgt == Target::P) z.e = {0, 0, 1, 0};
    else z.e = {1, 1, 0, 0};
    out = out + RingElem::monomial(ring, z, cx);
  }
  return out;
}

std::optional<Presentation> compact_form(const Presentation& merged_a, const ModuleWord& word,
                                         bool cyclic, Target tgt) {
  if (!compact_conditions(word, cyclic)) return std::nullopt;
  Presentation plain = translate_all(merged_a, tgt, false);
  Presentation out = plain;
  for (int r = 0; r < plain.gens.rows(); ++r)
    for (int c = 0; c < plain.gens.cols(); ++c) {
      auto e = compact_entry(plain.gens.at(r, c), tgt);
      if (!e) return std::nullopt;
      out.gens.at(r, c) = *e;
    }
  return out;
}

}  // namespace

std::optional<Presentation> restrict_to_P_compact(const Presentation& merged_a,
                                                  const ModuleWord& word, bool cyclic) {
  return compact_form(merged_a, word, cyclic, Target::P);
}

std::optional<Presentation> induce_to_T_compact(const Presentation& merged_a,
                                                const ModuleWord& word, bool cyclic) {
  return compact_form(merged_a, word, cyclic, Target::T);
}

// ---------------------------------------------------------------------------
// Involution, local freeness.

Presentation involution_tau(const Presentation& p) {
  Presentation out = p;
  for (auto& group : out.row_summands)
    for (auto& s : group) s.family = other(s.family);
  const std::string& rn = p.ring_tag->name;
  out.gens = PolyMatrix(p.gens.ring(), p.gens.rows(), p.gens.cols());
  for (int r = 0; r < p.gens.rows(); ++r)
    for (int c = 0; c < p.gens.cols(); ++c) {
      RingElem::Terms terms;
      for (const auto& [m, co] : p.gens.at(r, c).terms()) {
        Monomial sw = m;
        if (rn == "A") {
          std::swap(sw.e[0], sw.e[1]);
          std::swap(sw.e[2], sw.e[3]);
        } else {
          std::swap(sw.e[0], sw.e[1]);  // x<->y over P (z fixed), a<->b over T
        }
        terms.emplace(sw, co);
      }
      out.gens.at(r, c) = RingElem(p.gens.ring(), std::move(terms));
    }
  return out;
}

bool is_locally_free(const StringDatum& s) {
  return std::none_of(s.word.begin(), s.word.end(),
                      [](const Letter& l) { return l.index == kInf; });
}

bool is_locally_free(const BandDatum&) { return true; }

// ---------------------------------------------------------------------------
// The ideal table.

std::vector<std::string> ideal_table_row_ids() {
  return {"x0",     "xinf",    "xi-",     "x0y0",     "xi+y0",
          "xi+yj-", "xi-y0",   "xi-yj-",  "xi-yj+",   "xinfy0",
          "xinfyj-", "xinfyj+", "xinfyinf", "band--", "band-+"};
}

namespace {

std::vector<RingElem> elems(const RingSpec& r, std::initializer_list<std::string> lits) {
  std::vector<RingElem> out;
  for (const auto& s : lits) out.push_back(parse_elem(r, s));
  return out;
}

std::string pw(const char* v, int e) { return std::string(v) + "^" + std::to_string(e); }

}  // namespace

IdealTableRow ideal_table_row(const std::string& id, int i, int j, const Rat& lambda) {
  const RingSpec &A = RingSpec::A(), &P = RingSpec::P(), &T = RingSpec::T();
  auto need = [&](bool uses_i, bool uses_j, bool uses_l) {
    if (uses_i && i < 1) throw word_error(word_error::MissingParameter, "row needs i >= 1");
    if (uses_j && j < 1) throw word_error(word_error::MissingParameter, "row needs j >= 1");
    if (uses_l && lambda == 0) throw word_error(word_error::MissingParameter, "row needs lambda != 0");
  };
  IdealTableRow row;
  row.id = id;
  std::string L = rat_str(lambda);
  if (id == "x0") {
    row.gens_a = elems(A, {"x"});
    row.gens_p = elems(P, {"x"});
    row.gens_t = elems(T, {"a^2"});
  } else if (id == "xinf") {
    row.gens_a = elems(A, {"u"});
    row.gens_p = elems(P, {"x*z"});
    row.gens_t = elems(T, {"a^2*b"});
  } else if (id == "xi-") {
    need(true, false, false);
    row.gens_a = elems(A, {pw("x", i), "u"});
    row.gens_p = elems(P, {pw("x", i + 1), "x*z"});
    row.gens_t = elems(T, {pw("a", i + 2), "a^2*b"});
  } else if (id == "x0y0") {
    row.gens_a = elems(A, {"1"});
    row.gens_p = elems(P, {"x + y", "x*z"});
    row.gens_t = elems(T, {"a^2 + b^2", "a^2*b", "a*b^2"});
  } else if (id == "xi+y0") {
    need(true, false, false);
    row.gens_a = elems(A, {"u*x", pw("x", i + 1) + " + y"});
    row.gens_p = elems(P, {"x*z", pw("x", i + 1) + " + y"});
    row.gens_t = elems(T, {"a^2*b", pw("a", i + 2) + " + b^2", "a*b^2"});
  } else if (id == "xi+yj-") {
    need(true, true, false);
    row.gens_a = elems(A, {"u", pw("x", i) + " + " + pw("y", j), "v"});
    row.gens_p = elems(P, {"x*z", pw("x", i + 1) + " + " + pw("y", j + 1), "y*z"});
    row.gens_t = elems(T, {"a^2*b", pw("a", i + 2) + " + " + pw("b", j + 2), "a*b^2"});
  } else if (id == "xi-y0") {
    need(true, false, false);
    row.gens_a = elems(A, {pw("x", i + 1), "u*x + y"});
    row.gens_p = elems(P, {pw("x", i + 1), "x*z + y"});
    if (i == 1) row.gens_t = elems(T, {"a^3", "a^2*b + b^2"});
    else row.gens_t = elems(T, {pw("a", i + 2), "a^2*b + b^2", "a*b^2"});
  } else if (id == "xi-yj-") {
    need(true, true, false);
    row.gens_a = elems(A, {pw("x", i), "u + " + pw("y", j), "v"});
    row.gens_p = elems(P, {pw("x", i + 1), "x*z + " + pw("y", j + 1), "y*z"});
    row.gens_t = elems(T, {pw("a", i + 2), "a^2*b + " + pw("b", j + 2), "a*b^2"});
  } else if (id == "xi-yj+") {
    need(true, true, false);
    row.gens_a = elems(A, {pw("x", i), "u + v", pw("y", j)});
    row.gens_p = elems(P, {pw("x", i), "z", pw("y", j)});
    row.gens_t = elems(T, {pw("a", i + 2), "a^2*b + a*b^2", pw("b", j + 2)});
  } else if (id == "xinfy0") {
    row.gens_a = elems(A, {"u*x + y"});
    row.gens_p = elems(P, {"x*z + y"});
    row.gens_t = elems(T, {"a^2*b + b^2", "a*b^2"});
  } else if (id == "xinfyj-") {
    need(false, true, false);
    row.gens_a = elems(A, {"u + " + pw("y", j), "v"});
    row.gens_p = elems(P, {"x*z + " + pw("y", j + 1), "y*z"});
    row.gens_t = elems(T, {"a^2*b + " + pw("b", j + 2), "a*b^2"});
  } else if (id == "xinfyj+") {
    need(false, true, false);
    row.gens_a = elems(A, {"u + v", pw("y", j)});
    row.gens_p = elems(P, {"z", pw("y", j)});
    row.gens_t = elems(T, {"a^2*b + a*b^2", pw("b", j + 2)});
  } else if (id == "xinfyinf") {
    row.gens_a = elems(A, {"u + v"});
    row.gens_p = elems(P, {"z"});
    row.gens_t = elems(T, {"a^2*b + a*b^2"});
  } else if (id == "band--") {
    need(true, true, true);
    row.gens_a = elems(A, {pw("x", i) + " + " + L + "*v", pw("y", j) + " + u"});
    row.gens_p = elems(P, {pw("x", i + 1) + " + " + L + "*y*z", pw("y", j + 1) + " + x*z"});
    row.gens_t = elems(T, {pw("a", i + 2) + " + " + L + "*a*b^2", pw("b", j + 2) + " + a^2*b"});
  } else if (id == "band-+") {
    need(true, true, true);
    row.gens_a = elems(A, {pw("x", i) + " + " + L + "*" + pw("y", j), "u + v"});
    row.gens_p = elems(P, {pw("x", i) + " + " + L + "*" + pw("y", j), "z"});
    row.gens_t = elems(T, {pw("a", i + 2) + " + " + L + "*" + pw("b", j + 2), "a^2*b + a*b^2"});
  } else {
    throw word_error(word_error::UnknownRow, "unknown ideal table row: " + id);
  }
  return row;
}

RowDatum ideal_table_datum(const std::string& id, int i, int j, const Rat& lambda) {
  auto L = [&](Family f, int idx, int sg) { return Letter{f, idx, sg}; };
  RowDatum d;
  auto str = [&](std::initializer_list<Letter> ls) { d.string_datum = validate_string(ModuleWord(ls)); };
  if (id == "x0") str({L(Family::X, 0, 0)});
  else if (id == "xinf") str({L(Family::X, kInf, 0)});
  else if (id == "xi-") str({L(Family::X, i, -1)});
  else if (id == "x0y0") str({L(Family::X, 0, 0), L(Family::Y, 0, 0)});
  else if (id == "xi+y0") str({L(Family::X, i, +1), L(Family::Y, 0, 0)});
  else if (id == "xi+yj-") str({L(Family::X, i, +1), L(Family::Y, j, -1)});
  else if (id == "xi-y0") str({L(Family::X, i, -1), L(Family::Y, 0, 0)});
  else if (id == "xi-yj-") str({L(Family::X, i, -1), L(Family::Y, j, -1)});
  else if (id == "xi-yj+") str({L(Family::X, i, -1), L(Family::Y, j, +1)});
  else if (id == "xinfy0") str({L(Family::X, kInf, 0), L(Family::Y, 0, 0)});
  else if (id == "xinfyj-") str({L(Family::X, kInf, 0), L(Family::Y, j, -1)});
  else if (id == "xinfyj+") str({L(Family::X, kInf, 0), L(Family::Y, j, +1)});
  else if (id == "xinfyinf") str({L(Family::X, kInf, 0), L(Family::Y, kInf, 0)});
  else if (id == "band--")
    d.band_datum = validate_band({L(Family::X, i, -1), L(Family::Y, j, -1)}, 1, lambda);
  else if (id == "band-+")
    d.band_datum = validate_band({L(Family::X, i, -1), L(Family::Y, j, +1)}, 1, lambda);
  else throw word_error(word_error::UnknownRow, "unknown ideal table row: " + id);
  return d;
}

// ---------------------------------------------------------------------------
// Comparison plumbing and serialization.

std::vector<GenColumn> presentation_columns(const Presentation& p) {
  std::vector<GenColumn> cols;
  for (int c = 0; c < p.gens.cols(); ++c) {
    GenColumn col;
    for (int r = 0; r < p.gens.rows(); ++r) col.push_back(p.gens.at(r, c));
    cols.push_back(std::move(col));
  }
  return cols;
}

Presentation permute_row_blocks(const Presentation& p, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != p.row_blocks())
    throw word_error(word_error::BadShape, "permutation size mismatch");
  Presentation out = p;
  out.gens = PolyMatrix(p.gens.ring(), p.gens.rows(), p.gens.cols());
  for (int k = 0; k < p.row_blocks(); ++k) {
    out.row_summands[k] = p.row_summands[perm[k]];
    for (int r = 0; r < p.block; ++r)
      for (int c = 0; c < p.gens.cols(); ++c)
        out.gens.at(k * p.block + r, c) = p.gens.at(perm[k] * p.block + r, c);
  }
  return out;
}

Presentation transform_row_block(const Presentation& p, int block_index, const QMat& m) {
  if (m.rows() != p.block || m.cols() != p.block)
    throw word_error(word_error::BadShape, "block transform size mismatch");
  Presentation out = p;
  for (int r = 0; r < p.block; ++r)
    for (int c = 0; c < p.gens.cols(); ++c) {
      RingElem acc(p.gens.ring());
      for (int k = 0; k < p.block; ++k) {
        if (m(r, k) == 0) continue;
        acc = acc + p.gens.at(block_index * p.block + k, c).scaled(m(r, k));
      }
      out.gens.at(block_index * p.block + r, c) = acc;
    }
  return out;
}

SubmoduleResult same_submodule(const Presentation& p1, const Presentation& p2) {
  if (p1.ring_tag != p2.ring_tag) throw ring_error("presentations over different rings");
  if (p1.gens.rows() != p2.gens.rows()) throw ring_error("presentation heights differ");
  return submodules_equal(*p1.ring_tag, presentation_columns(p1), presentation_columns(p2));
}

std::string presentation_json(const Presentation& p) {
  nlohmann::json j;
  j["ring"] = p.ring_tag->name;
  nlohmann::json frame = nlohmann::json::array();
  for (const auto& group : p.row_summands) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& s : group) g.push_back(summand_str(s));
    frame.push_back(g);
  }
  j["frame"] = frame;
  j["block"] = p.block;
  j["merged"] = p.merged;
  j["exceptional"] = p.exceptional;
  nlohmann::json gens = nlohmann::json::array();
  for (int c = 0; c < p.gens.cols(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 0; r < p.gens.rows(); ++r) col.push_back(p.gens.at(r, c).str());
    gens.push_back(col);
  }
  j["generators"] = gens;
  return j.dump();
}

std::string presentation_latex(const Presentation& p) {
  std::ostringstream out;
  out << "\\[\n\\left[\\begin{array}{";
  for (int c = 0; c < p.gens.cols(); ++c) out << "c";
  out << "}\n";
  for (int r = 0; r < p.gens.rows(); ++r) {
    for (int c = 0; c < p.gens.cols(); ++c) {
      if (c) out << " & ";
      out << p.gens.at(r, c).str();
    }
    out << " \\\\\n";
  }
  out << "\\end{array}\\right]_{" << p.ring_tag->name << "}\n\\]\n";
  return out.str();
}

}  // namespace cmband
