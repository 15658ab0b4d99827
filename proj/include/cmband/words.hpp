#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cmband/rational.hpp"

namespace cmband {

// Index value standing for the one-sided letters x_inf / y_inf.
inline constexpr int kInf = 1'000'000;

enum class Family { X, Y };

inline Family other(Family f) { return f == Family::X ? Family::Y : Family::X; }

// One letter of a module word: x or y, an index in {0, 1, 2, ..., inf},
// and a sign. Letters with index 0 or inf carry no sign.
struct Letter {
  Family family = Family::X;
  int index = 1;
  int sign = 0;  // +1, -1, or 0 for the unsigned endpoint letters

  bool special() const { return index == 0 || index == kInf; }
  bool operator==(const Letter&) const = default;

  // x before y, smaller index first, + before -.
  auto key() const { return std::tuple(family == Family::Y, index, sign < 0 ? 1 : (sign > 0 ? 0 : 2)); }
};

using ModuleWord = std::vector<Letter>;

struct word_error : std::runtime_error {
  enum Kind {
    Empty,
    NonAlternating,
    IndexZeroInfInterior,
    IllegalEndpoint,
    BadLetter,
    Periodic,
    ZeroLambda,
    BadShape,
    OddShift,
    UnknownRow,
    MissingParameter,
    ExceptionalWord,
  };
  Kind kind;
  word_error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// A validated string word. The word x0 y0 presents the whole ring and is
// tagged so downstream translations can special-case it.
struct StringDatum {
  ModuleWord word;
  bool exceptional = false;
};

// A validated band word with multiplicity and continuous parameter.
struct BandDatum {
  ModuleWord word;  // x-first, even length, all letters signed and finite
  int multiplicity = 1;
  Rat lambda = Rat(1);
};

StringDatum validate_string(const ModuleWord& w);
BandDatum validate_band(const ModuleWord& w, int m, const Rat& lambda);

// Reversal at the level of the underlying symbol word: letter order flips
// and every sign flips. Unsigned letters are fixed.
ModuleWord opposite(const ModuleWord& w);

// Branch swap x <-> y keeping indices and signs.
ModuleWord tau(const ModuleWord& w);

// Rotation of a band word by whole xy-letter pairs.
ModuleWord shift_pairs(const ModuleWord& w, int pairs);

bool is_periodic(const ModuleWord& w);

bool equivalent_strings(const StringDatum& a, const StringDatum& b);

// Module-level notion: equal m, equal lambda, words related by a rotation.
bool equivalent_bands(const BandDatum& a, const BandDatum& b);

// Symbol-level notion: also identifies (rot(opposite w), m, 1/lambda).
bool equivalent_bands_bunch_mode(const BandDatum& a, const BandDatum& b);

ModuleWord canonical_string_word(const ModuleWord& w);
ModuleWord canonical_band_word(const ModuleWord& w);

// One canonical representative per equivalence class, deterministic order.
std::vector<StringDatum> enumerate_strings(int max_letters, int max_index);
std::vector<ModuleWord> enumerate_band_words(int max_letters, int max_index);

// ASCII grammar: `x[3]+ y[2]- x[0] y[inf]`, band datum
// `band(x[1]- y[1]-; m=2; lambda=3/4)`.
std::string word_str(const ModuleWord& w);
std::string band_str(const BandDatum& b);
ModuleWord parse_word(const std::string& text);

struct ParsedDatum {
  std::optional<StringDatum> string_datum;
  std::optional<BandDatum> band_datum;
};
// Accepts either a bare word (string datum) or the band(...) form.
ParsedDatum parse_datum(const std::string& text);

// ---------------------------------------------------------------------------
// Symbol level: the bunch of chains.

enum class SymKind { Xi, Alpha, Zeta, Beta, Gamma, Delta };

struct BunchSymbol {
  SymKind kind = SymKind::Gamma;
  int index = 0;  // xi_0 has 0, alpha_inf has kInf; unused for gamma/delta

  bool in_Ex() const { return kind == SymKind::Xi || kind == SymKind::Alpha; }
  bool in_Ey() const { return kind == SymKind::Zeta || kind == SymKind::Beta; }
  bool in_E() const { return in_Ex() || in_Ey(); }
  bool in_F() const { return kind == SymKind::Gamma || kind == SymKind::Delta; }
  // The four symbols without a tilde partner.
  bool unpaired() const {
    return (kind == SymKind::Xi && index == 0) || (kind == SymKind::Alpha && index == kInf) ||
           (kind == SymKind::Zeta && index == 0) || (kind == SymKind::Beta && index == kInf);
  }
  bool operator==(const BunchSymbol&) const = default;
};

std::string symbol_str(const BunchSymbol& s);

// Position in the chain order xi_0 < xi_1 < ... < alpha_inf < ... < alpha_1
// (and the zeta/beta mirror); used to lay out canonical-form stripes.
std::pair<int, int> chain_position(const BunchSymbol& s);

bool tilde_holds(const BunchSymbol& a, const BunchSymbol& b);
bool dash_holds(const BunchSymbol& a, const BunchSymbol& b);

enum class Rel { Tilde, Dash };

struct FullWord {
  std::vector<BunchSymbol> syms;
  std::vector<Rel> rels;  // one shorter than syms

  size_t size() const { return syms.size(); }
  bool operator==(const FullWord&) const = default;
};

// A full word with an implicit closing Dash from the last symbol to the first.
struct CyclicWord {
  FullWord base;
  bool operator==(const CyclicWord&) const = default;
};

bool valid_full_word(const FullWord& w, std::string* why = nullptr);
bool valid_cyclic_word(const CyclicWord& w, std::string* why = nullptr);

FullWord opposite(const FullWord& w);
// Rotation by an even number of symbols; throws OddShift otherwise.
CyclicWord shift(const CyclicWord& w, int k);
bool is_periodic(const CyclicWord& w);

std::string full_word_str(const FullWord& w);

// Inserts the gamma/delta pairs and dashes around the letter blocks.
FullWord module_to_bunch(const StringDatum& s);
CyclicWord module_to_bunch_band(const ModuleWord& band_word);

// Strips the pairs again; empty when the word is not module-shaped.
std::optional<ModuleWord> bunch_to_module(const FullWord& w);
std::optional<ModuleWord> bunch_to_module(const CyclicWord& w);

// Every valid full word within the bounds, deterministic order.
std::vector<FullWord> enumerate_full_words(int max_symbols, int max_index);
// Every valid non-periodic cyclic word within the bounds.
std::vector<CyclicWord> enumerate_cyclic_words(int max_symbols, int max_index);

}  // namespace cmband
