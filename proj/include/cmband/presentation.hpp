#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmband/membership.hpp"
#include "cmband/ring.hpp"
#include "cmband/words.hpp"

namespace cmband {

struct SummandLabel {
  Family family = Family::X;
  int index = 0;  // 0, finite, or kInf
  bool operator==(const SummandLabel&) const = default;
};

std::string summand_str(const SummandLabel& s);

// A module given by generator columns inside an ambient direct sum of the
// ideals X_i and Y_j. Rows come in blocks of `block` copies; a merged row is
// backed by two summands.
struct Presentation {
  const RingSpec* ring_tag = nullptr;
  std::vector<std::vector<SummandLabel>> row_summands;
  int block = 1;
  PolyMatrix gens;  // (row_summands.size() * block) x (t * block)
  bool exceptional = false;
  bool merged = false;

  int row_blocks() const { return static_cast<int>(row_summands.size()); }
  int col_blocks() const { return block == 0 ? 0 : gens.cols() / block; }
};

// Staircase over A with one row per letter; entries follow the sign tables,
// in the divided form unless the word contains x0 or y0.
Presentation build_string_module(const StringDatum& s);
Presentation build_band_module(const BandDatum& b);

// Adds every odd row block to its successor; a trailing unpaired row stays.
Presentation merge_rows(const Presentation& p);

// Independent route to the same matrix: weight the canonical form's rows,
// collapse each letter's tilde pair, and rewrite symbols as ring elements.
// Must agree with build_* entry for entry.
Presentation reconstruct_string(const StringDatum& s);
Presentation reconstruct_band(const BandDatum& b);

// Entrywise passage to P = k[x,y,z]/(xy,z^2). Refuses the word x0 y0, whose
// restriction needs an extra generator; see exceptional_p_presentation.
Presentation restrict_to_P(const Presentation& p, bool word_has_x0_or_y0);

// The tighter z-form. Produced only when the sign pattern alternates (and the
// one-sided endpoint signs point the right way); emitted alongside the plain
// translation, never instead of it.
std::optional<Presentation> restrict_to_P_compact(const Presentation& merged_a,
                                                  const ModuleWord& word, bool cyclic);

// The P-module of the exceptional string x0 y0, with its extra generator.
Presentation exceptional_p_presentation();

// Entrywise passage to T = k[a,b]/(a^2 b^2); for words containing x0 or y0
// the columns holding those endpoint entries contribute u*w / v*w generators.
Presentation induce_to_T(const Presentation& p, bool word_has_x0_or_y0);

// Compact ab-form over T under the same conditions as the P compact form.
std::optional<Presentation> induce_to_T_compact(const Presentation& merged_a,
                                                const ModuleWord& word, bool cyclic);

// Branch swap on a presentation: x<->y, u<->v over A, a<->b over T, z fixed.
Presentation involution_tau(const Presentation& p);

bool is_locally_free(const StringDatum& s);
bool is_locally_free(const BandDatum& b);

// ---------------------------------------------------------------------------
// The ideal table.

struct IdealTableRow {
  std::string id;
  std::vector<RingElem> gens_a, gens_p, gens_t;
};

// Row ids: x0, xinf, xi-, x0y0, xi+y0, xi+yj-, xi-y0, xi-yj-, xi-yj+,
// xinfy0, xinfyj-, xinfyj+, xinfyinf, band--, band-+.
std::vector<std::string> ideal_table_row_ids();
IdealTableRow ideal_table_row(const std::string& id, int i, int j, const Rat& lambda);

// The invariant the row classifies, with parameters substituted.
struct RowDatum {
  std::optional<StringDatum> string_datum;
  std::optional<BandDatum> band_datum;
};
RowDatum ideal_table_datum(const std::string& id, int i, int j, const Rat& lambda);

// ---------------------------------------------------------------------------
// Submodule comparison plumbing.

std::vector<GenColumn> presentation_columns(const Presentation& p);

// Reorders row blocks; perm[i] names the source block for target block i.
Presentation permute_row_blocks(const Presentation& p, const std::vector<int>& perm);

// Left-multiplies one row block by an m x m rational matrix.
Presentation transform_row_block(const Presentation& p, int block_index, const QMat& m);

SubmoduleResult same_submodule(const Presentation& p1, const Presentation& p2);

std::string presentation_json(const Presentation& p);
std::string presentation_latex(const Presentation& p);

}  // namespace cmband
