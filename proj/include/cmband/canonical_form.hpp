#pragma once

#include <string>
#include <vector>

#include "cmband/rational.hpp"
#include "cmband/words.hpp"

namespace cmband {

struct Stripe {
  BunchSymbol symbol;
  int occurrences = 0;  // rows before block inflation
};

// The pair of stripe-labeled matrices attached to a word. For band data the
// 0/1 entries inflate to m-blocks and the wrap entry becomes a Jordan block.
struct CanonicalForm {
  QMat theta_x, theta_y;
  std::vector<Stripe> stripes_x, stripes_y;
  int t = 0;      // gamma (equivalently delta) occurrences
  int block = 1;  // m

  int rows_x() const { return static_cast<int>(theta_x.rows()); }
  int rows_y() const { return static_cast<int>(theta_y.rows()); }

  // Global row of a symbol occurrence (1-based occurrence, 0-based row of the
  // first block row).
  int row_of(const BunchSymbol& s, int occurrence) const;
};

CanonicalForm canonical_form_string(const FullWord& w);
CanonicalForm canonical_form_band(const CyclicWord& w, int m, const Rat& lambda);

// Full row rank on both sides and full column rank of the vertical stack.
bool regularity_check(const CanonicalForm& c);

// Word-combinatorial criterion equivalent to regularity_check: cyclic words
// qualify; a full word qualifies when it has at least two symbols, both ends
// lie in {gamma, delta, xi0, alphainf, zeta0, betainf}, and it is not a bare
// gamma~delta pair.
bool essential_image_predicate(const FullWord& w);
bool essential_image_predicate(const CyclicWord& w);

// {stripes_x, stripes_y, t, theta_x, theta_y} with entries as "p/q" strings.
std::string canonical_form_json(const CanonicalForm& c);

// Stripe-annotated array pair for a plain article preamble.
std::string canonical_form_latex(const CanonicalForm& c);

}  // namespace cmband
