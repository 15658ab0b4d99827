#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmband/ring.hpp"

namespace cmband {

// A pair of square matrices over a relation-free ring multiplying to
// potential * I on both sides. The identity is asserted in the free ring;
// modulo the potential it would be vacuous.
struct MatrixFactorization {
  PolyMatrix phi, psi;
  RingElem potential;
};

bool verify_mf(const MatrixFactorization& m);

// phi*psi - potential*I, for failure certificates.
PolyMatrix mf_residual(const MatrixFactorization& m);

struct MfRowInfo {
  std::string id;     // mf01 .. mf13
  std::string label;  // the ideal the row factors
  bool uses_i = false, uses_j = false, uses_lambda = false;
};

const std::vector<MfRowInfo>& mf_table_rows();

// The golden table over k[a,b] with potential a^2 b^2. Two rows carry a
// corrected sign relative to their published source; one row (mf12) does not
// satisfy the exact identity in any polynomial completion of its shape and is
// kept verbatim so the verifier can exhibit the failure.
MatrixFactorization golden_mf(const std::string& row_id, int i = 0, int j = 0,
                              const Rat& lambda = Rat(1));

// ((phi, -u I), (v I, psi)) paired with ((psi, u I), (-v I, phi)); a
// factorization of potential + uv over k[a,b,u,v], twice the size.
MatrixFactorization knorrer_double(const MatrixFactorization& m);

// Which golden row (and parameter substitution) matches an ideal-table row.
struct MfPairing {
  std::string mf_row;
  int i = 0, j = 0;
  bool uses_lambda = false;
};
std::optional<MfPairing> mf_pairing_for_ideal_row(const std::string& ideal_row_id, int i, int j);

std::string mf_json(const MatrixFactorization& m);
std::string mf_latex(const MatrixFactorization& m);

}  // namespace cmband
