#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cmband/ring.hpp"

namespace cmband {

// A generator of a submodule of ring^n, stored as its n entries.
using GenColumn = std::vector<RingElem>;

// g = sum coeffs[i] * gens[i], exactly, in the quotient ring.
struct MemberCert {
  std::vector<RingElem> coeffs;
};

// The linear system is infeasible once every monomial of total degree >= D
// is discarded; membership is therefore impossible at any degree.
struct NotMemberCert {
  int truncation_degree = 0;
};

struct UnknownVerdict {
  int searched_degree = 0;
};

using MembershipResult = std::variant<MemberCert, NotMemberCert, UnknownVerdict>;

bool is_member(const MembershipResult& r);
bool is_not_member(const MembershipResult& r);

// Process-wide override of the search bound, wired to CMBAND_SEARCH_DEGREE.
// Set once at startup; reads are lock-free.
void set_search_degree_override(std::optional<int> bound);
std::optional<int> search_degree_override();

// 2 * (max total degree among g and gens) + 4, unless overridden.
int default_search_degree(const GenColumn& g, const std::vector<GenColumn>& gens);

// Decides g in <gens> inside ring^n with an exact certificate either way,
// giving up with Unknown past search_degree.
MembershipResult membership(const RingSpec& ring, const GenColumn& g,
                            const std::vector<GenColumn>& gens, int search_degree);
MembershipResult membership(const RingSpec& ring, const GenColumn& g,
                            const std::vector<GenColumn>& gens);

struct EqualCert {
  // how_1_in_2[i] expresses gens1[i] over gens2, and vice versa
  std::vector<MemberCert> how_1_in_2;
  std::vector<MemberCert> how_2_in_1;
};

struct UnequalCert {
  int side = 0;   // 1: a generator of gens1 is missing from <gens2>
  int index = 0;  // which generator
  NotMemberCert why;
};

struct UnknownEquality {
  int searched_degree = 0;
};

using SubmoduleResult = std::variant<EqualCert, UnequalCert, UnknownEquality>;

bool is_equal(const SubmoduleResult& r);

// Mutual containment via membership; Equal iff every generator of each side
// lies in the span of the other.
SubmoduleResult submodules_equal(const RingSpec& ring, const std::vector<GenColumn>& gens1,
                                 const std::vector<GenColumn>& gens2, int search_degree);
SubmoduleResult submodules_equal(const RingSpec& ring, const std::vector<GenColumn>& gens1,
                                 const std::vector<GenColumn>& gens2);

// All normal-form monomials of the ring with total degree <= bound,
// in deglex order.
std::vector<Monomial> normal_monomials_upto(const RingSpec& ring, int bound);

}  // namespace cmband
