#include "cmband/membership.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "cmband/linalg.hpp"

namespace cmband {

namespace {

std::atomic<int> g_override{-1};

int column_degree(const GenColumn& c) {
  int d = 0;
  for (const auto& e : c)
    if (auto deg = e.degree()) d = std::max(d, *deg);
  return d;
}

void check_shapes(const RingSpec& ring, const GenColumn& g,
                  const std::vector<GenColumn>& gens) {
  auto check_col = [&](const GenColumn& c) {
    if (c.size() != g.size()) throw ring_error("column height mismatch");
    for (const auto& e : c)
      if (!e.is_zero() && !(e.ring() == ring)) throw ring_error("column ring mismatch");
  };
  check_col(g);
  for (const auto& c : gens) check_col(c);
}

}  // namespace

bool is_member(const MembershipResult& r) { return std::holds_alternative<MemberCert>(r); }
bool is_not_member(const MembershipResult& r) { return std::holds_alternative<NotMemberCert>(r); }
bool is_equal(const SubmoduleResult& r) { return std::holds_alternative<EqualCert>(r); }

void set_search_degree_override(std::optional<int> bound) {
  g_override.store(bound ? *bound : -1);
}

std::optional<int> search_degree_override() {
  int v = g_override.load();
  return v < 0 ? std::nullopt : std::optional<int>(v);
}

int default_search_degree(const GenColumn& g, const std::vector<GenColumn>& gens) {
  if (auto o = search_degree_override()) return *o;
  int d = column_degree(g);
  for (const auto& c : gens) d = std::max(d, column_degree(c));
  return 2 * d + 4;
}

std::vector<Monomial> normal_monomials_upto(const RingSpec& ring, int bound) {
  std::vector<Monomial> out;
  Monomial m;
  const int n = ring.nvars();
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      if (ring.is_normal(m)) out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[var] = e;
      self(self, var + 1, left - e);
    }
    m.e[var] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

namespace {

// Unknowns are the coefficients of each a_i over normal monomials of degree
// <= coeff_degree. Equations match the coefficient of every normal monomial
// of degree < eq_degree_cap in every row of  sum a_i * gens_i = g.
// A negative cap means "all monomials that can occur".
struct LinearizedSystem {
  QMat a;
  QVec b;
  std::vector<std::pair<int, Monomial>> unknowns;  // (generator index, monomial)
};

LinearizedSystem build_system(const RingSpec& ring, const GenColumn& g,
                              const std::vector<GenColumn>& gens, int coeff_degree,
                              int eq_degree_cap) {
  const int height = static_cast<int>(g.size());
  int max_gen_deg = 0;
  for (const auto& c : gens) max_gen_deg = std::max(max_gen_deg, column_degree(c));
  int eq_bound;
  if (eq_degree_cap >= 0)
    eq_bound = eq_degree_cap - 1;  // truncated: only monomials below the cap
  else
    eq_bound = std::max(coeff_degree + max_gen_deg, column_degree(g));

  auto coeff_monos = normal_monomials_upto(ring, coeff_degree);
  auto eq_monos = normal_monomials_upto(ring, std::max(eq_bound, 0));

  std::map<Monomial, int, DegLex> eq_index;
  for (int k = 0; k < static_cast<int>(eq_monos.size()); ++k) eq_index.emplace(eq_monos[k], k);
  const int eq_per_row = static_cast<int>(eq_monos.size());

  LinearizedSystem sys;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    for (const auto& m : coeff_monos) sys.unknowns.emplace_back(i, m);

  sys.a = QMat::Zero(height * eq_per_row, static_cast<int>(sys.unknowns.size()));
  sys.b = QVec::Zero(height * eq_per_row);

  for (int r = 0; r < height; ++r) {
    for (const auto& [m, c] : g[r].terms()) {
      auto it = eq_index.find(m);
      if (it == eq_index.end()) continue;  // beyond the truncation cap
      sys.b(r * eq_per_row + it->second) = c;
    }
  }
  for (int u = 0; u < static_cast<int>(sys.unknowns.size()); ++u) {
    auto [i, nu] = sys.unknowns[u];
    RingElem nu_elem = RingElem::monomial(ring, nu);
    for (int r = 0; r < height; ++r) {
      RingElem prod = nu_elem * gens[i][r];
      for (const auto& [m, c] : prod.terms()) {
        auto it = eq_index.find(m);
        if (it == eq_index.end()) continue;
        sys.a(r * eq_per_row + it->second, u) = c;
      }
    }
  }
  return sys;
}

std::vector<RingElem> certificate_from_solution(const RingSpec& ring,
                                                const LinearizedSystem& sys, const QVec& x,
                                                int ngens) {
  std::vector<RingElem> coeffs(ngens, RingElem(ring));
  for (int u = 0; u < static_cast<int>(sys.unknowns.size()); ++u) {
    if (x(u) == 0) continue;
    auto [i, nu] = sys.unknowns[u];
    coeffs[i] = coeffs[i] + RingElem::monomial(ring, nu, x(u));
  }
  return coeffs;
}

}  // namespace

MembershipResult membership(const RingSpec& ring, const GenColumn& g,
                            const std::vector<GenColumn>& gens, int search_degree) {
  if (search_degree < 0) throw ring_error("negative search degree");
  check_shapes(ring, g, gens);

  bool g_zero = true;
  for (const auto& e : g) g_zero &= e.is_zero();
  if (g_zero) return MemberCert{std::vector<RingElem>(gens.size(), RingElem(ring))};

  auto reduce = [&ring](const Rat& c) { return ring.reduce_coeff(c); };

  // Exact attempts at growing coefficient degree, interleaved with truncated
  // feasibility tests: one infeasible truncation disproves membership outright.
  for (int d = 0; d <= search_degree; ++d) {
    auto sys = build_system(ring, g, gens, d, -1);
    auto sol = solve_linear(sys.a, sys.b, reduce);
    if (sol.consistent)
      return MemberCert{certificate_from_solution(ring, sys, sol.solution, static_cast<int>(gens.size()))};

    int trunc = d + 1;
    if (trunc <= search_degree) {
      auto tsys = build_system(ring, g, gens, trunc - 1, trunc);
      auto tsol = solve_linear(tsys.a, tsys.b, reduce);
      if (!tsol.consistent) return NotMemberCert{trunc};
    }
  }
  return UnknownVerdict{search_degree};
}

MembershipResult membership(const RingSpec& ring, const GenColumn& g,
                            const std::vector<GenColumn>& gens) {
  return membership(ring, g, gens, default_search_degree(g, gens));
}

SubmoduleResult submodules_equal(const RingSpec& ring, const std::vector<GenColumn>& gens1,
                                 const std::vector<GenColumn>& gens2, int search_degree) {
  size_t height = gens1.empty() ? (gens2.empty() ? 0 : gens2[0].size()) : gens1[0].size();
  for (const auto& c : gens1)
    if (c.size() != height) throw ring_error("column height mismatch");
  for (const auto& c : gens2)
    if (c.size() != height) throw ring_error("column height mismatch");

  EqualCert eq;
  bool unknown = false;

  auto contain = [&](const std::vector<GenColumn>& lhs, const std::vector<GenColumn>& rhs,
                     std::vector<MemberCert>& certs, int side) -> std::optional<SubmoduleResult> {
    for (int i = 0; i < static_cast<int>(lhs.size()); ++i) {
      // Literal generator match short-circuits the solver.
      bool literal = false;
      for (int j = 0; j < static_cast<int>(rhs.size()) && !literal; ++j) {
        if (lhs[i] == rhs[j]) {
          MemberCert c{std::vector<RingElem>(rhs.size(), RingElem(ring))};
          c.coeffs[j] = RingElem::constant(ring, 1);
          certs.push_back(std::move(c));
          literal = true;
        }
      }
      if (literal) continue;
      auto r = membership(ring, lhs[i], rhs, search_degree);
      if (auto* m = std::get_if<MemberCert>(&r)) {
        certs.push_back(*m);
      } else if (auto* n = std::get_if<NotMemberCert>(&r)) {
        return SubmoduleResult{UnequalCert{side, i, *n}};
      } else {
        unknown = true;
        certs.push_back(MemberCert{});
      }
    }
    return std::nullopt;
  };

  if (auto r = contain(gens1, gens2, eq.how_1_in_2, 1)) return *r;
  if (auto r = contain(gens2, gens1, eq.how_2_in_1, 2)) return *r;
  if (unknown) return UnknownEquality{search_degree};
  return eq;
}

SubmoduleResult submodules_equal(const RingSpec& ring, const std::vector<GenColumn>& gens1,
                                 const std::vector<GenColumn>& gens2) {
  int d = 0;
  for (const auto& c : gens1) d = std::max(d, column_degree(c));
  for (const auto& c : gens2) d = std::max(d, column_degree(c));
  int bound = search_degree_override().value_or(2 * d + 4);
  return submodules_equal(ring, gens1, gens2, bound);
}

}  // namespace cmband
