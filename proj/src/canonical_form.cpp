#include "cmband/canonical_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cmband/linalg.hpp"
#include "json.hpp"

namespace cmband {

namespace {

struct SymLess {
  bool operator()(const BunchSymbol& a, const BunchSymbol& b) const {
    auto ka = std::tuple(static_cast<int>(a.kind), a.index);
    auto kb = std::tuple(static_cast<int>(b.kind), b.index);
    return ka < kb;
  }
};

// occurrence number of each position: how many times its symbol appeared so far
std::vector<int> occurrence_numbers(const std::vector<BunchSymbol>& syms) {
  std::vector<int> occ(syms.size());
  std::map<BunchSymbol, int, SymLess> seen;
  for (size_t p = 0; p < syms.size(); ++p) occ[p] = ++seen[syms[p]];
  return occ;
}

std::vector<Stripe> stripe_layout(const std::vector<BunchSymbol>& syms, bool x_side) {
  std::map<BunchSymbol, int, SymLess> counts;
  for (const auto& s : syms)
    if ((x_side && s.in_Ex()) || (!x_side && s.in_Ey())) ++counts[s];
  std::vector<Stripe> out;
  for (const auto& [s, c] : counts) out.push_back({s, c});
  std::sort(out.begin(), out.end(), [](const Stripe& a, const Stripe& b) {
    return chain_position(a.symbol) < chain_position(b.symbol);
  });
  return out;
}

struct Builder {
  CanonicalForm form;
  std::vector<int> occ;

  void layout(const std::vector<BunchSymbol>& syms, int t, int m) {
    occ = occurrence_numbers(syms);
    form.t = t;
    form.block = m;
    form.stripes_x = stripe_layout(syms, true);
    form.stripes_y = stripe_layout(syms, false);
    int rx = 0, ry = 0;
    for (const auto& s : form.stripes_x) rx += s.occurrences;
    for (const auto& s : form.stripes_y) ry += s.occurrences;
    form.theta_x = QMat::Zero(rx * m, t * m);
    form.theta_y = QMat::Zero(ry * m, t * m);
  }

  // writes an m-block: identity, or the Jordan block with eigenvalue lambda
  void put_block(const BunchSymbol& e_sym, int e_occ, int f_occ, const Rat* lambda) {
    QMat& theta = e_sym.in_Ex() ? form.theta_x : form.theta_y;
    int r0 = form.row_of(e_sym, e_occ);
    int c0 = (f_occ - 1) * form.block;
    for (int k = 0; k < form.block; ++k) {
      theta(r0 + k, c0 + k) = lambda ? *lambda : Rat(1);
      if (lambda && k + 1 < form.block) theta(r0 + k, c0 + k + 1) = Rat(1);
    }
  }

  void add_dash(const BunchSymbol& a, int occ_a, const BunchSymbol& b, int occ_b,
                const Rat* lambda = nullptr) {
    if (a.in_E())
      put_block(a, occ_a, occ_b, lambda);
    else
      put_block(b, occ_b, occ_a, lambda);
  }
};

}  // namespace

int CanonicalForm::row_of(const BunchSymbol& s, int occurrence) const {
  const auto& stripes = s.in_Ex() ? stripes_x : stripes_y;
  int base = 0;
  for (const auto& st : stripes) {
    if (st.symbol == s) return (base + occurrence - 1) * block;
    base += st.occurrences;
  }
  throw word_error(word_error::BadShape, "symbol has no stripe: " + symbol_str(s));
}

CanonicalForm canonical_form_string(const FullWord& w) {
  std::string why;
  if (!valid_full_word(w, &why)) throw word_error(word_error::BadShape, "invalid word: " + why);
  int t = 0;
  for (const auto& s : w.syms)
    if (s.kind == SymKind::Gamma) ++t;
  Builder b;
  b.layout(w.syms, t, 1);
  for (size_t k = 0; k < w.rels.size(); ++k)
    if (w.rels[k] == Rel::Dash) {
      // the column index is the occurrence number of the gamma/delta end
      int occ_a = b.occ[k], occ_b = b.occ[k + 1];
      b.add_dash(w.syms[k], occ_a, w.syms[k + 1], occ_b);
    }
  return b.form;
}

CanonicalForm canonical_form_band(const CyclicWord& w, int m, const Rat& lambda) {
  std::string why;
  if (!valid_cyclic_word(w, &why)) throw word_error(word_error::BadShape, "invalid cyclic word: " + why);
  if (m < 1) throw word_error(word_error::BadShape, "multiplicity must be positive");
  if (lambda == 0) throw word_error(word_error::ZeroLambda, "lambda must be nonzero");
  if (is_periodic(w)) throw word_error(word_error::Periodic, "periodic cyclic word");
  int t = 0;
  for (const auto& s : w.base.syms)
    if (s.kind == SymKind::Gamma) ++t;
  Builder b;
  b.layout(w.base.syms, t, m);
  for (size_t k = 0; k < w.base.rels.size(); ++k)
    if (w.base.rels[k] == Rel::Dash)
      b.add_dash(w.base.syms[k], b.occ[k], w.base.syms[k + 1], b.occ[k + 1]);
  // closing dash: the wrap entry carries the Jordan block
  size_t last = w.base.syms.size() - 1;
  b.add_dash(w.base.syms[last], b.occ[last], w.base.syms[0], b.occ[0], &lambda);
  return b.form;
}

bool regularity_check(const CanonicalForm& c) {
  if (rank_q(c.theta_x) != c.rows_x()) return false;
  if (rank_q(c.theta_y) != c.rows_y()) return false;
  QMat stack(c.rows_x() + c.rows_y(), c.theta_x.cols());
  stack << c.theta_x, c.theta_y;
  return rank_q(stack) == static_cast<int>(stack.cols());
}

namespace {

bool good_endpoint(const BunchSymbol& s) { return s.in_F() || s.unpaired(); }

}  // namespace

bool essential_image_predicate(const FullWord& w) {
  if (w.syms.size() < 2) return false;
  if (!good_endpoint(w.syms.front()) || !good_endpoint(w.syms.back())) return false;
  if (w.syms.size() == 2 && w.syms[0].in_F() && w.syms[1].in_F()) return false;
  return true;
}

bool essential_image_predicate(const CyclicWord&) { return true; }

namespace {

nlohmann::json theta_json(const QMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json stripes_json(const std::vector<Stripe>& stripes, int block) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : stripes)
    out.push_back({{"symbol", symbol_str(s.symbol)}, {"rows", s.occurrences * block}});
  return out;
}

void latex_matrix(std::ostringstream& out, const QMat& m, const std::vector<Stripe>& stripes,
                  int block, const char* corner) {
  out << "\\begin{array}{r|";
  for (int j = 0; j < m.cols(); ++j) out << "c";
  out << "}\n" << corner;
  for (int j = 0; j < m.cols(); ++j) out << " &";
  out << " \\\\\\hline\n";
  int row = 0;
  for (const auto& s : stripes) {
    for (int r = 0; r < s.occurrences * block; ++r, ++row) {
      out << (r == 0 ? symbol_str(s.symbol) : "");
      for (int j = 0; j < m.cols(); ++j) out << " & " << rat_str(m(row, j));
      out << " \\\\\n";
    }
  }
  out << "\\end{array}";
}

}  // namespace

std::string canonical_form_json(const CanonicalForm& c) {
  nlohmann::json j;
  j["stripes_x"] = stripes_json(c.stripes_x, c.block);
  j["stripes_y"] = stripes_json(c.stripes_y, c.block);
  j["t"] = c.t;
  j["block"] = c.block;
  j["theta_x"] = theta_json(c.theta_x);
  j["theta_y"] = theta_json(c.theta_y);
  return j.dump();
}

std::string canonical_form_latex(const CanonicalForm& c) {
  std::ostringstream out;
  out << "\\[\n";
  latex_matrix(out, c.theta_x, c.stripes_x, c.block, "\\gamma");
  out << "\n\\qquad\n";
  latex_matrix(out, c.theta_y, c.stripes_y, c.block, "\\delta");
  out << "\n\\]\n";
  return out.str();
}

}  // namespace cmband
