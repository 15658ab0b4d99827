#include "cmband/ring.hpp"

#include <cctype>
#include <sstream>

namespace cmband {

namespace {

Monomial mono_of(const RingSpec& r, std::initializer_list<std::pair<const char*, int>> parts) {
  Monomial m;
  for (auto& [v, e] : parts) {
    int k = r.var_index(v);
    if (k < 0) throw ring_error("unknown variable in relation");
    m.e[k] += e;
  }
  return m;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Inverse of a mod p, p prime.
long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw ring_error("coefficient not invertible mod p");
  return ((t % p) + p) % p;
}

}  // namespace

RingSpec::RingSpec(std::string name_, std::vector<std::string> vars_,
                   std::vector<Monomial> relations_, unsigned characteristic_)
    : name(std::move(name_)),
      vars(std::move(vars_)),
      relations(std::move(relations_)),
      characteristic(characteristic_) {
  if (vars.size() > 4) throw ring_error("at most four variables supported");
  for (const auto& rel : relations)
    if (rel.is_one()) throw ring_error("relations must be non-constant monomials");
  if (characteristic != 0 && (characteristic <= 2 || !is_prime(characteristic)))
    throw ring_error("characteristic must be 0 or a prime > 2");
}

int RingSpec::var_index(const std::string& v) const {
  for (int k = 0; k < nvars(); ++k)
    if (vars[k] == v) return k;
  return -1;
}

bool RingSpec::is_normal(const Monomial& m) const {
  for (const auto& rel : relations)
    if (rel.divides(m)) return false;
  return true;
}

Rat RingSpec::reduce_coeff(const Rat& c) const {
  if (characteristic == 0) return c;
  long p = static_cast<long>(characteristic);
  mpz_class num = c.get_num(), den = c.get_den();
  mpz_class pm(p);
  mpz_class n = num % pm;
  long nn = n.get_si();
  nn = ((nn % p) + p) % p;
  mpz_class d = den % pm;
  long dd = ((d.get_si() % p) + p) % p;
  if (dd == 0) throw ring_error("denominator divisible by characteristic");
  long val = (nn * inv_mod(dd, p)) % p;
  return Rat(val);
}

const RingSpec& RingSpec::A() {
  static const RingSpec r = [] {
    RingSpec s("A", {"x", "y", "u", "v"}, {});
    s.relations = {mono_of(s, {{"x", 1}, {"y", 1}}), mono_of(s, {{"y", 1}, {"u", 1}}),
                   mono_of(s, {{"u", 1}, {"v", 1}}), mono_of(s, {{"v", 1}, {"x", 1}}),
                   mono_of(s, {{"u", 2}}),           mono_of(s, {{"v", 2}})};
    return s;
  }();
  return r;
}

const RingSpec& RingSpec::P() {
  static const RingSpec r = [] {
    RingSpec s("P", {"x", "y", "z"}, {});
    s.relations = {mono_of(s, {{"x", 1}, {"y", 1}}), mono_of(s, {{"z", 2}})};
    return s;
  }();
  return r;
}

const RingSpec& RingSpec::T() {
  static const RingSpec r = [] {
    RingSpec s("T", {"a", "b"}, {});
    s.relations = {mono_of(s, {{"a", 2}, {"b", 2}})};
    return s;
  }();
  return r;
}

const RingSpec& RingSpec::Free2() {
  static const RingSpec r("Free2", {"a", "b"}, {});
  return r;
}

const RingSpec& RingSpec::Free4() {
  static const RingSpec r("Free4", {"a", "b", "u", "v"}, {});
  return r;
}

const RingSpec* RingSpec::by_name(const std::string& n) {
  if (n == "A") return &A();
  if (n == "P") return &P();
  if (n == "T") return &T();
  if (n == "Free2") return &Free2();
  if (n == "Free4") return &Free4();
  return nullptr;
}

RingElem::RingElem(const RingSpec& ring, Terms raw) : ring_(&ring) {
  for (auto& [m, c] : raw) insert_term(m, c);
}

void RingElem::insert_term(const Monomial& m, const Rat& c) {
  if (!ring_->is_normal(m)) return;  // killed by a relation
  Rat cc = ring_->reduce_coeff(c);
  if (cc == 0) return;
  auto [it, fresh] = terms_.emplace(m, cc);
  if (!fresh) {
    it->second = ring_->reduce_coeff(it->second + cc);
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem RingElem::constant(const RingSpec& r, const Rat& c) {
  RingElem e(r);
  e.insert_term(Monomial{}, c);
  return e;
}

RingElem RingElem::variable(const RingSpec& r, const std::string& v, int exp) {
  int k = r.var_index(v);
  if (k < 0) throw ring_error("unknown variable name: " + v);
  if (exp < 0) throw ring_error("negative exponent");
  Monomial m;
  m.e[k] = exp;
  return monomial(r, m);
}

RingElem RingElem::monomial(const RingSpec& r, const Monomial& m, const Rat& c) {
  RingElem e(r);
  e.insert_term(m, c);
  return e;
}

const RingSpec& RingElem::ring() const {
  if (!ring_) throw ring_error("use of default-constructed RingElem");
  return *ring_;
}

std::optional<int> RingElem::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rat RingElem::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

RingElem RingElem::operator+(const RingElem& o) const {
  if (&ring() != &o.ring()) throw ring_error("ring mismatch in +");
  RingElem r(*ring_);
  r.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = r.terms_.emplace(m, c);
    if (!fresh) {
      it->second = ring_->reduce_coeff(it->second + c);
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r(*ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_->reduce_coeff(-c));
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  if (&ring() != &o.ring()) throw ring_error("ring mismatch in *");
  RingElem r(*ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.insert_term(ma * mb, ca * cb);
  return r;
}

RingElem RingElem::scaled(const Rat& c) const {
  RingElem r(*ring_);
  for (const auto& [m, cc] : terms_) r.insert_term(m, cc * c);
  return r;
}

bool RingElem::operator==(const RingElem& o) const {
  if (ring_ == nullptr || o.ring_ == nullptr) return terms_.empty() && o.terms_.empty();
  return *ring_ == *o.ring_ && terms_ == o.terms_;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat cc = c;
    if (first) {
      if (cc < 0) {
        out << "-";
        cc = -cc;
      }
    } else {
      out << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool unit = (cc == 1);
    if (!unit || m.is_one()) out << rat_str(cc);
    bool need_star = !unit && !m.is_one();
    for (int k = 0; k < ring_->nvars(); ++k) {
      if (m.e[k] == 0) continue;
      if (need_star) out << "*";
      out << ring_->vars[k];
      if (m.e[k] > 1) out << "^" << m.e[k];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

// term := [sign] [coeff] [* var[^exp] (* var[^exp])*] | [sign] var...
void parse_term(Cursor& c, const RingSpec& ring, RingElem::Terms& acc, int sign) {
  c.skip_ws();
  Rat coeff(sign);
  bool saw_number = false;
  if (c.peek() == '-') {
    ++c.i;
    coeff = -coeff;
    c.skip_ws();
  }
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    size_t start = c.i;
    while (c.i < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
      ++c.i;
    coeff *= parse_rat(c.s.substr(start, c.i - start));
    saw_number = true;
  }
  Monomial m;
  bool saw_var = false;
  while (true) {
    c.skip_ws();
    if (c.peek() == '*') {
      ++c.i;
      c.skip_ws();
    }
    if (!std::isalpha(static_cast<unsigned char>(c.peek()))) break;
    size_t start = c.i;
    while (c.i < c.s.size() && std::isalnum(static_cast<unsigned char>(c.s[c.i])) &&
           !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
      ++c.i;
    std::string v = c.s.substr(start, c.i - start);
    int k = ring.var_index(v);
    if (k < 0) throw ring_error("unknown variable name: " + v);
    int exp = 1;
    c.skip_ws();
    if (c.peek() == '^') {
      ++c.i;
      c.skip_ws();
      size_t es = c.i;
      while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
      if (es == c.i) throw ring_error("missing exponent");
      exp = std::stoi(c.s.substr(es, c.i - es));
    }
    m.e[k] += exp;
    saw_var = true;
  }
  if (!saw_number && !saw_var) throw ring_error("empty term in polynomial literal");
  auto [it, fresh] = acc.emplace(m, coeff);
  if (!fresh) it->second += coeff;
}

}  // namespace

RingElem parse_elem(const RingSpec& ring, const std::string& text) {
  Cursor c{text};
  RingElem::Terms acc;
  if (c.done()) throw ring_error("empty polynomial literal");
  parse_term(c, ring, acc, 1);
  while (!c.done()) {
    char op = c.peek();
    if (op != '+' && op != '-') throw ring_error("expected + or - in polynomial literal");
    ++c.i;
    parse_term(c, ring, acc, op == '-' ? -1 : 1);
  }
  return RingElem(ring, std::move(acc));
}

PolyMatrix::PolyMatrix(const RingSpec& ring, int rows, int cols)
    : ring_(&ring), rows_(rows), cols_(cols), data_(rows * cols, RingElem(ring)) {
  if (rows < 0 || cols < 0) throw ring_error("negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(const RingSpec& ring, int n) {
  return scalar(ring, n, RingElem::constant(ring, 1));
}

PolyMatrix PolyMatrix::scalar(const RingSpec& ring, int n, const RingElem& d) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d;
  return m;
}

const RingSpec& PolyMatrix::ring() const {
  if (!ring_) throw ring_error("use of default-constructed PolyMatrix");
  return *ring_;
}

RingElem& PolyMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ring_error("matrix index out of range");
  return data_[r * cols_ + c];
}

const RingElem& PolyMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ring_error("matrix index out of range");
  return data_[r * cols_ + c];
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(ring() == o.ring()))
    throw ring_error("shape or ring mismatch in matrix +");
  PolyMatrix r(*ring_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(ring() == o.ring()))
    throw ring_error("shape or ring mismatch in matrix -");
  PolyMatrix r(*ring_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const { return matrix_mul(*this, o); }

PolyMatrix PolyMatrix::scaled(const RingElem& s) const {
  PolyMatrix r(*ring_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
  return r;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix r(*ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

std::string PolyMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[ ";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << at(i, j).str();
    }
    out << " ]\n";
  }
  return out.str();
}

PolyMatrix matrix_mul(const PolyMatrix& m, const PolyMatrix& n) {
  if (m.cols() != n.rows()) throw ring_error("dimension mismatch in matrix_mul");
  if (!(m.ring() == n.ring())) throw ring_error("ring mismatch in matrix_mul");
  PolyMatrix r(m.ring(), m.rows(), n.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n.cols(); ++j) {
      RingElem acc(m.ring());
      for (int k = 0; k < m.cols(); ++k) acc = acc + m.at(i, k) * n.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

RingElem poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ring_error("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return RingElem::constant(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  RingElem acc(m.ring());
  for (int j = 0; j < n; ++j) {
    PolyMatrix minor(m.ring(), n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    RingElem term = m.at(0, j) * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace cmband
