#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmband/rational.hpp"

namespace cmband {

struct ring_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exponent vector over at most four variables. The ambient RingSpec
// decides how many slots are meaningful.
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const {
    for (int k = 0; k < 4; ++k)
      if (e[k] > m.e[k]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] + m.e[k];
    return r;
  }
  bool operator==(const Monomial&) const = default;
};

// Degree first, then exponent vectors compared lexicographically with
// earlier variables weighted higher: x^2 sorts before x*y before y^2.
struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int k = 0; k < 4; ++k)
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
    return false;
  }
};

// A polynomial quotient ring whose relation ideal is generated by monomials.
// Coefficients are exact rationals (characteristic 0) or a prime field with
// p > 2 behind the same interface.
struct RingSpec {
  std::string name;
  std::vector<std::string> vars;
  std::vector<Monomial> relations;
  unsigned characteristic = 0;

  RingSpec(std::string name_, std::vector<std::string> vars_,
           std::vector<Monomial> relations_, unsigned characteristic_ = 0);

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& v) const;  // -1 when undeclared

  // Normal form means no relation monomial divides it.
  bool is_normal(const Monomial& m) const;

  // Reduces a coefficient into the prime field when characteristic > 0.
  Rat reduce_coeff(const Rat& c) const;

  bool operator==(const RingSpec& o) const { return this == &o || name == o.name; }

  // The five built-in instances.
  static const RingSpec& A();      // k[x,y,u,v]/(xy, yu, uv, vx, u^2, v^2)
  static const RingSpec& P();      // k[x,y,z]/(xy, z^2)
  static const RingSpec& T();      // k[a,b]/(a^2 b^2)
  static const RingSpec& Free2();  // k[a,b]
  static const RingSpec& Free4();  // k[a,b,u,v]
  static const RingSpec* by_name(const std::string& n);
};

// An exact element of a RingSpec: a finite map from normal-form monomials to
// nonzero coefficients. Immutable by convention; all operations return fresh
// values.
class RingElem {
 public:
  using Terms = std::map<Monomial, Rat, DegLex>;

  RingElem() : ring_(nullptr) {}
  explicit RingElem(const RingSpec& ring) : ring_(&ring) {}
  RingElem(const RingSpec& ring, Terms raw);  // normalizes

  static RingElem zero(const RingSpec& r) { return RingElem(r); }
  static RingElem constant(const RingSpec& r, const Rat& c);
  static RingElem variable(const RingSpec& r, const std::string& v, int exp = 1);
  static RingElem monomial(const RingSpec& r, const Monomial& m,
                           const Rat& c = Rat(1));

  const RingSpec& ring() const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Degree of zero is a distinguished sentinel, not a numeric value.
  std::optional<int> degree() const;

  Rat coeff(const Monomial& m) const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem scaled(const Rat& c) const;

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Canonical textual form: terms in deglex order, "0" for zero.
  std::string str() const;

 private:
  void insert_term(const Monomial& m, const Rat& c);
  const RingSpec* ring_;
  Terms terms_;
};

// Grammar: sum of terms `c*x^a*y^b`, coefficient optional, `-` folds into
// the coefficient. Whitespace is free. Throws ring_error on bad input.
RingElem parse_elem(const RingSpec& ring, const std::string& text);

// Dense grid of RingElem sharing one RingSpec.
class PolyMatrix {
 public:
  PolyMatrix() : ring_(nullptr), rows_(0), cols_(0) {}
  PolyMatrix(const RingSpec& ring, int rows, int cols);

  static PolyMatrix identity(const RingSpec& ring, int n);
  static PolyMatrix scalar(const RingSpec& ring, int n, const RingElem& d);

  const RingSpec& ring() const;
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RingElem& at(int r, int c);
  const RingElem& at(int r, int c) const;

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix scaled(const RingElem& s) const;
  PolyMatrix transposed() const;

  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  std::string str() const;

 private:
  const RingSpec* ring_;
  int rows_, cols_;
  std::vector<RingElem> data_;
};

PolyMatrix matrix_mul(const PolyMatrix& m, const PolyMatrix& n);

// Cofactor-expansion determinant, intended for the small golden matrices.
RingElem poly_det(const PolyMatrix& m);

}  // namespace cmband
