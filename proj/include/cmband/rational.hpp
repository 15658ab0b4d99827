#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cmband {

// Exact rational scalar used everywhere. Arbitrary precision, always
// stored in canonical (reduced) form.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(t, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

}  // namespace cmband

namespace Eigen {

template <>
struct NumTraits<cmband::Rat> : GenericNumTraits<cmband::Rat> {
  typedef cmband::Rat Real;
  typedef cmband::Rat NonInteger;
  typedef cmband::Rat Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
