// Exact arithmetic foundation: arbitrary-precision integers and rationals
// as Eigen scalars, plus the small integer-lattice helpers (extended gcd,
// Hermite row echelon, kernel bases) used throughout the library.
#ifndef ETKK_NUMERIC_HPP
#define ETKK_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace etkk {

using Int = mpz_class;
using Rat = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntRow = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

// All domain errors carry a stable machine-readable code (e.g.
// "UnitalityViolation") in addition to a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
  return floor_div(q.get_num(), q.get_den());
}

// Smallest integer >= q.
inline Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool is_zero(const IntMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool is_nonnegative(const IntMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

inline IntVec zero_vec(Index n) { return IntVec::Constant(n, Int(0)); }
inline IntMat zero_mat(Index r, Index c) {
  return IntMat::Constant(r, c, Int(0));
}

// Gcd of all entries (0 for an empty or all-zero row).
Int content(const IntRow& v);

// Row-style Hermite echelon form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows dropped.  Deterministic for golden tests.
IntMat hermite_rows(IntMat m);

// Basis of { v : m v = 0 } as the rows of a Hermite-normalized matrix.
IntMat integer_kernel(const IntMat& m);

// True iff v is an integer combination of the rows of a Hermite-form matrix.
bool in_row_span(const IntMat& hermite, const IntRow& v);

// Sparse-preference solution of row . mu = rhs (mu built left to right,
// entries only where they strictly reduce the running gcd).  Empty when
// gcd(row) does not divide rhs.
std::optional<IntVec> solve_dot(const IntRow& row, const Int& rhs);

// Exact parse of a decimal integer string (optionally signed).
Int parse_int(const std::string& s);

// Exact parse of "num/den", a decimal string, or a plain integer.
Rat parse_rat(const std::string& s);

std::string to_string(const Int& v);
// Canonical "num/den" (denominator omitted when 1).
std::string to_string(const Rat& v);

}  // namespace etkk

#endif  // ETKK_NUMERIC_HPP
