// K-theory of a block from the six-term sequence: K0 is the kernel of the
// index row alpha-beta inside Z^p ordered by the coordinatewise cone, K1 is
// its integer cokernel (Z when alpha=beta, else Z/gcd), and the unit class is
// the size vector k.
#ifndef ETKK_KTHEORY_HPP
#define ETKK_KTHEORY_HPP

#include "etkk/blocks.hpp"

namespace etkk {

enum class K1Kind { FreeZ, Cyclic };

struct K1Group {
  K1Kind kind = K1Kind::Cyclic;
  Int order = 1;  // cokernel order for Cyclic (1 = trivial); unused for FreeZ
  bool operator==(const K1Group& o) const {
    return kind == o.kind && (kind == K1Kind::FreeZ || order == o.order);
  }
};

struct KTheoryData {
  IntMat k0_basis;  // rows form a Hermite-normalized lattice basis of ker
  Index k0_rank = 0;
  K1Group k1;
  IntVec unit_class;
};

KTheoryData compute_ktheory(const Block& a);

// Membership of v in K0 = ker(alpha - beta).  Errors: DimensionMismatch.
bool k0_contains(const Block& a, const IntVec& v);

// Membership in the positive cone K0+ (kernel with nonnegative entries).
bool k0_positive_contains(const Block& a, const IntVec& v);

}  // namespace etkk

#endif  // ETKK_KTHEORY_HPP
