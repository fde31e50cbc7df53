// Point-evaluation spectra: a homomorphism from a block into a matrix
// algebra is described up to unitary equivalence by base-point
// multiplicities plus a multiset of interior points.  Test functions turn
// spectra into exact rational eigenvalue multisets; this module also decides
// KK-equality of two point evaluations and aligns their spectra.
#ifndef ETKK_SPECTRA_HPP
#define ETKK_SPECTRA_HPP

#include "etkk/blocks.hpp"

#include <utility>

namespace etkk {

struct Spectrum {
  Block block;
  IntVec base;                // multiplicities of the base points, length p
  std::vector<Rat> interior;  // sorted multiset in (0,1); Interval kind only

  // Size of the represented matrix algebra.
  Int dimension() const;
};

// Validates nonnegativity, interior range (0,1), and dimension >= 1; sorts
// the interior.  Errors: NonpositiveSize, BadPoint.
Spectrum make_spectrum(Block block, IntVec base, std::vector<Rat> interior);

struct TestFunction {
  enum class Kind { Type1, Type2 };
  Kind kind = Kind::Type1;
  Rat eta;  // 1/m
  // Type1: ramps attached to base point j (0-based) rising on [0, r*eta] and
  // [s*eta, 1] with r+2 <= s <= m.
  Index j = 0;
  Int r = 0, s = 2;
  // Type2: a closed grid set inside [eta, 1-eta] as disjoint sorted segments
  // [lo, hi] (points when lo == hi).
  std::vector<std::pair<Rat, Rat>> x;
};

// The canonical family for grid 1/m: all Type1 triples and the grid-closed
// Type2 sets (lazily capped at `budget` Type2 sets).  Errors: BadGrid.
std::vector<TestFunction> test_functions(const Block& a, const Rat& eta,
                                         std::size_t budget = 4096);

using EigMultiset = std::vector<Rat>;  // sorted ascending

// Exact eigenvalue multiset of the test function under the point evaluation
// described by S; cardinality equals S.dimension().  Errors: BlockMismatch.
EigMultiset eig(const TestFunction& h, const Spectrum& s);

// Optimal bottleneck matching distance (sorted pairing).
// Errors: CardinalityMismatch.
Rat eig_dist(const EigMultiset& e1, const EigMultiset& e2);

// The integer c with base1 - base2 = c * (alpha - beta), when one exists.
// Errors: BlockMismatch, CardinalityMismatch.
std::optional<Int> kk_equal_points(const Block& a, const Spectrum& s1,
                                   const Spectrum& s2);

// Replaces every interior point by the endpoint-0 (alpha) or endpoint-1
// (beta) base expansion.  Errors: WrongKind.
Spectrum push_to_base(const Spectrum& s, int endpoint);

struct Alignment {
  Spectrum s1, s2;
  // index pairs into the remaining interiors (sorted positions)
  std::vector<std::pair<Index, Index>> pairing;
  Rat maxdist;
};

// Aligns two KK-equal spectra sharing one interior multiset: moves |c|
// extremal interior points to base expansions so the bases agree, then pairs
// the remaining interiors in sorted order (maxdist <= 4 * n_constant * eta
// under the density hypothesis).  Errors: NotKKEqual, DensityViolation,
// BlockMismatch, PreconditionUnmet, BadGrid.
Alignment align_spectra(const Block& a, const Spectrum& s1, const Spectrum& s2,
                        const Rat& eta);

struct CorePairing {
  std::vector<Rat> x, y;  // sorted, equal size, paired positionally
  Rat maxdist;
};

// Extends the mandatory cores interior ∩ [eta, 1-eta] of both spectra to
// equal-size sets pairable within 2*eta (sorted pairing), maximizing the
// common size; empty when even the cores cannot be paired.
std::optional<CorePairing> pair_cores(const Spectrum& s1, const Spectrum& s2,
                                      const Rat& eta);

// Count of exact eigenvalue 1 of the ramp test function (j0, r, s=r+2)
// versus the closed-form count t_j0 + alpha_j0 * #((0, r*eta]) +
// beta_j0 * #([(r+2)*eta, 1)).
std::pair<Int, Int> count_formula_check(const Spectrum& s, Index j0,
                                        const Int& r, const Rat& eta);

}  // namespace etkk

#endif  // ETKK_SPECTRA_HPP
