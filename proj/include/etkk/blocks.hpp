// Building blocks: an interval block is the algebra of M_n-valued functions
// on [0,1] whose endpoint values are diag-embeddings (with multiplicities
// alpha, beta) of a finite-dimensional algebra F1 = ⊕_j M_{k_j}; a
// finite-dimensional block is F1 alone.
#ifndef ETKK_BLOCKS_HPP
#define ETKK_BLOCKS_HPP

#include "etkk/numeric.hpp"

namespace etkk {

enum class BlockKind { Interval, FiniteDim };

struct Block {
  BlockKind kind = BlockKind::Interval;
  IntVec k;      // summand sizes k_1..k_p
  Int n = 0;     // interval fiber size (Interval kind only)
  IntVec alpha;  // endpoint-0 multiplicities (Interval kind only)
  IntVec beta;   // endpoint-1 multiplicities (Interval kind only)

  Index p() const { return k.size(); }
  bool operator==(const Block& o) const;
  bool operator!=(const Block& o) const { return !(*this == o); }

  // alpha - beta as a row (the index map of the six-term sequence); the zero
  // row for finite-dimensional blocks.
  IntRow index_row() const;
};

struct Algebra {
  std::vector<Block> blocks;
};

// Validates the invariants: positive sizes, unitality alpha.k = beta.k = n,
// and minimality (no summand killed by both endpoint maps).
// Errors: NonpositiveSize, UnitalityViolation, ZeroColumn.
Block validate_block(Block raw);

Block make_interval_block(IntVec k, Int n, IntVec alpha, IntVec beta);
Block make_finite_dim_block(IntVec k);

// C(S^1) presented as the interval block with p=1, k=(1), n=1, alpha=beta=(1).
Block canonical_circle();

// The order-q dimension-drop block: p=2, k=(1,1), n=q, alpha=(q,0),
// beta=(0,q).  Errors: BadParameter for q < 2.
Block canonical_dimension_drop(const Int& q);

// Smallest integer N with N-1 >= max over {j : alpha_j != beta_j} of
// |(alpha_j+beta_j)/(alpha_j-beta_j)|; 1 when alpha = beta (empty max).
// This bounds the spectral-alignment distance 4*N*eta.
// Errors: WrongKind on finite-dimensional blocks.
Int n_constant(const Block& a);

struct BlockFlags {
  bool is_finite_dim = false;
  // True iff every summand maps into only one endpoint (alpha_j = 0 or
  // beta_j = 0 for all j).
  bool is_single_endpoint = false;
};

BlockFlags classify(const Block& a);

}  // namespace etkk

#endif  // ETKK_BLOCKS_HPP
