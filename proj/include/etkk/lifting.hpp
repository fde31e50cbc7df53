// Sufficient criteria deciding when a positive diagram class is realized by
// an actual unital homomorphism, and the composed-existence pipeline that
// combines a finite-dimensional-image decomposition of one map with an
// order-preserving class out of its target.
#ifndef ETKK_LIFTING_HPP
#define ETKK_LIFTING_HPP

#include "etkk/kkcalc.hpp"

namespace etkk {

enum class LiftStatus { Liftable, NotLiftable, Unknown };

struct LiftVerdict {
  LiftStatus status = LiftStatus::Unknown;
  // Which criterion fired ("rows-from-0", "rows-from-1", "lambda1-zero",
  // "endpoint-sums", "zero-class", "finite-dimensional-image",
  // "no-positive-representative", ...).
  std::string criterion;
  // The verified nonnegative rows (one per index l) or inequality slack
  // vectors backing a Liftable verdict.
  std::vector<IntVec> witness_rows;
  std::string reason;  // for NotLiftable / Unknown
  // Scale comparison lambda0 . k <= k' (unital adjustment feasibility).
  bool unital_scale_ok = false;
};

// Row-nonnegativity criterion: for lambda1 > 0 checks
// alpha' lambda0 - alpha - l (alpha - beta) >= 0 for l = 0..lambda1-1; for
// lambda1 < 0 the mirrored beta version; lambda1 = 0 is always liftable.
// Returns Unknown when the rows fail (the criterion is only sufficient).
// Errors: NotPositive when is_positive(d) fails.
LiftVerdict lift_d0(const Diagram& d);

// Endpoint-sum criterion: both displayed inequalities
//   (alpha' lambda0)_i >= [alpha_i lambda1]_+ + [-beta_i lambda1]_+
//   (beta'  lambda0)_i >= [-alpha_i lambda1]_+ + [beta_i lambda1]_+
// entrywise.  Errors: NotPositive.
LiftVerdict lift_suff(const Diagram& d);

// Decomposition of a map psi : A -> B into a finite-dimensional part, an
// interior part with unit class n * sum of g-vectors, and a remainder
// diagram.
struct FinDimDecomposition {
  IntVec psi_F1_unit;    // K0(B) class of the finite-dimensional part's unit
  IntVec psi_int_unit;   // K0(B) class of the interior part's unit
  Diagram psi_r_diagram; // remainder diagram A -> B
  std::vector<IntVec> g_vectors;  // nonnegative K0(B) vectors g^i
};

// Certifies that the composition (class of psi) x g is liftable, replaying
// the case analysis on the sign of lambda1(g) * lambda1(remainder): either
// the composed class vanishes (unit supported on the zero rows of the
// positive representative) or the pushed-to-endpoint diagram satisfies the
// row criterion.  Errors: HypothesisViolation (order hypothesis
// psi_int_unit >= [psi_r(1)] or order preservation of g fails), reporting
// which hypothesis.
LiftVerdict composed_existence(const FinDimDecomposition& dec,
                               const Diagram& g);

// Rigidity checker: under preserves_order(g) and kills_unit(g) the class of g
// must be zero; returns kk_equal(g, 0).  Errors: PreconditionUnmet.
bool zero_kk_check(const Diagram& g);

// Decision wrapper: tries the sufficient criteria on a positive
// representative; issues NotLiftable only for circle or single-endpoint
// sources (where positivity mod M is equivalent to liftability).
LiftVerdict decide_lift(const Diagram& d);

}  // namespace etkk

#endif  // ETKK_LIFTING_HPP
