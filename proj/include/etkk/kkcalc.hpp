// Diagram calculus for KK-classes between blocks.  A diagram is an integer
// matrix lambda0 : Z^p -> Z^p' together with an integer lambda1 satisfying
// the commutation rule (alpha'-beta') lambda0 = lambda1 (alpha-beta); the
// trivial subgroup M consists of diagrams factoring through a vector mu
// (lambda0 = mu (alpha-beta), lambda1 = (alpha'-beta') mu).  KK-classes are
// diagram cosets mod M; positivity means lambda0 >= 0 entrywise (nonzero) or
// the zero diagram.
#ifndef ETKK_KKCALC_HPP
#define ETKK_KKCALC_HPP

#include "etkk/blocks.hpp"
#include "etkk/ktheory.hpp"

#include <variant>

namespace etkk {

struct Diagram {
  Block source;  // A, with p summands
  Block target;  // B, with p' summands
  IntMat lambda0;  // p' x p
  Int lambda1 = 0;  // meaningful only when both blocks are Interval kind

  // lambda1 with finite-dimensional degeneration applied (0 when either side
  // has no interval fiber).
  Int lambda1_effective() const;
  bool same_shape(const Diagram& o) const {
    return source == o.source && target == o.target;
  }
};

struct MWitness {
  IntVec mu;  // length p'
};

// Checks shapes and the commutation rule.  Errors: DimensionMismatch,
// NotCommutative (reports the first offending column).
Diagram diagram_validate(const Block& a, const Block& b, IntMat lambda0,
                         Int lambda1);

Diagram zero_diagram(const Block& a, const Block& b);
Diagram identity_diagram(const Block& a);
Diagram add(const Diagram& d1, const Diagram& d2);
Diagram negate(const Diagram& d);
Diagram subtract(const Diagram& d1, const Diagram& d2);

// Membership in the trivial subgroup M; returns the factoring vector mu.
std::optional<MWitness> in_M(const Diagram& d);

// Equality of KK-classes: the difference lies in M.
// Errors: SourceTargetMismatch.
bool kk_equal(const Diagram& d1, const Diagram& d2);

// Composition (d : A->B first, then e : B->C).  Errors: SourceTargetMismatch.
Diagram compose(const Diagram& d, const Diagram& e);

bool is_zero_diagram(const Diagram& d);
bool is_positive(const Diagram& d);

struct PositiveRep {
  MWitness witness;  // mu of the M-element that was added
  Diagram rep;       // the positive representative d + (mu-element)
};

// Finds an M-translate of d that is positive, preferring the zero
// representative when d itself lies in M.  Empty when the coset contains no
// positive diagram.
std::optional<PositiveRep> positive_mod_M(const Diagram& d);

struct Unbounded {};

// All positive representatives of the coset of d, by exhausting the finite
// feasibility box for mu; Unbounded when the index row of the source lacks a
// sign (the box is not finite).
std::variant<std::vector<Diagram>, Unbounded> enumerate_positive_reps(
    const Diagram& d);

struct OrderGenerator {
  Block source;     // dimension-drop block or circle
  Diagram diagram;  // source -> A, always positive
};

// The finite generator family of the order on total K-theory: one
// dimension-drop source I~_{a_x b_y} for every (positive, negative) entry
// pair of alpha-beta, plus one circle source per zero entry.
// Errors: WrongKind.
std::vector<OrderGenerator> order_generators(const Block& a);

// True iff composing every order generator of the source with g lands in a
// coset containing a positive diagram.
bool preserves_order(const Diagram& g);

// lambda0 applied to a K0 element.  Errors: NotInK0.
IntVec apply_to_k0(const Diagram& d, const IntVec& v);

// True iff the unit class k maps to 0.
bool kills_unit(const Diagram& d);

// Brute-force variant of in_M scanning mu over a box (testing aid).
std::optional<MWitness> in_M_brute(const Diagram& d, const Int& bound);

}  // namespace etkk

#endif  // ETKK_KKCALC_HPP
