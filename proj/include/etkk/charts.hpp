// Piecewise-linear spectral charts: a unital homomorphism between interval
// blocks is modeled by its base fibers (spectra over the p' base points of
// the target), a constant interior base multiplicity, and piecewise-linear
// interior spectral branches.  This module extracts fibers, composes charts,
// verifies and constructs quantitative sparsity witnesses (window counting
// per 1/K subinterval), and emits decomposition certificates at the K0
// bookkeeping level.
#ifndef ETKK_CHARTS_HPP
#define ETKK_CHARTS_HPP

#include "etkk/spectra.hpp"

namespace etkk {

struct PLPath {
  // (x, y) breakpoints, x strictly increasing from 0 to 1, y in [0,1];
  // linear interpolation between breakpoints.
  std::vector<std::pair<Rat, Rat>> pts;

  Rat value(const Rat& x) const;
};

// Validates monotone x coverage of [0,1] and y range.  Errors: BadPath.
PLPath make_path(std::vector<std::pair<Rat, Rat>> pts);
PLPath constant_path(const Rat& y);

struct SpectralChart {
  Block source;  // A (p summands, fiber size n)
  Block target;  // B (p' summands, fiber size n')
  std::vector<Spectrum> base_fibers;  // p' spectra over A, dim = k'_{i'}
  IntVec t_interior;                  // constant base multiplicity, length p
  std::vector<PLPath> paths;          // interior spectral branches
};

// Verifies fiber dimensions (= k'_{i'} and constant = n'), and the boundary
// identities fiber(0) = sum alpha'_{i'} s^{i'}, fiber(1) = sum beta'_{i'}
// s^{i'} with endpoint conversion (a path at value 0 contributes the alpha
// column, at value 1 the beta column).  Errors: FiberDimMismatch,
// BoundaryMismatch, WrongKind.
SpectralChart chart_validate(SpectralChart raw);

// Spectrum of the evaluation at x through the chart.
Spectrum fiber(const SpectralChart& c, const Rat& x);

SpectralChart identity_chart(const Block& a);

// Chart of the composition A -> B -> C: branches are the PL compositions of
// c1's branches with c2's branches plus constant branches from the interior
// points that c2's constant base multiplicity pins through c1's base fibers;
// base fibers are c2's base fibers evaluated through c1.
// Errors: SourceTargetMismatch.
SpectralChart compose_charts(const SpectralChart& c1, const SpectralChart& c2);

// Recursive interval pigeonhole: returns integers (c, c+1) on the grid
// 1/(L+1)^s, s = |E|, such that (L+1) * #(E_i ∩ (c*eta, (c+1)*eta)) <= #E_i
// for every i.
std::pair<Int, Int> pigeonhole_window(const std::vector<std::vector<Rat>>& E,
                                      const Int& L);

struct DistributionWitness {
  Rat eta;
  Int K = 1, L = 1;
  // One window (a_r, a_r + 1) per r = 1..K on the eta grid inside
  // [(r-1)/K, r/K].
  std::vector<std::pair<Int, Int>> intervals;
};

// True iff the witness satisfies both counting conditions: for every x in
// [0,1] and every r, (L+1) * #(fiber(x) interior ∩ (a_r eta, b_r eta)) <=
// #(fiber(x) interior ∩ ((r-1)/K, r/K)), and the same for every base fiber.
bool verify_witness(const SpectralChart& c, const DistributionWitness& w);

// Searches each 1/K subinterval for a window on the eta grid meeting the
// counting conditions.  Errors: GridMismatch when no window fits the grid.
std::optional<DistributionWitness> has_distribution(const SpectralChart& c,
                                                    const Rat& eta,
                                                    const Int& K, const Int& L);

// Constructs a witness at scale delta = eta / (L+1)^{p'} with
// eta = 1/(8K(L+1)): pigeonhole placement against the 0-fiber, refined
// through the base fibers, verified, with a full grid scan as fallback.
// Errors: DistributionNotFound.
std::pair<Rat, DistributionWitness> find_distribution(const SpectralChart& c,
                                                      const Int& K,
                                                      const Int& L);

// Composition stability: the same windows verify for the
// composite chart.  Errors: CompositionCheckFailed.
DistributionWitness distribution_composes(const SpectralChart& c1,
                                          const SpectralChart& c2,
                                          const DistributionWitness& w);

// Image of a positive K0 class through the chart:
// entry i' = base(s^{i'}) . g + |interior(s^{i'})| * (alpha . g).
// Errors: NotInK0Plus.
IntVec k0_image(const SpectralChart& c, const IntVec& g);

struct RatInterval {
  Rat lo, hi;
};

struct NamedCheck {
  std::string name;
  bool ok = false;
  IntVec margin;  // entrywise slack of the verified inequality
};

struct DecompositionCertificate {
  std::vector<RatInterval> V;  // V_0 .. V_K
  std::vector<RatInterval> W;  // fattened V_r, r = 1..K-1
  std::vector<IntVec> P;       // per middle window class, r = 1..K-1
  std::vector<IntVec> Q;       // per source summand class, j = 1..p
  IntVec R, q, nu_unit, rho_unit;
  std::vector<NamedCheck> checks;
};

// Splits the chart along the witness windows (rescaled to eta = delta/8,
// spacing 8) into endpoint classes Q_j, middle classes P_r, the small corner
// q, and verifies L*q <= nu_unit plus the bookkeeping identities.
// Errors: WitnessSpacingMismatch, InequalityFailed, BadParameter.
DecompositionCertificate decompose(const SpectralChart& c, const Int& K,
                                   const Int& L,
                                   const DistributionWitness& w);

}  // namespace etkk

#endif  // ETKK_CHARTS_HPP
