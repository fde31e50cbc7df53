#include "etkk/blocks.hpp"

namespace etkk {

namespace {
bool vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}
}  // namespace

bool Block::operator==(const Block& o) const {
  if (kind != o.kind || !vec_eq(k, o.k)) return false;
  if (kind == BlockKind::FiniteDim) return true;
  return n == o.n && vec_eq(alpha, o.alpha) && vec_eq(beta, o.beta);
}

IntRow Block::index_row() const {
  if (kind == BlockKind::FiniteDim) return IntRow::Constant(1, p(), Int(0));
  return (alpha - beta).transpose();
}

Block validate_block(Block raw) {
  if (raw.p() < 1) throw Error("NonpositiveSize", "block needs p >= 1 summands");
  for (Index j = 0; j < raw.p(); ++j)
    if (raw.k(j) < 1)
      throw Error("NonpositiveSize", "summand size k_" + std::to_string(j + 1) +
                                         " must be positive");
  if (raw.kind == BlockKind::FiniteDim) {
    raw.n = 0;
    raw.alpha.resize(0);
    raw.beta.resize(0);
    return raw;
  }
  if (raw.n < 1) throw Error("NonpositiveSize", "fiber size n must be positive");
  if (raw.alpha.size() != raw.p() || raw.beta.size() != raw.p())
    throw Error("NonpositiveSize", "alpha/beta must have length p");
  for (Index j = 0; j < raw.p(); ++j)
    if (raw.alpha(j) < 0 || raw.beta(j) < 0)
      throw Error("NonpositiveSize", "alpha/beta entries must be nonnegative");
  Int adot = raw.alpha.dot(raw.k), bdot = raw.beta.dot(raw.k);
  if (adot != raw.n || bdot != raw.n)
    throw Error("UnitalityViolation",
                "alpha.k = " + to_string(adot) + ", beta.k = " +
                    to_string(bdot) + ", expected both = n = " + to_string(raw.n));
  for (Index j = 0; j < raw.p(); ++j)
    if (raw.alpha(j) == 0 && raw.beta(j) == 0)
      throw Error("ZeroColumn", "summand " + std::to_string(j + 1) +
                                    " is killed by both endpoint maps");
  return raw;
}

Block make_interval_block(IntVec k, Int n, IntVec alpha, IntVec beta) {
  Block b;
  b.kind = BlockKind::Interval;
  b.k = std::move(k);
  b.n = std::move(n);
  b.alpha = std::move(alpha);
  b.beta = std::move(beta);
  return validate_block(std::move(b));
}

Block make_finite_dim_block(IntVec k) {
  Block b;
  b.kind = BlockKind::FiniteDim;
  b.k = std::move(k);
  return validate_block(std::move(b));
}

Block canonical_circle() {
  IntVec one(1);
  one << 1;
  return make_interval_block(one, 1, one, one);
}

Block canonical_dimension_drop(const Int& q) {
  if (q < 2) throw Error("BadParameter", "dimension drop needs q >= 2");
  IntVec k(2), alpha(2), beta(2);
  k << 1, 1;
  alpha << q, 0;
  beta << 0, q;
  return make_interval_block(k, q, alpha, beta);
}

Int n_constant(const Block& a) {
  if (a.kind != BlockKind::Interval)
    throw Error("WrongKind", "n_constant needs an interval block");
  Rat max_ratio = 0;
  for (Index j = 0; j < a.p(); ++j) {
    if (a.alpha(j) == a.beta(j)) continue;
    Rat ratio(a.alpha(j) + a.beta(j), abs(a.alpha(j) - a.beta(j)));
    ratio.canonicalize();
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return rat_ceil(max_ratio) + 1;
}

BlockFlags classify(const Block& a) {
  BlockFlags f;
  if (a.kind == BlockKind::FiniteDim) {
    f.is_finite_dim = true;
    return f;
  }
  f.is_single_endpoint = true;
  for (Index j = 0; j < a.p(); ++j)
    if (a.alpha(j) != 0 && a.beta(j) != 0) f.is_single_endpoint = false;
  return f;
}

}  // namespace etkk
