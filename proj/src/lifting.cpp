#include "etkk/lifting.hpp"

namespace etkk {

namespace {

void require_interval_pair(const Diagram& d, const char* who) {
  if (d.source.kind != BlockKind::Interval ||
      d.target.kind != BlockKind::Interval)
    throw Error("WrongKind", std::string(who) + " needs interval blocks");
}

bool scale_ok(const Diagram& d) {
  IntVec image = d.lambda0 * d.source.k;
  for (Index i = 0; i < image.size(); ++i)
    if (image(i) > d.target.k(i)) return false;
  return true;
}

bool vec_nonneg(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return false;
  return true;
}

}  // namespace

LiftVerdict lift_d0(const Diagram& d) {
  require_interval_pair(d, "lift_d0");
  if (!is_positive(d)) throw Error("NotPositive", "diagram is not positive");
  LiftVerdict v;
  v.unital_scale_ok = scale_ok(d);
  Int l1 = d.lambda1_effective();
  if (l1 == 0) {
    v.status = LiftStatus::Liftable;
    v.criterion = "lambda1-zero";
    return v;
  }
  const bool from_zero = l1 > 0;
  IntRow top = from_zero ? IntRow(d.target.alpha.transpose() * d.lambda0)
                         : IntRow(d.target.beta.transpose() * d.lambda0);
  IntRow base = from_zero ? IntRow(d.source.alpha.transpose())
                          : IntRow(d.source.beta.transpose());
  IntRow step = from_zero ? d.source.index_row() : IntRow(-d.source.index_row());
  Int count = from_zero ? l1 : Int(-l1);
  std::vector<IntVec> rows;
  for (Int l = 0; l < count; ++l) {
    IntRow row = top - base - l * step;
    for (Index j = 0; j < row.cols(); ++j)
      if (row(j) < 0) {
        v.status = LiftStatus::Unknown;
        v.criterion = from_zero ? "rows-from-0" : "rows-from-1";
        v.reason = "row l=" + to_string(l) + " has negative entry at column " +
                   std::to_string(j + 1);
        return v;
      }
    rows.push_back(row.transpose());
  }
  v.status = LiftStatus::Liftable;
  v.criterion = from_zero ? "rows-from-0" : "rows-from-1";
  v.witness_rows = std::move(rows);
  return v;
}

LiftVerdict lift_suff(const Diagram& d) {
  require_interval_pair(d, "lift_suff");
  if (!is_positive(d)) throw Error("NotPositive", "diagram is not positive");
  LiftVerdict v;
  v.unital_scale_ok = scale_ok(d);
  Int l1 = d.lambda1_effective();
  IntRow a_top = d.target.alpha.transpose() * d.lambda0;
  IntRow b_top = d.target.beta.transpose() * d.lambda0;
  IntVec slack0(d.source.p()), slack1(d.source.p());
  for (Index i = 0; i < d.source.p(); ++i) {
    Int at = d.source.alpha(i) * l1;
    Int bt = d.source.beta(i) * l1;
    Int rhs0 = (at >= 0 ? at : Int(0)) - (bt <= 0 ? bt : Int(0));
    Int rhs1 = -(at <= 0 ? at : Int(0)) + (bt >= 0 ? bt : Int(0));
    slack0(i) = a_top(i) - rhs0;
    slack1(i) = b_top(i) - rhs1;
    if (slack0(i) < 0 || slack1(i) < 0) {
      v.status = LiftStatus::Unknown;
      v.criterion = "endpoint-sums";
      v.reason = "inequality fails at column " + std::to_string(i + 1);
      return v;
    }
  }
  v.status = LiftStatus::Liftable;
  v.criterion = "endpoint-sums";
  v.witness_rows = {slack0, slack1};
  return v;
}

LiftVerdict composed_existence(const FinDimDecomposition& dec,
                               const Diagram& g) {
  const Diagram& eta = dec.psi_r_diagram;
  require_interval_pair(eta, "composed_existence");
  require_interval_pair(g, "composed_existence");
  if (eta.target != g.source)
    throw Error("SourceTargetMismatch",
                "decomposition target must equal the source of g");
  const Block& a = eta.source;
  const Block& b = eta.target;
  if (dec.psi_F1_unit.size() != b.p() || dec.psi_int_unit.size() != b.p())
    throw Error("HypothesisViolation", "unit classes must live in K0 of the target");
  // Internal consistency: nonnegative kernel-class g-vectors summing (scaled
  // by the source fiber size) to the interior unit class.
  IntVec gsum = zero_vec(b.p());
  for (const auto& gv : dec.g_vectors) {
    if (gv.size() != b.p() || !k0_positive_contains(b, gv))
      throw Error("HypothesisViolation",
                  "g-vector outside the positive K0 cone of the target");
    gsum += gv;
  }
  IntVec expect = a.n * gsum;
  for (Index i = 0; i < b.p(); ++i)
    if (dec.psi_int_unit(i) != expect(i))
      throw Error("HypothesisViolation",
                  "interior unit class is not n times the g-vector sum");
  IntVec eta_unit = eta.lambda0 * a.k;
  if (!vec_nonneg(dec.psi_int_unit - eta_unit))
    throw Error("HypothesisViolation",
                "order hypothesis fails: interior unit does not dominate the "
                "remainder unit");
  if (!preserves_order(g))
    throw Error("HypothesisViolation", "g does not preserve the order");
  auto pm = positive_mod_M(g);
  if (!pm)
    throw Error("HypothesisViolation",
                "order-preserving class has no positive representative");
  const Diagram& lam = pm->rep;
  const Block& c = lam.target;
  LiftVerdict v;
  Int s = lam.lambda1_effective() * eta.lambda1_effective();
  if (s == 0) {
    v.status = LiftStatus::Liftable;
    v.criterion = "finite-dimensional-image";
    v.unital_scale_ok = true;
    return v;
  }
  // Classes supported on the zero rows of the positive representative map to
  // zero under it; if the whole unit lives there the composed class vanishes.
  std::vector<bool> zero_row(b.p(), false);
  for (Index i = 0; i < b.p(); ++i) {
    bool z = true;
    for (Index ii = 0; ii < c.p(); ++ii)
      if (lam.lambda0(ii, i) != 0) z = false;
    zero_row[i] = z;
  }
  auto in_zero_support = [&](const IntVec& u) {
    if (!k0_positive_contains(b, u)) return false;
    for (Index i = 0; i < b.p(); ++i)
      if (u(i) != 0 && !zero_row[i]) return false;
    return true;
  };
  if (in_zero_support(dec.psi_int_unit) && in_zero_support(dec.psi_F1_unit)) {
    v.status = LiftStatus::Liftable;
    v.criterion = "zero-class";
    v.unital_scale_ok = true;
    return v;
  }
  // Push the interior part to the endpoint matching the sign and check the
  // row criterion on the composed diagram.
  const bool from_zero = s > 0;
  IntMat zeta0 = zero_mat(b.p(), a.p());
  for (const auto& gv : dec.g_vectors)
    zeta0 += gv * (from_zero ? a.alpha.transpose() : a.beta.transpose());
  IntMat composed0 = lam.lambda0 * (zeta0 + eta.lambda0);
  IntRow top = from_zero ? IntRow(c.alpha.transpose() * composed0)
                         : IntRow(c.beta.transpose() * composed0);
  IntRow step = from_zero ? a.index_row() : IntRow(-a.index_row());
  Int count = from_zero ? s : Int(-s);
  std::vector<IntVec> rows;
  for (Int j = 0; j <= count; ++j) {
    IntRow row = top - j * step;
    for (Index col = 0; col < row.cols(); ++col)
      if (row(col) < 0) {
        v.status = LiftStatus::Unknown;
        v.criterion = from_zero ? "composed-rows-from-0" : "composed-rows-from-1";
        v.reason = "row j=" + to_string(j) + " has a negative entry";
        return v;
      }
    rows.push_back(row.transpose());
  }
  v.status = LiftStatus::Liftable;
  v.criterion = from_zero ? "composed-rows-from-0" : "composed-rows-from-1";
  v.witness_rows = std::move(rows);
  v.unital_scale_ok = true;
  return v;
}

bool zero_kk_check(const Diagram& g) {
  if (!preserves_order(g) || !kills_unit(g))
    throw Error("PreconditionUnmet",
                "zero_kk_check needs an order-preserving, unit-killing diagram");
  return kk_equal(g, zero_diagram(g.source, g.target));
}

LiftVerdict decide_lift(const Diagram& d) {
  auto pm = positive_mod_M(d);
  BlockFlags flags = classify(d.source);
  bool decidable = flags.is_single_endpoint || d.source == canonical_circle();
  LiftVerdict v;
  if (!pm) {
    if (decidable) {
      v.status = LiftStatus::NotLiftable;
      v.criterion = "no-positive-representative";
      v.reason = "no positive representative exists and positivity decides "
                 "liftability for this source";
    } else {
      v.status = LiftStatus::Unknown;
      v.reason = "no positive representative found; not decidable for this source";
    }
    return v;
  }
  LiftVerdict d0 = lift_d0(pm->rep);
  if (d0.status == LiftStatus::Liftable) return d0;
  LiftVerdict suff = lift_suff(pm->rep);
  if (suff.status == LiftStatus::Liftable) return suff;
  if (decidable) {
    v.status = LiftStatus::Liftable;
    v.criterion = "order-embedding";
    v.unital_scale_ok = scale_ok(pm->rep);
    return v;
  }
  v.status = LiftStatus::Unknown;
  v.reason = "sufficient criteria inconclusive";
  return v;
}

}  // namespace etkk
