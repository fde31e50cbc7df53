#include "etkk/kkcalc.hpp"

#include <algorithm>

namespace etkk {

namespace {

bool both_interval(const Diagram& d) {
  return d.source.kind == BlockKind::Interval &&
         d.target.kind == BlockKind::Interval;
}

// Integer interval {m : row + m*d >= 0 entrywise}.
struct Feasible {
  bool empty = false;
  bool has_lo = false, has_hi = false;
  Int lo = 0, hi = 0;
};

Feasible row_feasible(const IntRow& row, const IntRow& d) {
  Feasible f;
  for (Index j = 0; j < row.cols(); ++j) {
    if (d(j) > 0) {
      Int bound = ceil_div(-row(j), d(j));
      if (!f.has_lo || bound > f.lo) f.lo = bound;
      f.has_lo = true;
    } else if (d(j) < 0) {
      Int bound = floor_div(row(j), -d(j));
      if (!f.has_hi || bound < f.hi) f.hi = bound;
      f.has_hi = true;
    } else if (row(j) < 0) {
      f.empty = true;
      return f;
    }
  }
  if (f.has_lo && f.has_hi && f.lo > f.hi) f.empty = true;
  return f;
}

Diagram translate(const Diagram& d, const IntVec& mu) {
  Diagram out = d;
  out.lambda0 += mu * d.source.index_row();
  if (both_interval(d)) out.lambda1 += (d.target.index_row() * mu)(0);
  return out;
}

}  // namespace

Int Diagram::lambda1_effective() const {
  if (source.kind != BlockKind::Interval || target.kind != BlockKind::Interval)
    return 0;
  return lambda1;
}

Diagram diagram_validate(const Block& a, const Block& b, IntMat lambda0,
                         Int lambda1) {
  if (lambda0.rows() != b.p() || lambda0.cols() != a.p())
    throw Error("DimensionMismatch",
                "lambda0 must be p' x p = " + std::to_string(b.p()) + " x " +
                    std::to_string(a.p()));
  Diagram d;
  d.source = a;
  d.target = b;
  d.lambda0 = std::move(lambda0);
  d.lambda1 = std::move(lambda1);
  IntRow lhs = b.index_row() * d.lambda0;
  IntRow rhs = d.lambda1_effective() * a.index_row();
  for (Index j = 0; j < a.p(); ++j)
    if (lhs(j) != rhs(j))
      throw Error("NotCommutative",
                  "commutation fails at column " + std::to_string(j + 1) +
                      ": " + to_string(lhs(j)) + " != " + to_string(rhs(j)));
  return d;
}

Diagram zero_diagram(const Block& a, const Block& b) {
  Diagram d;
  d.source = a;
  d.target = b;
  d.lambda0 = zero_mat(b.p(), a.p());
  d.lambda1 = 0;
  return d;
}

Diagram identity_diagram(const Block& a) {
  Diagram d;
  d.source = a;
  d.target = a;
  d.lambda0 = IntMat::Identity(a.p(), a.p());
  d.lambda1 = 1;
  return d;
}

Diagram add(const Diagram& d1, const Diagram& d2) {
  if (!d1.same_shape(d2))
    throw Error("SourceTargetMismatch", "cannot add diagrams between different blocks");
  Diagram d = d1;
  d.lambda0 += d2.lambda0;
  d.lambda1 += d2.lambda1;
  return d;
}

Diagram negate(const Diagram& d) {
  Diagram out = d;
  out.lambda0 = -d.lambda0;
  out.lambda1 = -d.lambda1;
  return out;
}

Diagram subtract(const Diagram& d1, const Diagram& d2) {
  return add(d1, negate(d2));
}

std::optional<MWitness> in_M(const Diagram& d) {
  IntRow drow = d.source.index_row();
  const Index pprime = d.target.p();
  if (content(drow) != 0) {
    // Each row of lambda0 must be an exact multiple of the index row.
    IntVec mu = zero_vec(pprime);
    Index pivot = 0;
    while (drow(pivot) == 0) ++pivot;
    for (Index i = 0; i < pprime; ++i) {
      if (d.lambda0(i, pivot) % drow(pivot) != 0) return std::nullopt;
      mu(i) = d.lambda0(i, pivot) / drow(pivot);
      for (Index j = 0; j < drow.cols(); ++j)
        if (d.lambda0(i, j) != mu(i) * drow(j)) return std::nullopt;
    }
    if (both_interval(d)) {
      if ((d.target.index_row() * mu)(0) != d.lambda1) return std::nullopt;
    }
    return MWitness{mu};
  }
  // Zero index row (circle-like or finite-dimensional source): lambda0 must
  // vanish and lambda1 must be hit by the target index row.
  if (!is_zero(d.lambda0)) return std::nullopt;
  if (!both_interval(d)) return MWitness{zero_vec(pprime)};
  auto mu = solve_dot(d.target.index_row(), d.lambda1);
  if (!mu) return std::nullopt;
  return MWitness{*mu};
}

bool kk_equal(const Diagram& d1, const Diagram& d2) {
  if (!d1.same_shape(d2))
    throw Error("SourceTargetMismatch", "kk_equal needs matching blocks");
  return in_M(subtract(d1, d2)).has_value();
}

Diagram compose(const Diagram& d, const Diagram& e) {
  if (d.target != e.source)
    throw Error("SourceTargetMismatch", "compose needs d.target == e.source");
  Diagram out;
  out.source = d.source;
  out.target = e.target;
  out.lambda0 = e.lambda0 * d.lambda0;
  out.lambda1 = e.lambda1_effective() * d.lambda1_effective();
  return out;
}

bool is_zero_diagram(const Diagram& d) {
  return is_zero(d.lambda0) && d.lambda1_effective() == 0;
}

bool is_positive(const Diagram& d) {
  if (is_zero_diagram(d)) return true;
  return is_nonnegative(d.lambda0) && !is_zero(d.lambda0);
}

std::optional<PositiveRep> positive_mod_M(const Diagram& d) {
  const Index pprime = d.target.p();
  // The zero representative first: when d lies in M its class is the zero
  // (hence positive) element.
  if (auto w = in_M(d)) {
    IntVec mu = -w->mu;
    return PositiveRep{MWitness{mu}, translate(d, mu)};
  }
  IntRow drow = d.source.index_row();
  if (content(drow) == 0) {
    // Rows cannot be changed by M-translates; positivity is decided as-is.
    if (is_nonnegative(d.lambda0) && !is_zero(d.lambda0))
      return PositiveRep{MWitness{zero_vec(pprime)}, d};
    return std::nullopt;
  }
  IntVec mu(pprime);
  std::vector<Feasible> feas(pprime);
  for (Index i = 0; i < pprime; ++i) {
    feas[i] = row_feasible(d.lambda0.row(i), drow);
    if (feas[i].empty) return std::nullopt;
    // Unitality forces a mixed-sign index row whenever it is nonzero, so both
    // bounds exist for valid interval blocks; fall back defensively.
    if (feas[i].has_lo)
      mu(i) = feas[i].lo;
    else
      mu(i) = feas[i].hi;
  }
  Diagram rep = translate(d, mu);
  if (is_zero(rep.lambda0)) {
    // A vanishing lambda0 with nonzero lambda1 is not positive; move one row
    // off zero if its feasibility interval allows it.
    if (rep.lambda1_effective() == 0) return PositiveRep{MWitness{mu}, rep};
    for (Index i = 0; i < pprime; ++i) {
      Int alt = mu(i) + 1;
      bool ok = !feas[i].has_hi || alt <= feas[i].hi;
      if (!ok && feas[i].has_lo && mu(i) - 1 >= feas[i].lo) {
        alt = mu(i) - 1;
        ok = true;
      }
      if (ok) {
        mu(i) = alt;
        return PositiveRep{MWitness{mu}, translate(d, mu)};
      }
    }
    return std::nullopt;
  }
  return PositiveRep{MWitness{mu}, rep};
}

std::variant<std::vector<Diagram>, Unbounded> enumerate_positive_reps(
    const Diagram& d) {
  IntRow drow = d.source.index_row();
  bool has_pos = false, has_neg = false;
  for (Index j = 0; j < drow.cols(); ++j) {
    if (drow(j) > 0) has_pos = true;
    if (drow(j) < 0) has_neg = true;
  }
  if (!has_pos || !has_neg) return Unbounded{};
  const Index pprime = d.target.p();
  std::vector<Feasible> feas(pprime);
  for (Index i = 0; i < pprime; ++i) {
    feas[i] = row_feasible(d.lambda0.row(i), drow);
    if (feas[i].empty) return std::vector<Diagram>{};
  }
  std::vector<Diagram> out;
  IntVec mu(pprime);
  for (Index i = 0; i < pprime; ++i) mu(i) = feas[i].lo;
  for (;;) {
    Diagram rep = translate(d, mu);
    if (is_positive(rep)) out.push_back(rep);
    Index i = 0;
    for (; i < pprime; ++i) {
      if (mu(i) < feas[i].hi) {
        ++mu(i);
        for (Index j = 0; j < i; ++j) mu(j) = feas[j].lo;
        break;
      }
    }
    if (i == pprime) break;
  }
  return out;
}

std::vector<OrderGenerator> order_generators(const Block& a) {
  if (a.kind != BlockKind::Interval)
    throw Error("WrongKind", "order generators need an interval block");
  IntRow drow = a.index_row();
  std::vector<Index> pos, neg, zero;
  for (Index j = 0; j < a.p(); ++j) {
    if (drow(j) > 0)
      pos.push_back(j);
    else if (drow(j) < 0)
      neg.push_back(j);
    else
      zero.push_back(j);
  }
  std::vector<OrderGenerator> gens;
  for (Index x : pos) {
    for (Index y : neg) {
      Int ax = drow(x), by = -drow(y);
      Int w = ax * by;
      IntVec k(2), alpha(2), beta(2);
      k << 1, 1;
      alpha << w, 0;
      beta << 0, w;
      Block src = make_interval_block(k, w, alpha, beta);
      IntMat l0 = zero_mat(a.p(), 2);
      l0(x, 0) = by;
      l0(y, 1) = ax;
      gens.push_back({src, diagram_validate(src, a, std::move(l0), 1)});
    }
  }
  for (Index i : zero) {
    Block src = canonical_circle();
    IntMat l0 = zero_mat(a.p(), 1);
    l0(i, 0) = 1;
    gens.push_back({src, diagram_validate(src, a, std::move(l0), 1)});
  }
  return gens;
}

bool preserves_order(const Diagram& g) {
  for (const auto& gen : order_generators(g.source))
    if (!positive_mod_M(compose(gen.diagram, g))) return false;
  return true;
}

IntVec apply_to_k0(const Diagram& d, const IntVec& v) {
  if (v.size() != d.source.p() || !k0_contains(d.source, v))
    throw Error("NotInK0", "vector is not in the kernel of the index row");
  return d.lambda0 * v;
}

bool kills_unit(const Diagram& d) {
  IntVec image = apply_to_k0(d, d.source.k);
  for (Index i = 0; i < image.size(); ++i)
    if (image(i) != 0) return false;
  return true;
}

std::optional<MWitness> in_M_brute(const Diagram& d, const Int& bound) {
  const Index pprime = d.target.p();
  IntRow drow = d.source.index_row();
  IntVec mu = IntVec::Constant(pprime, -bound);
  for (;;) {
    IntMat l0 = mu * drow;
    bool ok = is_zero(l0 - d.lambda0);
    if (ok && both_interval(d)) ok = (d.target.index_row() * mu)(0) == d.lambda1;
    if (ok) return MWitness{mu};
    Index i = 0;
    for (; i < pprime; ++i) {
      if (mu(i) < bound) {
        ++mu(i);
        for (Index j = 0; j < i; ++j) mu(j) = -bound;
        break;
      }
    }
    if (i == pprime) return std::nullopt;
  }
}

}  // namespace etkk
