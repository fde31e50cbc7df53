#include "etkk/spectra.hpp"

#include "etkk/ktheory.hpp"

#include <algorithm>

namespace etkk {

namespace {

// 1/eta as an integer grid size.  Errors: BadGrid.
Int grid_size(const Rat& eta) {
  if (eta <= 0 || eta > Rat(1, 2) || eta.get_num() != 1)
    throw Error("BadGrid", "eta must be 1/m with m >= 2");
  return eta.get_den();
}

Rat dist_to_segment(const Rat& y, const Rat& lo, const Rat& hi) {
  if (y < lo) return lo - y;
  if (y > hi) return y - hi;
  return Rat(0);
}

}  // namespace

Int Spectrum::dimension() const {
  Int d = base.dot(block.k);
  if (block.kind == BlockKind::Interval) d += block.n * Int(interior.size());
  return d;
}

Spectrum make_spectrum(Block block, IntVec base, std::vector<Rat> interior) {
  Spectrum s;
  s.block = std::move(block);
  s.base = std::move(base);
  s.interior = std::move(interior);
  if (s.base.size() != s.block.p())
    throw Error("NonpositiveSize", "base vector must have length p");
  for (Index j = 0; j < s.base.size(); ++j)
    if (s.base(j) < 0)
      throw Error("NonpositiveSize", "base multiplicities must be nonnegative");
  if (s.block.kind != BlockKind::Interval && !s.interior.empty())
    throw Error("BadPoint", "finite-dimensional blocks have no interior points");
  for (const Rat& y : s.interior)
    if (y <= 0 || y >= 1)
      throw Error("BadPoint", "interior points must lie strictly in (0,1)");
  std::sort(s.interior.begin(), s.interior.end());
  if (s.dimension() < 1)
    throw Error("NonpositiveSize", "spectrum dimension must be >= 1");
  return s;
}

std::vector<TestFunction> test_functions(const Block& a, const Rat& eta,
                                         std::size_t budget) {
  Int m = grid_size(eta);
  std::vector<TestFunction> out;
  for (Index j = 0; j < a.p(); ++j)
    for (Int r = 0; r + 2 <= m; ++r)
      for (Int s = r + 2; s <= m; ++s) {
        TestFunction h;
        h.kind = TestFunction::Kind::Type1;
        h.eta = eta;
        h.j = j;
        h.r = r;
        h.s = s;
        out.push_back(h);
      }
  // Grid-closed subsets of [eta, 1-eta]: a union of unit cells
  // [i*eta, (i+1)*eta] plus isolated grid nodes not touching a chosen cell.
  if (m > 60) throw Error("BadGrid", "grid too fine to enumerate");
  const long cells = std::max(0L, static_cast<long>(m.get_si()) - 2);
  const long nodes = static_cast<long>(m.get_si()) - 1;
  std::size_t emitted = 0;
  for (unsigned long long cell_mask = 0;
       cell_mask < (1ULL << cells) && emitted < budget; ++cell_mask) {
    std::vector<bool> covered(nodes + 2, false);
    for (long i = 0; i < cells; ++i)
      if (cell_mask & (1ULL << i)) covered[i + 1] = covered[i + 2] = true;
    std::vector<long> free_nodes;
    for (long i = 1; i <= nodes; ++i)
      if (!covered[i]) free_nodes.push_back(i);
    for (unsigned long long node_mask = 0;
         node_mask < (1ULL << free_nodes.size()) && emitted < budget;
         ++node_mask) {
      if (cell_mask == 0 && node_mask == 0) continue;  // empty set
      TestFunction h;
      h.kind = TestFunction::Kind::Type2;
      h.eta = eta;
      // Merge chosen cells into maximal segments, then add isolated nodes.
      std::vector<std::pair<long, long>> segs;
      long i = 0;
      while (i < cells) {
        if (cell_mask & (1ULL << i)) {
          long jend = i;
          while (jend + 1 < cells && (cell_mask & (1ULL << (jend + 1))))
            ++jend;
          segs.emplace_back(i + 1, jend + 2);
          i = jend + 1;
        } else {
          ++i;
        }
      }
      for (std::size_t t = 0; t < free_nodes.size(); ++t)
        if (node_mask & (1ULL << t))
          segs.emplace_back(free_nodes[t], free_nodes[t]);
      std::sort(segs.begin(), segs.end());
      for (auto [lo, hi] : segs)
        h.x.emplace_back(Rat(lo) * eta, Rat(hi) * eta);
      out.push_back(std::move(h));
      ++emitted;
    }
  }
  return out;
}

EigMultiset eig(const TestFunction& h, const Spectrum& s) {
  const Block& a = s.block;
  if (a.kind != BlockKind::Interval)
    throw Error("BlockMismatch", "eig needs an interval block");
  const Rat& eta = h.eta;
  EigMultiset vals;
  auto zeros = [&vals](const Int& count) {
    for (Int c = 0; c < count; ++c) vals.emplace_back(0);
  };
  if (h.kind == TestFunction::Kind::Type1) {
    if (h.j >= a.p()) throw Error("BlockMismatch", "type-1 index out of range");
    for (Index jj = 0; jj < a.p(); ++jj) {
      for (Int copy = 0; copy < s.base(jj); ++copy) {
        if (jj == h.j) {
          vals.emplace_back(1);
          zeros(a.k(jj) - 1);
        } else {
          zeros(a.k(jj));
        }
      }
    }
    Rat lo_edge = Rat(h.r + 1) * eta;   // ramp support ends here
    Rat hi_edge = Rat(h.s - 1) * eta;   // mirrored ramp support starts here
    for (const Rat& y : s.interior) {
      if (y <= lo_edge) {
        Rat d = dist_to_segment(y, Rat(0), Rat(h.r) * eta);
        Rat v = (eta - d) / eta;
        if (v < 0) v = 0;
        for (Int c = 0; c < a.alpha(h.j); ++c) vals.push_back(v);
        zeros(a.n - a.alpha(h.j));
      } else if (y >= hi_edge) {
        Rat d = dist_to_segment(y, Rat(h.s) * eta, Rat(1));
        Rat v = (eta - d) / eta;
        if (v < 0) v = 0;
        for (Int c = 0; c < a.beta(h.j); ++c) vals.push_back(v);
        zeros(a.n - a.beta(h.j));
      } else {
        zeros(a.n);
      }
    }
  } else {
    for (Index jj = 0; jj < a.p(); ++jj)
      for (Int copy = 0; copy < s.base(jj); ++copy) zeros(a.k(jj));
    for (const Rat& y : s.interior) {
      Rat d;
      bool first = true;
      for (const auto& [lo, hi] : h.x) {
        Rat dd = dist_to_segment(y, lo, hi);
        if (first || dd < d) d = dd;
        first = false;
      }
      Rat v = first ? Rat(0) : Rat(1) - d / eta;
      if (v < 0) v = 0;
      vals.push_back(v);
      zeros(a.n - 1);
    }
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

Rat eig_dist(const EigMultiset& e1, const EigMultiset& e2) {
  if (e1.size() != e2.size())
    throw Error("CardinalityMismatch", "eigenvalue multisets differ in size");
  EigMultiset a = e1, b = e2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Rat best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat d = rat_abs(a[i] - b[i]);
    if (d > best) best = d;
  }
  return best;
}

std::optional<Int> kk_equal_points(const Block& a, const Spectrum& s1,
                                   const Spectrum& s2) {
  if (s1.block != a || s2.block != a)
    throw Error("BlockMismatch", "spectra must live over the given block");
  if (s1.interior.size() != s2.interior.size())
    throw Error("CardinalityMismatch",
                "interior multisets must have equal cardinality");
  IntVec diff = s1.base - s2.base;
  IntRow d = a.index_row();
  Index pivot = -1;
  for (Index j = 0; j < a.p(); ++j)
    if (d(j) != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) {
    for (Index j = 0; j < a.p(); ++j)
      if (diff(j) != 0) return std::nullopt;
    return Int(0);
  }
  if (diff(pivot) % d(pivot) != 0) return std::nullopt;
  Int c = diff(pivot) / d(pivot);
  for (Index j = 0; j < a.p(); ++j)
    if (diff(j) != c * d(j)) return std::nullopt;
  return c;
}

Spectrum push_to_base(const Spectrum& s, int endpoint) {
  if (s.block.kind != BlockKind::Interval)
    throw Error("WrongKind", "push_to_base needs an interval block");
  Spectrum out = s;
  Int count = Int(out.interior.size());
  out.interior.clear();
  out.base += count * (endpoint == 0 ? s.block.alpha : s.block.beta);
  return out;
}

Alignment align_spectra(const Block& a, const Spectrum& s1, const Spectrum& s2,
                        const Rat& eta) {
  if (s1.block != a || s2.block != a)
    throw Error("BlockMismatch", "spectra must live over the given block");
  if (s1.interior != s2.interior)
    throw Error("PreconditionUnmet",
                "alignment requires identical interior multisets");
  if (s1.dimension() != s2.dimension())
    throw Error("PreconditionUnmet", "alignment requires equal dimensions");
  auto copt = kk_equal_points(a, s1, s2);
  if (!copt)
    throw Error("NotKKEqual", "base difference is not a multiple of the index row");
  Int c = *copt;
  Alignment out;
  if (c == 0) {
    out.s1 = s1;
    out.s2 = s2;
    for (Index i = 0; i < Index(s1.interior.size()); ++i)
      out.pairing.emplace_back(i, i);
    out.maxdist = 0;
    return out;
  }
  Int m = grid_size(eta);
  Int bign = n_constant(a);
  Int abs_c = abs(c);
  // Density: every closed window of length 2N*eta must hold >= |c| points.
  Int rmax = m - 2 * bign;
  if (rmax < 0) rmax = 0;
  for (Int r = 0; r <= rmax; ++r) {
    Rat lo = Rat(r) * eta;
    Rat hi = Rat(r + 2 * bign) * eta;
    if (hi > 1) hi = 1;
    Int cnt = 0;
    for (const Rat& y : s1.interior)
      if (y >= lo && y <= hi) ++cnt;
    if (cnt < abs_c)
      throw Error("DensityViolation",
                  "window starting at grid index " + to_string(r) + " holds " +
                      to_string(cnt) + " < " + to_string(abs_c) + " points");
  }
  const std::vector<Rat>& y = s1.interior;  // sorted, shared by both spectra
  const Index total = Index(y.size());
  const Index keep = total - Index(abs_c.get_si());
  std::vector<Rat> int1, int2;
  Spectrum t1 = s1, t2 = s2;
  if (c > 0) {
    // Drop the largest |c| from s1 (pushed to endpoint 1) and the smallest
    // |c| from s2 (pushed to endpoint 0).
    int1.assign(y.begin(), y.begin() + keep);
    int2.assign(y.end() - keep, y.end());
    t1.base += abs_c * a.beta;
    t2.base += abs_c * a.alpha;
  } else {
    int1.assign(y.end() - keep, y.end());
    int2.assign(y.begin(), y.begin() + keep);
    t1.base += abs_c * a.alpha;
    t2.base += abs_c * a.beta;
  }
  t1.interior = int1;
  t2.interior = int2;
  out.s1 = std::move(t1);
  out.s2 = std::move(t2);
  out.maxdist = 0;
  for (Index i = 0; i < keep; ++i) {
    out.pairing.emplace_back(i, i);
    Rat d = rat_abs(int1[i] - int2[i]);
    if (d > out.maxdist) out.maxdist = d;
  }
  return out;
}

std::optional<CorePairing> pair_cores(const Spectrum& s1, const Spectrum& s2,
                                      const Rat& eta) {
  if (s1.block != s2.block)
    throw Error("BlockMismatch", "pair_cores needs spectra over one block");
  const Rat lo = eta, hi = Rat(1) - eta;
  auto split = [&](const Spectrum& s, std::vector<Rat>& core,
                   std::vector<Rat>& low, std::vector<Rat>& high) {
    for (const Rat& v : s.interior) {
      if (v < lo)
        low.push_back(v);
      else if (v > hi)
        high.push_back(v);
      else
        core.push_back(v);
    }
    // Nearest-to-core first extension order.
    std::sort(low.begin(), low.end(), std::greater<Rat>());
    std::sort(high.begin(), high.end());
  };
  std::vector<Rat> c1, l1, u1, c2, l2, u2;
  split(s1, c1, l1, u1);
  split(s2, c2, l2, u2);
  const Rat bound = 2 * eta;
  std::optional<CorePairing> best;
  for (std::size_t a1 = 0; a1 <= l1.size(); ++a1)
    for (std::size_t b1 = 0; b1 <= u1.size(); ++b1)
      for (std::size_t a2 = 0; a2 <= l2.size(); ++a2)
        for (std::size_t b2 = 0; b2 <= u2.size(); ++b2) {
          std::size_t n1 = c1.size() + a1 + b1;
          std::size_t n2 = c2.size() + a2 + b2;
          if (n1 != n2) continue;
          if (best && n1 <= best->x.size()) continue;
          std::vector<Rat> x(c1), yv(c2);
          x.insert(x.end(), l1.begin(), l1.begin() + a1);
          x.insert(x.end(), u1.begin(), u1.begin() + b1);
          yv.insert(yv.end(), l2.begin(), l2.begin() + a2);
          yv.insert(yv.end(), u2.begin(), u2.begin() + b2);
          std::sort(x.begin(), x.end());
          std::sort(yv.begin(), yv.end());
          Rat maxd = 0;
          bool ok = true;
          for (std::size_t i = 0; i < x.size(); ++i) {
            Rat d = rat_abs(x[i] - yv[i]);
            if (d > bound) {
              ok = false;
              break;
            }
            if (d > maxd) maxd = d;
          }
          if (ok) best = CorePairing{std::move(x), std::move(yv), maxd};
        }
  return best;
}

std::pair<Int, Int> count_formula_check(const Spectrum& s, Index j0,
                                        const Int& r, const Rat& eta) {
  TestFunction h;
  h.kind = TestFunction::Kind::Type1;
  h.eta = eta;
  h.j = j0;
  h.r = r;
  h.s = r + 2;
  Int m = grid_size(eta);
  if (r < 0 || h.s > m)
    throw Error("BadGrid", "need 0 <= r and r+2 <= m");
  EigMultiset e = eig(h, s);
  Int lhs = 0;
  for (const Rat& v : e)
    if (v == 1) ++lhs;
  const Block& a = s.block;
  Int in_left = 0, in_right = 0;
  Rat left_hi = Rat(r) * eta;
  Rat right_lo = Rat(r + 2) * eta;
  for (const Rat& y : s.interior) {
    if (y <= left_hi) ++in_left;   // y > 0 by invariant
    if (y >= right_lo) ++in_right; // y < 1 by invariant
  }
  Int rhs = s.base(j0) + a.alpha(j0) * in_left + a.beta(j0) * in_right;
  return {lhs, rhs};
}

}  // namespace etkk
