#include "etkk/charts.hpp"

#include "etkk/ktheory.hpp"

#include <algorithm>

namespace etkk {

namespace {

bool vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

Int count_open(const std::vector<Rat>& pts, const Rat& lo, const Rat& hi) {
  Int c = 0;
  for (const Rat& y : pts)
    if (y > lo && y < hi) ++c;
  return c;
}

Int count_closed(const std::vector<Rat>& pts, const Rat& lo, const Rat& hi) {
  Int c = 0;
  for (const Rat& y : pts)
    if (y >= lo && y <= hi) ++c;
  return c;
}

// Interior path values at x (values 0/1 excluded; they convert to base).
std::vector<Rat> interior_values(const SpectralChart& c, const Rat& x) {
  std::vector<Rat> vals;
  for (const PLPath& p : c.paths) {
    Rat v = p.value(x);
    if (v > 0 && v < 1) vals.push_back(v);
  }
  return vals;
}

// All x at which the multiset of interior path values can change relative to
// the given thresholds: breakpoints plus threshold crossings.
std::vector<Rat> sweep_samples(const SpectralChart& c,
                               const std::vector<Rat>& thresholds) {
  std::vector<Rat> events{Rat(0), Rat(1)};
  for (const PLPath& p : c.paths) {
    for (const auto& bp : p.pts) events.push_back(bp.first);
    for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) {
      const auto& [x0, y0] = p.pts[i];
      const auto& [x1, y1] = p.pts[i + 1];
      if (y0 == y1) continue;
      for (const Rat& v : thresholds) {
        if ((v >= y0 && v <= y1) || (v >= y1 && v <= y0)) {
          Rat x = x0 + (v - y0) * (x1 - x0) / (y1 - y0);
          events.push_back(x);
        }
      }
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  std::vector<Rat> samples;
  for (std::size_t i = 0; i < events.size(); ++i) {
    samples.push_back(events[i]);
    if (i + 1 < events.size())
      samples.push_back((events[i] + events[i + 1]) / 2);
  }
  return samples;
}

// Condition (window vs enclosing interval) over every x in [0,1].
bool window_ok_everywhere(const SpectralChart& c, const Rat& win_lo,
                          const Rat& win_hi, const Rat& big_lo,
                          const Rat& big_hi, const Int& L) {
  std::vector<Rat> thresholds{win_lo, win_hi, big_lo, big_hi};
  for (const Rat& x : sweep_samples(c, thresholds)) {
    std::vector<Rat> vals = interior_values(c, x);
    Int small = count_open(vals, win_lo, win_hi);
    Int big = count_open(vals, big_lo, big_hi);
    if ((L + 1) * small > big) return false;
  }
  return true;
}

bool window_ok_bases(const SpectralChart& c, const Rat& win_lo,
                     const Rat& win_hi, const Rat& big_lo, const Rat& big_hi,
                     const Int& L) {
  for (const Spectrum& s : c.base_fibers) {
    Int small = count_open(s.interior, win_lo, win_hi);
    Int big = count_open(s.interior, big_lo, big_hi);
    if ((L + 1) * small > big) return false;
  }
  return true;
}

bool window_ok(const SpectralChart& c, const Rat& win_lo, const Rat& win_hi,
               const Rat& big_lo, const Rat& big_hi, const Int& L) {
  return window_ok_bases(c, win_lo, win_hi, big_lo, big_hi, L) &&
         window_ok_everywhere(c, win_lo, win_hi, big_lo, big_hi, L);
}

}  // namespace

Rat PLPath::value(const Rat& x) const {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& [x0, y0] = pts[i];
    const auto& [x1, y1] = pts[i + 1];
    if (x < x0 || x > x1) continue;
    if (x == x0) return y0;
    if (x == x1) return y1;
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
  }
  throw Error("BadPath", "query outside [0,1]");
}

PLPath make_path(std::vector<std::pair<Rat, Rat>> pts) {
  if (pts.size() < 2) throw Error("BadPath", "a path needs >= 2 breakpoints");
  if (pts.front().first != 0 || pts.back().first != 1)
    throw Error("BadPath", "a path must cover [0,1]");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].second < 0 || pts[i].second > 1)
      throw Error("BadPath", "path values must lie in [0,1]");
    if (i + 1 < pts.size() && pts[i].first >= pts[i + 1].first)
      throw Error("BadPath", "breakpoint x must be strictly increasing");
  }
  PLPath p;
  p.pts = std::move(pts);
  return p;
}

PLPath constant_path(const Rat& y) {
  return make_path({{Rat(0), y}, {Rat(1), y}});
}

Spectrum fiber(const SpectralChart& c, const Rat& x) {
  IntVec base = c.t_interior;
  std::vector<Rat> interior;
  for (const PLPath& p : c.paths) {
    Rat v = p.value(x);
    if (v == 0)
      base += c.source.alpha;
    else if (v == 1)
      base += c.source.beta;
    else
      interior.push_back(v);
  }
  return make_spectrum(c.source, std::move(base), std::move(interior));
}

SpectralChart chart_validate(SpectralChart raw) {
  if (raw.source.kind != BlockKind::Interval ||
      raw.target.kind != BlockKind::Interval)
    throw Error("WrongKind", "charts need interval blocks on both sides");
  const Block& a = raw.source;
  const Block& b = raw.target;
  if (raw.t_interior.size() != a.p())
    throw Error("FiberDimMismatch", "t vector must have length p");
  for (Index j = 0; j < a.p(); ++j)
    if (raw.t_interior(j) < 0)
      throw Error("FiberDimMismatch", "t entries must be nonnegative");
  if (Index(raw.base_fibers.size()) != b.p())
    throw Error("FiberDimMismatch", "need one base fiber per target summand");
  for (Index i = 0; i < b.p(); ++i) {
    if (raw.base_fibers[i].block != a)
      throw Error("FiberDimMismatch", "base fiber over the wrong block");
    if (raw.base_fibers[i].dimension() != b.k(i))
      throw Error("FiberDimMismatch",
                  "base fiber " + std::to_string(i + 1) + " has dimension " +
                      to_string(raw.base_fibers[i].dimension()) +
                      ", expected " + to_string(b.k(i)));
  }
  Int fdim = raw.t_interior.dot(a.k) + Int(raw.paths.size()) * a.n;
  if (fdim != b.n)
    throw Error("FiberDimMismatch", "fiber dimension " + to_string(fdim) +
                                        " != target fiber size " +
                                        to_string(b.n));
  for (int endpoint = 0; endpoint <= 1; ++endpoint) {
    Spectrum got = fiber(raw, Rat(endpoint));
    IntVec want_base = zero_vec(a.p());
    std::vector<Rat> want_interior;
    for (Index i = 0; i < b.p(); ++i) {
      Int mult = endpoint == 0 ? b.alpha(i) : b.beta(i);
      want_base += mult * raw.base_fibers[i].base;
      for (Int cpy = 0; cpy < mult; ++cpy)
        want_interior.insert(want_interior.end(),
                             raw.base_fibers[i].interior.begin(),
                             raw.base_fibers[i].interior.end());
    }
    std::sort(want_interior.begin(), want_interior.end());
    if (!vec_eq(got.base, want_base) || got.interior != want_interior)
      throw Error("BoundaryMismatch",
                  std::string("fiber at ") + (endpoint == 0 ? "0" : "1") +
                      " does not match the base-fiber expansion");
  }
  return raw;
}

SpectralChart identity_chart(const Block& a) {
  if (a.kind != BlockKind::Interval)
    throw Error("WrongKind", "identity chart needs an interval block");
  SpectralChart c;
  c.source = a;
  c.target = a;
  for (Index i = 0; i < a.p(); ++i) {
    IntVec e = zero_vec(a.p());
    e(i) = 1;
    c.base_fibers.push_back(make_spectrum(a, e, {}));
  }
  c.t_interior = zero_vec(a.p());
  c.paths.push_back(make_path({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));
  return chart_validate(std::move(c));
}

namespace {

PLPath compose_pl(const PLPath& inner_then_outer_p, const PLPath& q) {
  const PLPath& p = inner_then_outer_p;  // outer
  std::vector<Rat> xs;
  for (const auto& bp : q.pts) xs.push_back(bp.first);
  for (std::size_t i = 0; i + 1 < q.pts.size(); ++i) {
    const auto& [x0, y0] = q.pts[i];
    const auto& [x1, y1] = q.pts[i + 1];
    if (y0 == y1) continue;
    for (const auto& pbp : p.pts) {
      const Rat& v = pbp.first;
      if ((v >= y0 && v <= y1) || (v >= y1 && v <= y0))
        xs.push_back(x0 + (v - y0) * (x1 - x0) / (y1 - y0));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<Rat, Rat>> pts;
  for (const Rat& x : xs) pts.emplace_back(x, p.value(q.value(x)));
  return make_path(std::move(pts));
}

}  // namespace

SpectralChart compose_charts(const SpectralChart& c1, const SpectralChart& c2) {
  if (c1.target != c2.source)
    throw Error("SourceTargetMismatch", "compose needs c1.target == c2.source");
  const Block& a = c1.source;
  const Block& b = c1.target;
  SpectralChart out;
  out.source = a;
  out.target = c2.target;
  // Constant interior base: c2's pinned base points expand through c1's base
  // fibers; every branch of c2 carries c1's own pinned base.
  out.t_interior = zero_vec(a.p());
  for (Index i = 0; i < b.p(); ++i)
    out.t_interior += c2.t_interior(i) * c1.base_fibers[i].base;
  out.t_interior += Int(c2.paths.size()) * c1.t_interior;
  // Interior points of c1's base fibers pinned by c2's t become constant
  // branches.
  for (Index i = 0; i < b.p(); ++i)
    for (Int cpy = 0; cpy < c2.t_interior(i); ++cpy)
      for (const Rat& v : c1.base_fibers[i].interior)
        out.paths.push_back(constant_path(v));
  for (const PLPath& q : c2.paths)
    for (const PLPath& p : c1.paths) out.paths.push_back(compose_pl(p, q));
  // Base fibers of the composite: c2's base fibers evaluated through c1.
  for (const Spectrum& s : c2.base_fibers) {
    IntVec base = zero_vec(a.p());
    std::vector<Rat> interior;
    for (Index i = 0; i < b.p(); ++i) {
      base += s.base(i) * c1.base_fibers[i].base;
      for (Int cpy = 0; cpy < s.base(i); ++cpy)
        interior.insert(interior.end(), c1.base_fibers[i].interior.begin(),
                        c1.base_fibers[i].interior.end());
    }
    for (const Rat& x : s.interior) {
      Spectrum f = fiber(c1, x);
      base += f.base;
      interior.insert(interior.end(), f.interior.begin(), f.interior.end());
    }
    out.base_fibers.push_back(make_spectrum(a, std::move(base), std::move(interior)));
  }
  return chart_validate(std::move(out));
}

std::pair<Int, Int> pigeonhole_window(const std::vector<std::vector<Rat>>& E,
                                      const Int& L) {
  if (E.empty()) throw Error("BadParameter", "need at least one multiset");
  if (L < 1) throw Error("BadParameter", "L must be positive");
  Rat lo = 0, hi = 1;
  for (const auto& pts : E) {
    Int total = Int(pts.size());
    Rat len = (hi - lo) / Rat(L + 1);
    for (Int t = 0; t <= L; ++t) {
      Rat u = lo + Rat(t) * len;
      Rat v = u + len;
      if ((L + 1) * count_open(pts, u, v) <= total) {
        lo = u;
        hi = v;
        break;
      }
    }
  }
  // lo is an exact multiple of the final grid 1/(L+1)^s.
  Int scale = 1;
  for (std::size_t i = 0; i < E.size(); ++i) scale *= L + 1;
  Rat c = lo * Rat(scale);
  return {c.get_num(), c.get_num() + 1};
}

bool verify_witness(const SpectralChart& c, const DistributionWitness& w) {
  if (Index(w.intervals.size()) != w.K.get_si()) return false;
  for (Int r = 1; r <= w.K; ++r) {
    const auto& [ar, br] = w.intervals[r.get_si() - 1];
    if (br - ar != 1) return false;
    Rat win_lo = Rat(ar) * w.eta;
    Rat win_hi = Rat(br) * w.eta;
    Rat big_lo = Rat(Int(r - 1), w.K);
    Rat big_hi = Rat(r, w.K);
    big_lo.canonicalize();
    big_hi.canonicalize();
    if (win_lo < big_lo || win_hi > big_hi) return false;
    if (!window_ok(c, win_lo, win_hi, big_lo, big_hi, w.L)) return false;
  }
  return true;
}

std::optional<DistributionWitness> has_distribution(const SpectralChart& c,
                                                    const Rat& eta,
                                                    const Int& K,
                                                    const Int& L) {
  if (eta <= 0 || K < 1 || L < 1)
    throw Error("BadParameter", "need eta > 0, K >= 1, L >= 1");
  DistributionWitness w;
  w.eta = eta;
  w.K = K;
  w.L = L;
  for (Int r = 1; r <= K; ++r) {
    Rat big_lo = Rat(Int(r - 1), K);
    Rat big_hi = Rat(r, K);
    big_lo.canonicalize();
    big_hi.canonicalize();
    Int a_lo = rat_ceil(big_lo / eta);
    Int a_hi = rat_floor(big_hi / eta) - 1;
    if (a_lo > a_hi)
      throw Error("GridMismatch",
                  "no eta window fits inside subinterval " + to_string(r));
    bool found = false;
    for (Int a = a_lo; a <= a_hi; ++a) {
      Rat win_lo = Rat(a) * eta;
      Rat win_hi = Rat(Int(a + 1)) * eta;
      if (window_ok(c, win_lo, win_hi, big_lo, big_hi, L)) {
        w.intervals.emplace_back(a, a + 1);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

std::pair<Rat, DistributionWitness> find_distribution(const SpectralChart& c,
                                                      const Int& K,
                                                      const Int& L) {
  if (K < 1 || L < 1) throw Error("BadParameter", "need K >= 1, L >= 1");
  const Index pprime = c.target.p();
  Rat eta(1, 8 * K * (L + 1));
  eta.canonicalize();
  Int refine = 1;
  for (Index i = 0; i < pprime; ++i) refine *= L + 1;
  Rat delta = eta / Rat(refine);
  std::vector<Rat> zero_fiber = fiber(c, Rat(0)).interior;
  DistributionWitness w;
  w.eta = delta;
  w.K = K;
  w.L = L;
  for (Int r = 1; r <= K; ++r) {
    Rat big_lo = Rat(Int(r - 1), K);
    Rat big_hi = Rat(r, K);
    big_lo.canonicalize();
    big_hi.canonicalize();
    // Pigeonhole against the 0-fiber, shrink by 2*eta, then refine through
    // the base-fiber multisets.
    Rat cur_lo = big_lo, cur_hi = big_hi;
    {
      Int total = count_open(zero_fiber, big_lo, big_hi);
      Rat len = (cur_hi - cur_lo) / Rat(Int(L + 1));
      for (Int t = 0; t <= L; ++t) {
        Rat u = cur_lo + Rat(t) * len;
        if ((L + 1) * count_open(zero_fiber, u, u + len) <= total) {
          cur_lo = u;
          cur_hi = u + len;
          break;
        }
      }
    }
    cur_lo += 2 * eta;
    cur_hi -= 2 * eta;
    for (const Spectrum& s : c.base_fibers) {
      Int total = count_open(s.interior, big_lo, big_hi);
      Rat len = (cur_hi - cur_lo) / Rat(Int(L + 1));
      for (Int t = 0; t <= L; ++t) {
        Rat u = cur_lo + Rat(t) * len;
        if ((L + 1) * count_open(s.interior, u, u + len) <= total) {
          cur_lo = u;
          cur_hi = u + len;
          break;
        }
      }
    }
    // The refined interval spans 4 cells of the delta grid.
    Rat first_cell = cur_lo / delta;
    Int a0 = first_cell.get_num();  // exact by grid construction
    bool found = false;
    for (Int off = 0; off < 4 && !found; ++off) {
      Int a = a0 + off;
      Rat win_lo = Rat(a) * delta;
      Rat win_hi = Rat(Int(a + 1)) * delta;
      if (win_lo < big_lo || win_hi > big_hi) continue;
      if (window_ok(c, win_lo, win_hi, big_lo, big_hi, L)) {
        w.intervals.emplace_back(a, a + 1);
        found = true;
      }
    }
    if (!found) {
      // Full scan of the delta grid inside this subinterval.
      Int a_lo = rat_ceil(big_lo / delta);
      Int a_hi = rat_floor(big_hi / delta) - 1;
      for (Int a = a_lo; a <= a_hi && !found; ++a) {
        Rat win_lo = Rat(a) * delta;
        Rat win_hi = Rat(Int(a + 1)) * delta;
        if (window_ok(c, win_lo, win_hi, big_lo, big_hi, L)) {
          w.intervals.emplace_back(a, a + 1);
          found = true;
        }
      }
    }
    if (!found)
      throw Error("DistributionNotFound",
                  "no admissible window in subinterval " + to_string(r));
  }
  if (!verify_witness(c, w))
    throw Error("DistributionNotFound", "constructed witness failed re-check");
  return {delta, w};
}

DistributionWitness distribution_composes(const SpectralChart& c1,
                                          const SpectralChart& c2,
                                          const DistributionWitness& w) {
  if (!verify_witness(c1, w))
    throw Error("CompositionCheckFailed", "witness does not verify for c1");
  SpectralChart comp = compose_charts(c1, c2);
  if (!verify_witness(comp, w))
    throw Error("CompositionCheckFailed",
                "witness fails for the composite chart");
  return w;
}

IntVec k0_image(const SpectralChart& c, const IntVec& g) {
  if (!k0_positive_contains(c.source, g))
    throw Error("NotInK0Plus", "class must lie in the positive K0 cone");
  Int weight = c.source.alpha.dot(g);
  IntVec out(c.target.p());
  for (Index i = 0; i < c.target.p(); ++i)
    out(i) = c.base_fibers[i].base.dot(g) +
             Int(c.base_fibers[i].interior.size()) * weight;
  return out;
}

DecompositionCertificate decompose(const SpectralChart& c, const Int& K,
                                   const Int& L,
                                   const DistributionWitness& w) {
  // K = 2 is excluded: V_0 then ends at a_2*eta + 2*eta >= 1/2 while V_K
  // starts at b_1*eta - 2*eta <= 1/2, so the two endpoint regions overlap and
  // the corner class is no longer a partition remainder.  From K = 3 on they
  // are separated by a 4*eta gap.
  if (K < 3) throw Error("BadParameter", "decompose needs K >= 3");
  if (w.K != K || w.L != L || Index(w.intervals.size()) != K.get_si())
    throw Error("WitnessSpacingMismatch", "witness does not match (K, L)");
  for (const auto& [ar, br] : w.intervals)
    if (br - ar != 1)
      throw Error("WitnessSpacingMismatch", "witness windows must be one cell");
  if (!verify_witness(c, w))
    throw Error("WitnessSpacingMismatch", "witness does not verify for the chart");
  const Rat delta = w.eta;
  const Rat eta = delta / 8;
  const Block& b = c.target;
  const Int n = c.source.n;
  auto ahat = [&](Int r) -> Int { return 8 * w.intervals[r.get_si() - 1].first; };
  auto bhat = [&](Int r) -> Int { return ahat(r) + 8; };
  DecompositionCertificate cert;
  // V_0 swallows V_1, V_K swallows V_{K-1}; middle V_r sit between windows.
  cert.V.push_back({Rat(0), Rat(Int(ahat(2) + 2)) * eta});
  for (Int r = 1; r <= K - 1; ++r)
    cert.V.push_back({Rat(bhat(r)) * eta, Rat(ahat(r + 1)) * eta});
  cert.V.push_back({Rat(Int(bhat(K - 1) - 2)) * eta, Rat(1)});
  for (Int r = 1; r <= K - 1; ++r) {
    Rat lo = cert.V[r.get_si()].lo - 2 * eta;
    Rat hi = cert.V[r.get_si()].hi + 2 * eta;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    cert.W.push_back({lo, hi});
  }
  auto class_in = [&](const Rat& lo, const Rat& hi) {
    IntVec v(b.p());
    for (Index i = 0; i < b.p(); ++i)
      v(i) = n * count_closed(c.base_fibers[i].interior, lo, hi);
    return v;
  };
  for (Int r = 1; r <= K - 1; ++r)
    cert.P.push_back(class_in(cert.V[r.get_si()].lo, cert.V[r.get_si()].hi));
  const RatInterval& v0 = cert.V.front();
  const RatInterval& vk = cert.V.back();
  for (Index j = 0; j < c.source.p(); ++j) {
    IntVec q(b.p());
    for (Index i = 0; i < b.p(); ++i) {
      const Spectrum& s = c.base_fibers[i];
      q(i) = c.source.k(j) *
             (s.base(j) +
              c.source.alpha(j) * count_closed(s.interior, v0.lo, v0.hi) +
              c.source.beta(j) * count_closed(s.interior, vk.lo, vk.hi));
    }
    cert.Q.push_back(q);
  }
  IntVec sum_p_mid = zero_vec(b.p());
  for (Int r = 2; r <= K - 2; ++r) sum_p_mid += cert.P[r.get_si() - 1];
  cert.R = cert.P.front();
  if (K >= 3) cert.R += cert.P.back();
  IntVec sum_q = zero_vec(b.p());
  for (const IntVec& q : cert.Q) sum_q += q;
  cert.q = b.k - sum_p_mid - sum_q;
  cert.nu_unit = sum_p_mid + cert.R;
  cert.rho_unit = sum_q - cert.R;
  IntVec window_mass = zero_vec(b.p());
  for (Int r = 1; r <= K; ++r) {
    Rat lo = Rat(ahat(r)) * eta;
    Rat hi = Rat(bhat(r)) * eta;
    for (Index i = 0; i < b.p(); ++i)
      window_mass(i) += n * count_open(c.base_fibers[i].interior, lo, hi);
  }
  auto add_check = [&cert](const std::string& name, IntVec margin) {
    bool ok = true;
    for (Index i = 0; i < margin.size(); ++i)
      if (margin(i) < 0) ok = false;
    cert.checks.push_back({name, ok, std::move(margin)});
    if (!ok) throw Error("InequalityFailed", name);
  };
  add_check("unit-partition", cert.q + sum_p_mid + sum_q - b.k);
  {
    IntVec neg = b.k - cert.q - sum_p_mid - sum_q;
    add_check("unit-partition-converse", neg);
  }
  add_check("classes-nonnegative-q", cert.q);
  add_check("classes-nonnegative-rho", cert.rho_unit);
  add_check("Q-ge-R", sum_q - cert.R);
  add_check("L-times-q-le-nu", cert.nu_unit - L * cert.q);
  add_check("q-le-window-mass", window_mass - cert.q);
  return cert;
}

}  // namespace etkk
