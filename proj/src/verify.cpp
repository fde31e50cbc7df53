#include "etkk/verify.hpp"

#include "etkk/kkcalc.hpp"
#include "etkk/ktheory.hpp"
#include "etkk/lifting.hpp"

#include <functional>

namespace etkk {

namespace {

constexpr int kSlotCount = 12;

IntVec vec(std::initializer_list<Int> xs) {
  IntVec v(Index(xs.size()));
  Index i = 0;
  for (const Int& x : xs) v(i++) = x;
  return v;
}

IntMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  Index r = Index(rows.size());
  Index c = r > 0 ? Index(rows.begin()->size()) : 0;
  IntMat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Int& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

bool diagrams_equal(const Diagram& a, const Diagram& b) {
  return a.same_shape(b) && is_zero(IntMat(a.lambda0 - b.lambda0)) &&
         a.lambda1 == b.lambda1;
}

struct Ctx {
  int mutation = -1;
  // Embedded constant, perturbed by +1 when its slot is active.
  Int c(int slot, long v) const { return Int(v + (mutation == slot ? 1 : 0)); }
};

CaseResult run_case(const std::string& name, const std::function<void()>& body) {
  CaseResult r;
  r.name = name;
  try {
    body();
    r.pass = true;
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string(e.code()) + ": " + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("CaseFailed", what);
}

void case_unique_positive_class(const Ctx& cx) {
  Block a = make_interval_block(vec({1, 1, 1, 1, 1}), 3,
                                vec({cx.c(0, 1), 1, 0, 0, 1}),
                                vec({0, 0, 1, 1, 1}));
  Block b = make_interval_block(vec({1, 1, 1, 1}), 2, vec({1, 1, 0, 0}),
                                vec({0, 0, cx.c(1, 1), 1}));
  Diagram lam = diagram_validate(a, b,
                                 mat({{cx.c(2, 1), 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0},
                                      {0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 0}}),
                                 cx.c(3, 1));
  require(is_positive(lam), "representative is positive");
  require(preserves_order(lam), "representative preserves the order");
  IntVec e = vec({0, 0, 0, 0, 1});
  require(is_zero(apply_to_k0(lam, e)), "minimal class maps to zero");
  auto reps = enumerate_positive_reps(lam);
  auto* list = std::get_if<std::vector<Diagram>>(&reps);
  require(list != nullptr, "representative box is finite");
  require(list->size() == 1 && diagrams_equal((*list)[0], lam),
          "positive representative is unique");
  require(lift_d0(lam).status == LiftStatus::Unknown,
          "row criterion stays inconclusive");
  require(lift_suff(lam).status == LiftStatus::Unknown,
          "endpoint-sum criterion stays inconclusive");
  Diagram eps = diagram_validate(canonical_circle(), a,
                                 mat({{0}, {0}, {0}, {0}, {1}}), 1);
  Diagram comp = compose(eps, lam);
  auto w = in_M(comp);
  require(w.has_value(), "circle composite lies in the trivial subgroup");
  IntVec expected_mu = vec({cx.c(4, 1), 0, 0, 0});
  require(is_zero(IntVec(w->mu - expected_mu)),
          "factoring vector is (1,0,0,0)");
}

void case_nonliftable_circle_class(const Ctx& cx) {
  Block a = make_interval_block(vec({1, 1, 1, 1, 1}), 5,
                                vec({cx.c(5, 2), 2, 0, 0, 1}),
                                vec({0, 0, 2, 2, 1}));
  Block b = make_interval_block(vec({1, 1, 1, 1}), 4, vec({2, 2, 0, 0}),
                                vec({0, 0, 2, 2}));
  KTheoryData kta = compute_ktheory(a);
  KTheoryData ktb = compute_ktheory(b);
  require(kta.k1.kind == K1Kind::Cyclic && kta.k1.order == 2,
          "source K1 is Z/2");
  require(ktb.k1.kind == K1Kind::Cyclic && ktb.k1.order == 2,
          "target K1 is Z/2");
  Diagram del = diagram_validate(a, b,
                                 mat({{1, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0},
                                      {0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 0}}),
                                 1);
  Diagram zeta = diagram_validate(canonical_circle(), a,
                                  mat({{0}, {0}, {0}, {0}, {1}}), 1);
  Diagram comp = compose(zeta, del);
  require(is_zero(comp.lambda0), "composite has zero matrix part");
  require(comp.lambda1 == cx.c(6, 1), "composite has unit twist part");
  require(!in_M(comp).has_value(), "composite is not trivial (1 not in 2Z)");
  require(!positive_mod_M(comp).has_value(),
          "composite class has no positive representative");
  require(decide_lift(comp).status == LiftStatus::NotLiftable,
          "circle-source class is certified non-liftable");
}

void case_dimension_drop_rigidity(const Ctx& cx) {
  Block point = make_finite_dim_block(vec({1}));
  for (long q = 2; q <= 7; ++q) {
    Block dd = canonical_dimension_drop(q);
    Diagram d1 = diagram_validate(dd, point, mat({{1, 0}}), 0);
    Diagram d2 = diagram_validate(dd, point, mat({{0, 1}}), 0);
    require(!kk_equal(d1, d2),
            "endpoint evaluations differ in KK at q=" + std::to_string(q));
    Diagram diff = subtract(d1, d2);
    IntVec unit = vec({cx.c(7, 1), 1});
    require(is_zero(apply_to_k0(diff, unit)),
            "difference kills the unit at q=" + std::to_string(q));
  }
}

void case_stably_equal_evaluations(const Ctx& cx) {
  Block a = make_interval_block(vec({1, 1}), 2, vec({2, 0}), vec({1, 1}));
  Block point = make_finite_dim_block(vec({1}));
  Diagram d1 = diagram_validate(a, point, mat({{cx.c(8, 1), 0}}), 0);
  Diagram d2 = diagram_validate(a, point, mat({{0, 1}}), 0);
  require(kk_equal(d1, d2), "the two evaluations are KK-equal");
  auto w = in_M(subtract(d1, d2));
  require(w.has_value() && w->mu.size() == 1 && w->mu(0) == 1,
          "difference factors with mu = (1)");
}

void case_generator_family(const Ctx& cx) {
  Block a = make_interval_block(vec({1, 1, 1, 1, 1}), 3, vec({1, 1, 0, 0, 1}),
                                vec({0, 0, 1, 1, 1}));
  auto gens = order_generators(a);
  Int dd = 0, circ = 0;
  for (const auto& g : gens) {
    require(is_positive(g.diagram), "generator diagram is positive");
    diagram_validate(g.source, g.diagram.target, g.diagram.lambda0,
                     g.diagram.lambda1);
    if (g.source.p() == 2)
      ++dd;
    else
      ++circ;
  }
  require(dd == cx.c(9, 4) && circ == 1,
          "four dimension-drop generators and one circle generator");
  auto gens2 = order_generators(canonical_dimension_drop(2));
  require(gens2.size() == 1, "one generator for the order-2 block");
  require(gens2[0].source.n == cx.c(10, 4), "generator source has fiber 4");
  IntMat expected = mat({{cx.c(11, 2), 0}, {0, 2}});
  require(is_zero(IntMat(gens2[0].diagram.lambda0 - expected)),
          "generator matrix is diag(2, 2)");
}

}  // namespace

int mutation_slot_count() { return kSlotCount; }

VerifyReport verify_paper(int mutation) {
  Ctx cx{mutation};
  VerifyReport rep;
  rep.cases.push_back(run_case("unique-positive-class",
                               [&] { case_unique_positive_class(cx); }));
  rep.cases.push_back(run_case("nonliftable-circle-class",
                               [&] { case_nonliftable_circle_class(cx); }));
  rep.cases.push_back(run_case("dimension-drop-rigidity",
                               [&] { case_dimension_drop_rigidity(cx); }));
  rep.cases.push_back(run_case("stably-equal-evaluations",
                               [&] { case_stably_equal_evaluations(cx); }));
  rep.cases.push_back(
      run_case("generator-family", [&] { case_generator_family(cx); }));
  rep.all_pass = true;
  for (const CaseResult& c : rep.cases)
    if (!c.pass) rep.all_pass = false;
  return rep;
}

}  // namespace etkk
