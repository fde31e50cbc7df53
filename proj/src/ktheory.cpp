#include "etkk/ktheory.hpp"

namespace etkk {

KTheoryData compute_ktheory(const Block& a) {
  KTheoryData kt;
  IntRow d = a.index_row();
  IntMat row(1, a.p());
  row.row(0) = d;
  kt.k0_basis = integer_kernel(row);
  kt.k0_rank = kt.k0_basis.rows();
  if (a.kind == BlockKind::FiniteDim) {
    kt.k1 = K1Group{K1Kind::Cyclic, 1};  // trivial
  } else {
    Int g = content(d);
    if (g == 0)
      kt.k1 = K1Group{K1Kind::FreeZ, 0};
    else
      kt.k1 = K1Group{K1Kind::Cyclic, g};
  }
  kt.unit_class = a.k;
  return kt;
}

bool k0_contains(const Block& a, const IntVec& v) {
  if (v.size() != a.p())
    throw Error("DimensionMismatch", "vector length != p");
  return (a.index_row() * v)(0) == 0;
}

bool k0_positive_contains(const Block& a, const IntVec& v) {
  if (!k0_contains(a, v)) return false;
  for (Index j = 0; j < v.size(); ++j)
    if (v(j) < 0) return false;
  return true;
}

}  // namespace etkk
