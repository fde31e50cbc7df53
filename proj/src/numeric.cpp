#include "etkk/numeric.hpp"

#include <algorithm>

namespace etkk {

Int content(const IntRow& v) {
  Int g = 0;
  for (Index j = 0; j < v.cols(); ++j) g = gcd(g, v(j));
  return g;
}

IntMat hermite_rows(IntMat m) {
  const Index rows = m.rows(), cols = m.cols();
  Index pivot_row = 0;
  for (Index col = 0; col < cols && pivot_row < rows; ++col) {
    // Clear the column below pivot_row by gcd row combinations.
    Index nz = -1;
    for (Index i = pivot_row; i < rows; ++i)
      if (m(i, col) != 0) {
        nz = i;
        break;
      }
    if (nz < 0) continue;
    m.row(pivot_row).swap(m.row(nz));
    for (Index i = pivot_row + 1; i < rows; ++i) {
      while (m(i, col) != 0) {
        Int q = floor_div(m(pivot_row, col), m(i, col));
        if (q != 0) m.row(pivot_row) -= q * m.row(i);
        m.row(pivot_row).swap(m.row(i));
        if (m(i, col) == 0) break;
      }
    }
    if (m(pivot_row, col) < 0) m.row(pivot_row) = -m.row(pivot_row);
    // Reduce entries above the pivot into [0, pivot).
    for (Index i = 0; i < pivot_row; ++i) {
      Int q = floor_div(m(i, col), m(pivot_row, col));
      if (q != 0) m.row(i) -= q * m.row(pivot_row);
    }
    ++pivot_row;
  }
  // Drop zero rows.
  IntMat out(pivot_row, cols);
  Index k = 0;
  for (Index i = 0; i < rows && k < pivot_row; ++i) {
    bool zero = true;
    for (Index j = 0; j < cols; ++j)
      if (m(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) out.row(k++) = m.row(i);
  }
  return out.topRows(k);
}

IntMat integer_kernel(const IntMat& m) {
  const Index rows = m.rows(), cols = m.cols();
  // Column-reduce [m; I]; kernel vectors appear under zeroed m-columns.
  IntMat work(rows + cols, cols);
  work.topRows(rows) = m;
  work.bottomRows(cols) = IntMat::Identity(cols, cols);
  Index pivot_col = 0;
  for (Index row = 0; row < rows && pivot_col < cols; ++row) {
    Index nz = -1;
    for (Index j = pivot_col; j < cols; ++j)
      if (work(row, j) != 0) {
        nz = j;
        break;
      }
    if (nz < 0) continue;
    work.col(pivot_col).swap(work.col(nz));
    for (Index j = pivot_col + 1; j < cols; ++j) {
      while (work(row, j) != 0) {
        Int q = floor_div(work(row, pivot_col), work(row, j));
        if (q != 0) work.col(pivot_col) -= q * work.col(j);
        work.col(pivot_col).swap(work.col(j));
        if (work(row, j) == 0) break;
      }
    }
    ++pivot_col;
  }
  const Index dim = cols - pivot_col;
  IntMat basis(dim, cols);
  for (Index j = 0; j < dim; ++j)
    basis.row(j) = work.col(pivot_col + j).tail(cols).transpose();
  return hermite_rows(std::move(basis));
}

bool in_row_span(const IntMat& hermite, const IntRow& v) {
  IntRow r = v;
  for (Index i = 0; i < hermite.rows(); ++i) {
    Index pc = -1;
    for (Index j = 0; j < hermite.cols(); ++j)
      if (hermite(i, j) != 0) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    if (r(pc) % hermite(i, pc) != 0) return false;
    Int q = r(pc) / hermite(i, pc);
    if (q != 0) r -= q * hermite.row(i);
  }
  for (Index j = 0; j < r.cols(); ++j)
    if (r(j) != 0) return false;
  return true;
}

std::optional<IntVec> solve_dot(const IntRow& row, const Int& rhs) {
  const Index n = row.cols();
  IntVec mu = zero_vec(n);
  Int g = 0;
  for (Index j = 0; j < n; ++j) {
    if (row(j) == 0) continue;
    Int g2 = gcd(g, row(j));
    if (g != 0 && g2 == g) continue;  // no strict improvement; keep mu sparse
    Int s, t;
    Int g3 = gcdext(g, row(j), s, t);
    mu *= s;
    mu(j) = t;
    g = g3;
    if (g == 1) break;
  }
  if (g == 0) {
    if (rhs == 0) return mu;
    return std::nullopt;
  }
  if (rhs % g != 0) return std::nullopt;
  mu *= rhs / g;
  return mu;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty integer literal");
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw Error("ParseError", "bad integer literal '" + s + "'");
  }
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Int num = parse_int(digits);
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  return Rat(parse_int(s));
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace etkk
