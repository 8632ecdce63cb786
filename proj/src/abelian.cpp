#include "coble/abelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace coble {

namespace {

// Floor division with positive divisor.
Int floorDiv(const Int& a, const Int& p) {
  Int q = a / p;
  if (a % p != 0 && a < 0) --q;
  return q;
}

}  // namespace

SnfResult smithNormalForm(const IntMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfResult r;
  r.d = m;
  r.u = IntMat::identity(rows);
  r.uInv = IntMat::identity(rows);
  r.v = IntMat::identity(cols);
  r.vInv = IntMat::identity(cols);

  auto rowSwap = [&](std::size_t i, std::size_t j) {
    r.d.swapRows(i, j);
    r.u.swapRows(i, j);
    r.uInv.swapCols(i, j);
  };
  auto rowAdd = [&](std::size_t dst, std::size_t src, const Int& f) {
    r.d.addRowMultiple(dst, src, f);
    r.u.addRowMultiple(dst, src, f);
    r.uInv.addColMultiple(src, dst, -f);
  };
  auto colSwap = [&](std::size_t i, std::size_t j) {
    r.d.swapCols(i, j);
    r.v.swapCols(i, j);
    r.vInv.swapRows(i, j);
  };
  auto colAdd = [&](std::size_t dst, std::size_t src, const Int& f) {
    r.d.addColMultiple(dst, src, f);
    r.v.addColMultiple(dst, src, f);
    r.vInv.addRowMultiple(src, dst, -f);
  };
  auto colNegate = [&](std::size_t j) {
    r.d.negateCol(j);
    r.v.negateCol(j);
    r.vInv.negateRow(j);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool done = false;
    while (!done) {
      // Smallest nonzero absolute value in the trailing submatrix,
      // topmost-then-leftmost on ties.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const Int& e = r.d(i, j);
          if (e == 0) continue;
          if (!found || abs(e) < abs(r.d(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) {
        done = true;  // trailing submatrix is zero
        break;
      }
      if (pi != t) rowSwap(pi, t);
      if (pj != t) colSwap(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (r.d(i, t) == 0) continue;
        Int q = r.d(i, t) / r.d(t, t);
        if (q != 0) rowAdd(i, t, -q);
        if (r.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (r.d(t, j) == 0) continue;
        Int q = r.d(t, j) / r.d(t, t);
        if (q != 0) colAdd(j, t, -q);
        if (r.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a strictly smaller pivot now exists

      // Row/column t is clear. Repair the divisibility chain if some
      // remaining entry is not a multiple of the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (r.d(i, j) % r.d(t, t) != 0) {
            rowAdd(t, i, 1);
            fixed = true;
          }
        }
      }
      if (fixed) continue;

      if (r.d(t, t) < 0) colNegate(t);
      break;
    }
    if (done) break;
  }

  for (std::size_t t = 0; t < steps; ++t)
    if (r.d(t, t) != 0) r.divisors.push_back(r.d(t, t));
  return r;
}

IntVec PresentedGroup::normalizedCoords(const IntVec& x) const {
  const std::size_t n = generatorCount();
  if (x.size() != n) throw std::invalid_argument("class vector has wrong length");
  IntVec z(n, Int(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) z[j] += x[i] * snf.v(i, j);
  return z;
}

IntVec PresentedGroup::freeCoords(const IntVec& x) const {
  IntVec z = normalizedCoords(x);
  return IntVec(z.begin() + static_cast<std::ptrdiff_t>(snf.rank()), z.end());
}

IntVec PresentedGroup::torsionCoords(const IntVec& x) const {
  IntVec z = normalizedCoords(x);
  IntVec out;
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    const Int& d = snf.divisors[i];
    if (d > 1) out.push_back(((z[i] % d) + d) % d);
  }
  return out;
}

bool PresentedGroup::isZeroClass(const IntVec& x) const {
  IntVec z = normalizedCoords(x);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i < snf.rank()) {
      if (z[i] % snf.divisors[i] != 0) return false;
    } else if (z[i] != 0) {
      return false;
    }
  }
  return true;
}

bool PresentedGroup::sameClass(const IntVec& x, const IntVec& y) const {
  if (x.size() != y.size()) throw std::invalid_argument("class vectors differ in length");
  IntVec diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return isZeroClass(diff);
}

PresentedGroup presentGroup(std::vector<std::string> generators, IntMat relations) {
  const std::size_t n = generators.size();
  if (relations.rows() == 0) {
    relations = IntMat(0, n);
  } else if (relations.cols() != n) {
    throw std::invalid_argument("relation width does not match generator count");
  }
  PresentedGroup g;
  g.generators = std::move(generators);
  g.relations = relations;
  g.snf = smithNormalForm(relations);
  g.rank = n - g.snf.rank();
  for (const Int& d : g.snf.divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::vector<IntVec> kernelBasis(const IntMat& m) {
  SnfResult s = smithNormalForm(m);
  std::vector<IntVec> basis;
  for (std::size_t j = s.rank(); j < m.cols(); ++j) basis.push_back(s.v.col(j));
  return basis;
}

SaturationResult saturate(const std::vector<IntVec>& vectors, std::size_t ambientRank) {
  for (const IntVec& v : vectors)
    if (v.size() != ambientRank)
      throw std::invalid_argument("vector length does not match ambient rank");
  IntMat b(vectors.size(), ambientRank);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambientRank; ++j) b(i, j) = vectors[i][j];
  SnfResult s = smithNormalForm(b);
  SaturationResult out;
  out.index = 1;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    out.basis.push_back(s.vInv.row(i));
    out.index *= s.divisors[i];
  }
  return out;
}

std::optional<RatVec> solveRationalLinear(const RatMat& a, const RatVec& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("right-hand side has wrong length");
  RatMat w = a;
  RatVec rhs = b;

  std::vector<std::size_t> pivotCols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && w(pr, col) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != row) {
      w.swapRows(pr, row);
      std::swap(rhs[pr], rhs[row]);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || w(i, col) == 0) continue;
      Rat f = w(i, col) / w(row, col);
      for (std::size_t j = col; j < cols; ++j) w(i, j) -= f * w(row, j);
      rhs[i] -= f * rhs[row];
    }
    pivotCols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  if (pivotCols.size() < cols)
    throw std::domain_error("linear system is underdetermined");

  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivotCols.size(); ++i)
    x[pivotCols[i]] = rhs[i] / w(i, pivotCols[i]);
  return x;
}

IntMat hermiteRowBasis(const IntMat& m) {
  IntMat w = m;
  const std::size_t rows = w.rows(), cols = w.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on the column below row r until a single nonzero survives.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (w(i, c) == 0) continue;
        if (best == rows || abs(w(i, c)) < abs(w(best, c))) best = i;
      }
      if (best == rows) break;  // column is zero from row r down
      if (best != r) w.swapRows(best, r);
      bool reduced = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (w(i, c) == 0) continue;
        Int q = w(i, c) / w(r, c);
        if (q != 0) w.addRowMultiple(i, r, -q);
        if (w(i, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (w(r, c) == 0) continue;
    if (w(r, c) < 0) w.negateRow(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floorDiv(w(i, c), w(r, c));
      if (q != 0) w.addRowMultiple(i, r, -q);
    }
    ++r;
  }
  IntMat out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = w(i, j);
  return out;
}

bool inRowLattice(const IntMat& basis, const IntVec& x) {
  if (x.size() != basis.cols()) throw std::invalid_argument("vector length does not match lattice");
  IntMat h = hermiteRowBasis(basis);
  IntVec rest = x;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) continue;
    if (rest[p] % h(i, p) != 0) return false;
    Int q = rest[p] / h(i, p);
    for (std::size_t j = 0; j < h.cols(); ++j) rest[j] -= q * h(i, j);
  }
  for (const Int& e : rest)
    if (e != 0) return false;
  return true;
}

IntMat intersectRowLattices(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("ambient widths differ");
  const std::size_t n = a.cols(), p = a.rows(), q = b.rows();
  // x = u a = v b for integer u, v; the pairs (u, v) form the kernel of
  // the column map (u, v) -> (u a - v b)^T.
  IntMat m(n, p + q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) m(i, j) = a(j, i);
    for (std::size_t j = 0; j < q; ++j) m(i, p + j) = -b(j, i);
  }
  std::vector<IntVec> rows;
  for (const IntVec& w : kernelBasis(m)) {
    IntVec x(n, Int(0));
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t t = 0; t < n; ++t) x[t] += w[j] * a(j, t);
    rows.push_back(x);
  }
  if (rows.empty()) return IntMat(0, n);
  return hermiteRowBasis(IntMat::fromRows(rows));
}

}  // namespace coble
