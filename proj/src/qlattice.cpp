#include "coble/qlattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace coble {

RatMat QuadLattice::gram() const {
  const std::size_t k = basisRows.rows(), n = basisRows.cols();
  if (n != ambientGram.rows() || !ambientGram.isSymmetric())
    throw std::invalid_argument("lattice basis does not match ambient form");
  RatMat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rat s(0);
      for (std::size_t a = 0; a < n; ++a) {
        if (basisRows(i, a) == 0) continue;
        for (std::size_t b = 0; b < n; ++b)
          s += Rat(basisRows(i, a)) * ambientGram(a, b) * Rat(basisRows(j, b));
      }
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

Rat detRat(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMat w = m;
  const std::size_t n = w.rows();
  Rat det(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i;
    while (p < n && w(p, i) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != i) {
      w.swapRows(p, i);
      det = -det;
    }
    det *= w(i, i);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (w(r, i) == 0) continue;
      Rat f = w(r, i) / w(i, i);
      for (std::size_t c = i; c < n; ++c) w(r, c) -= f * w(i, c);
    }
  }
  return det;
}

LatticeProfile profile(const RatMat& gram) {
  if (!gram.isSymmetric()) throw std::invalid_argument("profile of non-symmetric matrix");
  const std::size_t n = gram.rows();
  RatMat g = gram;

  // Simultaneous row/column operations preserve the congruence class.
  auto symSwap = [&](std::size_t a, std::size_t b) {
    g.swapRows(a, b);
    g.swapCols(a, b);
  };
  auto symAdd = [&](std::size_t dst, std::size_t src, const Rat& f) {
    g.addRowMultiple(dst, src, f);
    g.addColMultiple(dst, src, f);
  };

  LatticeProfile out;
  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i) == 0) {
      std::size_t k = i + 1;
      while (k < n && g(k, k) == 0) ++k;
      if (k < n) {
        symSwap(i, k);
      } else {
        // All remaining diagonal entries vanish; look for an off-diagonal
        // pairing and fold it onto the diagonal.
        std::size_t a = n, b = n;
        for (std::size_t r = i; r < n && a == n; ++r)
          for (std::size_t c = r + 1; c < n; ++c)
            if (g(r, c) != 0) {
              a = r;
              b = c;
              break;
            }
        if (a == n) {
          out.zero += n - i;
          break;
        }
        if (a != i) symSwap(a, i);
        // b may have moved if it collided with i, but b > a >= previous i
        // and symSwap(a, i) only touches indices a and i, with b > a.
        symAdd(i, b == i ? a : b, Rat(1));
      }
    }
    const Rat& d = g(i, i);
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (g(r, i) == 0) continue;
      symAdd(r, i, -g(r, i) / d);
    }
  }
  out.rank = out.positive + out.negative;
  out.discriminant = detRat(gram);

  bool integral = true;
  for (std::size_t i = 0; i < n && integral; ++i)
    for (std::size_t j = 0; j < n && integral; ++j)
      if (!isInteger(gram(i, j))) integral = false;
  if (integral) {
    bool even = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!isEvenInteger(gram(i, i))) even = false;
    out.even = even;
  }
  return out;
}

LatticeProfile profile(const QuadLattice& l) { return profile(l.gram()); }

std::vector<IntVec> orthogonalComplement(const RatMat& gram,
                                         const std::vector<IntVec>& vectors) {
  const std::size_t n = gram.rows();
  if (!gram.isSymmetric()) throw std::invalid_argument("orthogonalComplement: non-symmetric form");
  // Row i of the constraint matrix is v_i * gram, cleared of denominators.
  RatMat c(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n)
      throw std::invalid_argument("orthogonalComplement: vector length mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      Rat s(0);
      for (std::size_t a = 0; a < n; ++a) s += Rat(vectors[i][a]) * gram(a, j);
      c(i, j) = s;
    }
  }
  IntMat ci(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Int m = 1;
    for (std::size_t j = 0; j < n; ++j) m = lcm(m, denominator(c(i, j)));
    for (std::size_t j = 0; j < n; ++j) ci(i, j) = numerator(c(i, j) * Rat(m));
  }
  return kernelBasis(ci);
}

bool isEnriquesLattice(const RatMat& gram) {
  LatticeProfile p = profile(gram);
  return p.rank == 10 && p.signatureIs(1, 9) && abs(numerator(p.discriminant)) == 1 &&
         denominator(p.discriminant) == 1 && p.even.has_value() && *p.even;
}

bool isEnriquesLattice(const QuadLattice& l) { return isEnriquesLattice(l.gram()); }

IntMat treeAdjacency(unsigned p, unsigned q, unsigned r) {
  if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("tree arms need p,q,r >= 2");
  const std::size_t n = static_cast<std::size_t>(p) + q + r - 2;
  IntMat a(n, n);
  std::size_t next = 1;
  for (unsigned arm : {p - 1, q - 1, r - 1}) {
    std::size_t prev = 0;  // center
    for (unsigned s = 0; s < arm; ++s) {
      a(prev, next) = 1;
      a(next, prev) = 1;
      prev = next++;
    }
  }
  return a;
}

IntMat treeCartan(unsigned p, unsigned q, unsigned r) {
  IntMat g = treeAdjacency(p, q, r);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) = -2;
  return g;
}

namespace {

std::vector<std::size_t> degrees(const IntMat& a) {
  std::vector<std::size_t> d(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) ++d[i];
  return d;
}

bool extendIso(const IntMat& a, const IntMat& b, const std::vector<std::size_t>& da,
               const std::vector<std::size_t>& db, std::vector<std::size_t>& map,
               std::vector<bool>& used, std::size_t v) {
  const std::size_t n = a.rows();
  if (v == n) return true;
  for (std::size_t u = 0; u < n; ++u) {
    if (used[u] || da[v] != db[u]) continue;
    bool ok = true;
    for (std::size_t w = 0; w < v && ok; ++w)
      if (a(v, w) != b(map[w], u)) ok = false;
    if (!ok) continue;
    map[v] = u;
    used[u] = true;
    if (extendIso(a, b, da, db, map, used, v + 1)) return true;
    used[u] = false;
  }
  return false;
}

}  // namespace

bool graphsIsomorphic(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return false;
  std::vector<std::size_t> da = degrees(a), db = degrees(b);
  std::vector<std::size_t> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<std::size_t> map(a.rows(), 0);
  std::vector<bool> used(a.rows(), false);
  return extendIso(a, b, da, db, map, used, 0);
}

bool matchesTreeCartan(const RatMat& gram, unsigned p, unsigned q, unsigned r) {
  const std::size_t n = static_cast<std::size_t>(p) + q + r - 2;
  if (gram.rows() != n || gram.cols() != n || !gram.isSymmetric()) return false;
  IntMat adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i) != Rat(-2)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gram(i, j) == Rat(1))
        adj(i, j) = 1;
      else if (gram(i, j) != Rat(0))
        return false;
    }
  }
  return graphsIsomorphic(adj, treeAdjacency(p, q, r));
}

}  // namespace coble
