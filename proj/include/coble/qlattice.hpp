#pragma once

#include "coble/abelian.hpp"

#include <optional>
#include <vector>

namespace coble {

/// Exact invariants of a symmetric bilinear form.
struct LatticeProfile {
  std::size_t rank = 0;      // rank of the form
  std::size_t positive = 0;  // inertia indices over Q
  std::size_t negative = 0;
  std::size_t zero = 0;
  Rat discriminant = Rat(0);  // exact determinant of the Gram matrix
  std::optional<bool> even;   // set only when the Gram matrix is integral

  bool signatureIs(std::size_t pos, std::size_t neg) const {
    return positive == pos && negative == neg && zero == 0;
  }
};

/// Sublattice of Z^n carrying the restriction of an ambient pairing.
/// Basis vectors are rows, written in ambient coordinates. The ambient
/// Gram matrix may be rational: intersection numbers on the partial
/// resolutions used here live in (1/4)Z.
struct QuadLattice {
  RatMat ambientGram;
  IntMat basisRows;

  std::size_t rank() const { return basisRows.rows(); }
  /// Gram matrix of the basis: B * ambientGram * B^T.
  RatMat gram() const;
};

/// Exact determinant by fraction-free Gaussian elimination.
Rat detRat(const RatMat& m);

/// Inertia, discriminant and parity via congruence diagonalization.
/// Throws std::invalid_argument when the matrix is not symmetric.
LatticeProfile profile(const RatMat& gram);
LatticeProfile profile(const QuadLattice& l);

/// Basis of {x in Z^n : <x, v> = 0 for all given v} under gram. The result
/// is a saturated sublattice (it is an integer kernel).
std::vector<IntVec> orthogonalComplement(const RatMat& gram,
                                         const std::vector<IntVec>& vectors);

/// A lattice is recognized here purely by its profile: rank 10, even,
/// discriminant of absolute value 1, signature (1,9). An even unimodular
/// lattice of signature (1,9) is unique up to isometry, so the profile
/// determines the isometry class.
bool isEnriquesLattice(const RatMat& gram);
bool isEnriquesLattice(const QuadLattice& l);

/// Adjacency matrix (0/1 entries) of the tree T_{p,q,r}: a central node
/// with three chains of p-1, q-1 and r-1 further nodes. p+q+r-2 nodes.
IntMat treeAdjacency(unsigned p, unsigned q, unsigned r);

/// Cartan-style Gram matrix of T_{p,q,r}: diagonal -2, adjacent pairs 1.
IntMat treeCartan(unsigned p, unsigned q, unsigned r);

/// Exact graph isomorphism on 0/1 adjacency matrices (backtracking with
/// degree pruning; the graphs here have at most a dozen or so nodes).
bool graphsIsomorphic(const IntMat& a, const IntMat& b);

/// True iff gram is, after simultaneous row/column permutation, the
/// Cartan-style matrix of T_{p,q,r}.
bool matchesTreeCartan(const RatMat& gram, unsigned p, unsigned q, unsigned r);

}  // namespace coble
