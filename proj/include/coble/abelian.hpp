#pragma once

#include "coble/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coble {

/// Smith normal form with transformation witnesses: u * m * v == d, where
/// u and v are unimodular, d is diagonal with d_i | d_{i+1} and trailing
/// zeros. The inverses are maintained alongside so that callers can change
/// coordinates in both directions without re-solving.
struct SnfResult {
  IntMat d;
  IntMat u, uInv;  // rows x rows
  IntMat v, vInv;  // cols x cols
  std::vector<Int> divisors;  // nonzero diagonal entries, divisibility chain

  std::size_t rank() const { return divisors.size(); }
};

/// Deterministic SNF: pivot is the smallest nonzero absolute value in the
/// remaining submatrix, ties broken topmost-then-leftmost; negative pivots
/// are normalized by negating the corresponding column of v. Identical
/// input always yields identical witnesses.
SnfResult smithNormalForm(const IntMat& m);

/// Finitely generated abelian group <generators | rows of relations>,
/// normalized to free rank plus torsion coefficients in divisibility order.
/// Class vectors are row vectors of length generators.size(); coordinate
/// queries go through the stored SNF witnesses.
struct PresentedGroup {
  std::vector<std::string> generators;
  IntMat relations;
  std::size_t rank = 0;
  std::vector<Int> torsion;  // elementary divisors > 1
  SnfResult snf;

  std::size_t generatorCount() const { return generators.size(); }

  /// Coordinates of a class in the normalized generator set (x * V).
  IntVec normalizedCoords(const IntVec& x) const;
  /// Coordinates on the free part only (columns with divisor 0).
  IntVec freeCoords(const IntVec& x) const;
  /// Torsion coordinates reduced into [0, d_i).
  IntVec torsionCoords(const IntVec& x) const;
  /// True iff x represents the zero class.
  bool isZeroClass(const IntVec& x) const;
  /// True iff x and y represent the same class.
  bool sameClass(const IntVec& x, const IntVec& y) const;
};

/// Normalizes <generators | relations(rows)>; throws std::invalid_argument
/// when the relation width does not match the generator count.
PresentedGroup presentGroup(std::vector<std::string> generators, IntMat relations);

/// Basis of the integer kernel {x : m * x = 0} (column convention). The
/// kernel of an integer matrix is saturated by construction. Returns the
/// empty list when m is injective.
std::vector<IntVec> kernelBasis(const IntMat& m);

struct SaturationResult {
  std::vector<IntVec> basis;  // basis of the smallest direct summand containing the span
  Int index;                  // index of the input span inside the saturation
};

/// Saturation of the span of the given row vectors inside Z^ambientRank.
SaturationResult saturate(const std::vector<IntVec>& vectors, std::size_t ambientRank);

/// Exact solution of a * x = b. Returns nullopt when the system is
/// inconsistent; throws std::domain_error when it is solvable but the
/// solution is not unique (underdetermined), which is a distinct condition
/// from inconsistency.
std::optional<RatVec> solveRationalLinear(const RatMat& a, const RatVec& b);

/// Canonical Hermite basis of the row lattice spanned by the rows of m:
/// nonzero rows only, pivots positive, entries above each pivot reduced
/// into [0, pivot). Two row sets span the same lattice iff their Hermite
/// bases are equal.
IntMat hermiteRowBasis(const IntMat& m);

/// Hermite basis of the intersection of the two row lattices. The widths
/// must agree (std::invalid_argument otherwise).
IntMat intersectRowLattices(const IntMat& a, const IntMat& b);

/// True iff x lies in the row lattice of basis (any integer combination).
bool inRowLattice(const IntMat& basis, const IntVec& x);

}  // namespace coble
