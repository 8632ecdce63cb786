#pragma once

#include "coble/abelian.hpp"
#include "coble/qlattice.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coble {

/// Class in the Picard group of a fixed surface model, written in that
/// model's basis. Coefficients are rational because Mumford pull-backs
/// land in (1/4)Z here; classes only combine within one surface.
struct DivisorClass {
  std::string surfaceName;
  RatVec coeffs;

  bool isIntegral() const;
  /// Integer coefficients; throws std::invalid_argument when not integral.
  IntVec integralCoeffs() const;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Rat& f, const DivisorClass& a);

/// A smooth rational surface presented by an ordered basis of Pic with an
/// integral Gram matrix, a canonical class, named classes, and an ordered
/// list of boundary curves (the classes to be contracted, in chain order).
/// This is lattice bookkeeping only: no effectivity or curve-existence
/// checking is attempted.
struct SurfaceModel {
  std::string name;
  std::vector<std::string> basisLabels;
  IntMat gram;
  DivisorClass canonical;
  std::map<std::string, DivisorClass> classes;
  std::vector<std::string> boundaryOrder;  // names into `classes`

  std::size_t rank() const { return basisLabels.size(); }
  std::size_t basisIndex(const std::string& label) const;  // throws on unknown label
  DivisorClass basisClass(const std::string& label) const;
  DivisorClass zeroClass() const;
  DivisorClass namedClass(const std::string& name) const;  // throws on unknown name
  std::vector<DivisorClass> boundaryClasses() const;
  Rat pairing(const DivisorClass& a, const DivisorClass& b) const;
};

/// P^2: rank 1, basis [H], H^2 = 1, K = -3H.
SurfaceModel projectivePlane();

/// Blow-up at a point: appends a fresh exceptional label E with E^2 = -1,
/// orthogonal to the old basis; K' = K + E. Named classes and boundary
/// carry over by total transform (zero coefficient on E). Throws on a
/// duplicate label.
SurfaceModel blowUpPoint(const SurfaceModel& s, const std::string& label);

/// Same model under a new name; every stored class is re-tagged.
SurfaceModel renamed(const SurfaceModel& s, const std::string& name);

/// D minus the assigned multiples of exceptional classes: the proper
/// transform of a curve of class D with the given multiplicities at the
/// blown-up points. Throws on unknown labels.
DivisorClass properTransform(const SurfaceModel& s, const DivisorClass& d,
                             const std::vector<std::pair<std::string, Int>>& assignments);

/// The surface obtained by contracting the boundary chain, carrying
/// Cl = Pic(source)/<boundary> and the cached boundary Gram matrix.
/// Divisor classes "on" the contraction stay written in the source basis.
struct ContractedSurface {
  SurfaceModel source;
  PresentedGroup classGroup;  // generators = source basis, relations = boundary
  IntMat boundaryRows;        // boundary classes as rows, source coordinates
  RatMat boundaryGram;        // negative definite

  std::size_t sourceRank() const { return source.rank(); }
  std::size_t boundaryCount() const { return boundaryRows.rows(); }

  /// Integral classes in the source basis whose images form a basis of the
  /// free part of Cl (rows of V^-1 at the free columns of the SNF).
  std::vector<IntVec> freeBasisLifts() const;
};

/// Contracts the boundary. Throws std::invalid_argument when the boundary
/// is empty, a boundary class is not integral, or the boundary Gram is not
/// negative definite (Mumford coefficients would not be unique).
ContractedSurface contract(const SurfaceModel& s);

/// Pull-back D + sum mu_i C_i orthogonal to every boundary curve; the
/// mu_i are the unique exact rational solution of the boundary system.
RatVec mumfordPullbackCoeffs(const ContractedSurface& c, const RatVec& d);
DivisorClass mumfordPullback(const ContractedSurface& c, const DivisorClass& d);

/// Mumford intersection number of two classes given by representatives in
/// the source basis. Computed via the pull-back of each argument in turn;
/// the two results are asserted equal (std::logic_error on mismatch).
Rat mumfordPairing(const ContractedSurface& c, const RatVec& d, const RatVec& f);
Rat mumfordPairing(const ContractedSurface& c, const DivisorClass& d, const DivisorClass& f);

/// Parities (D . C_i) mod 2 for the first s-1 boundary curves. Requires an
/// integral class. Also requires the parity data to descend to Cl: all
/// boundary mutual/self pairings even, and the parity against the last
/// curve determined by the others (sum of the boundary classes coefficient-
/// wise even, which holds whenever the boundary is -2K). Violations are
/// input errors (std::invalid_argument).
std::vector<int> parityVector(const ContractedSurface& c, const DivisorClass& d);
std::vector<int> parityVector(const ContractedSurface& c, const IntVec& d);

/// Picard group of the general fiber of the Q-Gorenstein smoothing:
/// integral classes with even pairing against the boundary, modulo the
/// boundary classes themselves.
struct FiberPicard {
  std::vector<IntVec> evenBasis;  // basis of {x : x.C_i even, i < s}, source coords
  PresentedGroup quotient;        // that sublattice mod all boundary classes
  Int freeImageIndex;             // index of its image in the free part of Cl
  QuadLattice lattice;            // the image, with the Mumford form as ambient Gram
};

/// Computes FiberPicard and verifies the index of the image in the free
/// part of Cl equals 2^(s-1). Same input-error conditions as parityVector.
FiberPicard picardOfGeneralFiber(const ContractedSurface& c);

}  // namespace coble
