#pragma once

#include "coble/report.hpp"
#include "coble/surface.hpp"

#include <optional>
#include <vector>

namespace coble {

/// A Coble surface presented through its rational model: the boundary
/// classes beta_i are (-4)-classes, at most ten of them, with mutually
/// even pairings. Those three conditions are structural and violating
/// them is an input error; whether 2K + sum beta_i = 0 holds in Pic is a
/// property that gets reported, not assumed.
struct CobleSurfaceData {
  SurfaceModel surface;
  std::vector<DivisorClass> betas;
};

/// Packs a surface model with its stored boundary classes and validates
/// the structural conditions (std::invalid_argument on violation).
CobleSurfaceData cobleSurfaceData(const SurfaceModel& s);
void validateCobleData(const CobleSurfaceData& data);

/// True iff 2K + sum beta_i = 0 holds on the nose in Pic.
bool anticanonicalBoundary(const CobleSurfaceData& data);

/// Pic extended by the half-boundary classes beta_i / 2, represented
/// integrally: vectors are doubled, so the sublattice 2 Pic + sum Z beta_i
/// of Z^n carries the pairing gram / 4. Rank equals the rank of Pic.
struct ExtendedPicard {
  QuadLattice lattice;  // doubled coordinates, ambient Gram = gram / 4
  Int indexOverPic;     // index of Pic inside the extension
};

ExtendedPicard extendedPicard(const CobleSurfaceData& data);

/// The orthogonal complement of the beta classes inside the extended
/// Picard lattice, saturated there. Same doubled coordinates and ambient
/// Gram as extendedPicard. With no betas this is Pic itself.
QuadLattice cobleMukaiLattice(const CobleSurfaceData& data);

/// The pull-back map in doubled coordinates: x maps to twice its Mumford
/// pull-back, 2x + sum ((x . C_i)/2) C_i when the boundary curves are
/// orthogonal. Defined only on classes pairing evenly with every boundary
/// curve; std::invalid_argument outside that domain.
IntVec phiStarDoubled(const ContractedSurface& c, const IntVec& x);

/// Full report on the identification of Pic of the general fiber with the
/// lattice above: the pull-back maps into it preserving the pairing, is
/// surjective at the lattice level, has kernel exactly the order-two group
/// generated by k, and both sides have the rank-10 even unimodular profile
/// of signature (1,9). Failed identities are reported, never thrown; only
/// mismatched input shapes throw.
VerificationReport verifyCmPicIdentification(const ContractedSurface& c,
                                             const CobleSurfaceData& data,
                                             const DivisorClass& k);

/// Same report without a candidate torsion generator: the order-two check
/// is not applicable and the kernel check verifies structure only.
VerificationReport verifyCmPicIdentification(const ContractedSurface& c,
                                             const CobleSurfaceData& data);

/// Single check: the Mumford Gram matrix of the ten classes is, up to
/// simultaneous permutation, the Cartan-style matrix of the tree T(2,3,7).
/// Exactly ten classes are required (std::invalid_argument otherwise).
CheckResult checkRootBasis(const ContractedSurface& c,
                           const std::vector<DivisorClass>& alphas);

/// Checks f_i^2 = 0 and f_i . f_j = 1 for all pairs under the Mumford
/// pairing; needs at least two classes. When delta is supplied the
/// identity 3 delta = sum f_i is tested in the class group and the exact
/// mismatch vector is recorded on failure; the result documents the
/// outcome rather than asserting it.
std::vector<CheckResult> checkIsotropicSequence(const ContractedSurface& c,
                                                const std::vector<DivisorClass>& fs,
                                                const std::optional<DivisorClass>& delta);

/// Checks around 0 -> Pic(X_t) -> Cl(X) -> (Z/2)^(s-1) -> 0: equal free
/// ranks, surjectivity of the parity map, and image index 2^(s-1) in the
/// free part of Cl.
VerificationReport exactSequenceReport(const ContractedSurface& c);

/// Stamps every check in the report with the given origin tag.
void stampRef(VerificationReport& report, const std::string& ref);

/// Whole-model verification for user-supplied surface descriptions: shape
/// summary, boundary structure, contraction, exact sequence, and the
/// CM/Pic identification. A class literally named "K" is taken as the
/// candidate torsion generator when present. Checks whose prerequisites
/// failed come back not-applicable; every check is stamped with
/// "surface:<name>".
VerificationReport surfaceVerificationReport(const SurfaceModel& model);

}  // namespace coble
