#pragma once

#include "coble/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coble {

/// Hirzebruch-Jung continued fraction [b1,...,bk], every entry >= 2,
/// standing for b1 - 1/(b2 - 1/(...)).
using HJChain = std::vector<Int>;

/// Fraction n/a with 0 < a < n and gcd(n,a) = 1. Depending on context this
/// is either the fraction expanded by a chain or the (n,a) parameter pair
/// of a Wahl singularity 1/n^2(1, na-1).
struct CyclicQuotient {
  Int n, a;
  bool operator==(const CyclicQuotient&) const = default;
};

/// Parameters of a T-singularity 1/(d n^2)(1, d n a - 1); d = 1 is the
/// Wahl case.
struct TParams {
  Int d, n, a;
  bool operator==(const TParams&) const = default;
};

/// Expansion of n/a; throws std::invalid_argument unless 0 < a < n with
/// gcd(n,a) = 1. Entries are >= 2 and the expansion is unique.
HJChain hjExpand(const Int& n, const Int& a);

/// Exact value of a chain as a reduced fraction. Throws
/// std::invalid_argument for an empty chain or entries < 2.
Rat hjEvaluate(const HJChain& chain);

/// (n,a) such that the chain's value is n^2/(na-1), if any.
std::optional<CyclicQuotient> isWahl(const HJChain& chain);

/// (d,n,a) such that the chain's value is dn^2/(dna-1) with n >= 2,
/// 0 < a < n, gcd(n,a) = 1, if any. Such parameters are unique.
std::optional<TParams> isTChain(const HJChain& chain);

/// The length-s chain contracted in the one-parameter degenerations:
/// [4] for s = 1 and [3, 2 x (s-2), 3] for s >= 2; its value is
/// 4s/(2s-1). Throws for s < 1.
HJChain tChainFromS(int s);

/// k-th member of the Wahl chain family [4], [2,2,6], [2,2,2,2,8], ...:
/// (2k-2) twos followed by 2k+2. Throws for k < 1.
HJChain wahlFamilyChain(int k);

/// Rank of the second homology of the Milnor fiber of the induced
/// smoothing of 1/(4s)(1, 2s-1): s - 1. Throws for s < 1.
int milnorRank(int s);

/// One singular point of a degenerate surface: an ADE point or a
/// T-singularity recorded by its fraction n/a (order n, weight a).
struct SingPart {
  bool isT = false;
  char family = 'A';    // ADE family when !isT
  unsigned rank = 0;    // ADE subscript when !isT
  CyclicQuotient frac;  // 1/n(1,a) when isT

  bool operator==(const SingPart&) const = default;
  std::string str() const;  // "A9", "D8", "1/8(1,3)"
};

struct SingConfiguration {
  std::vector<SingPart> parts;
  unsigned droppedSmooth = 0;  // A0 entries removed from the raw recipe

  bool operator==(const SingConfiguration& o) const { return parts == o.parts; }
  std::string str() const;  // "{A1}", "{1/8(1,3), A2}", "{}"
};

/// Partitions of s in descending lexicographic order, parts descending.
std::vector<std::vector<int>> partitionsOf(int s);

/// For every partition (e1 >= ... >= er) of s, the two admissible
/// configurations: A_{e1-1},...,A_{er-1} and 1/4e1(1,2e1-1),
/// A_{e2-1},...,A_{er-1}. A0 entries are dropped as smooth points (count
/// kept in droppedSmooth), exact duplicates removed, order following the
/// partition list. Throws unless 1 <= s <= 10.
std::vector<SingConfiguration> admissibleDegenerations(int s);

/// Splits "D8+A1" or "3A3" into single ADE names ("D8", "A3" thrice).
std::vector<std::string> parseAdeConfiguration(const std::string& text);

/// Sum of ranks of the named ADE types (An -> n, Dn -> n, E6/E7/E8).
/// Throws std::invalid_argument on anything else.
int rootConfigurationRank(const std::vector<std::string>& types);

}  // namespace coble
