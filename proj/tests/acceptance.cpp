// Acceptance gate: ten end-to-end criteria, one line each, exit 0 only
// when every one holds with exact equality.

#include "coble/enriques.hpp"
#include "coble/scenarios.hpp"
#include "coble/singular.hpp"
#include "coble/surface.hpp"

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace coble;

int failures = 0;

void criterion(int number, const std::string& label, bool ok) {
  std::cout << (ok ? "[pass]" : "[FAIL]") << " criterion " << number << ": " << label
            << "\n";
  if (!ok) ++failures;
}

const CheckResult* findCheck(const VerificationReport& report, const std::string& id) {
  for (const CheckResult& c : report.checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool checkHasStatus(const VerificationReport& report, const std::string& id,
                    CheckStatus status) {
  const CheckResult* c = findCheck(report, id);
  return c && c->status == status;
}

// 1. Every Mumford pairing of the twelve basis classes matches the
// published fractional table.
bool intersectionTable(const ContractedSurface& c) {
  auto kind = [](std::size_t i) { return i == 0 ? 'H' : (i <= 9 ? 'R' : 'E'); };
  auto expected = [&](std::size_t i, std::size_t j) -> Rat {
    char a = kind(i), b = kind(j);
    if (a == 'E' && b == 'E') return Rat(0);
    if (a == 'H' && b == 'H') return Rat(11, 2);
    if (a == 'H' || b == 'H') return Rat(3, 2);
    if (a == 'R' && b == 'R') return i == j ? Rat(-1, 2) : Rat(1, 2);
    return Rat(1, 2);
  };
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      RatVec a(12, Rat(0)), b(12, Rat(0));
      a[i] = 1;
      b[j] = 1;
      if (mumfordPairing(c, a, b) != expected(i, j)) return false;
    }
  return true;
}

// 2. Cl(X) is Z^10 + Z/2 with the torsion generated by K = E1 - E2.
bool classGroupStructure(const SurfaceModel& s, const ContractedSurface& c) {
  if (c.classGroup.rank != 10) return false;
  if (c.classGroup.torsion != std::vector<Int>{Int(2)}) return false;
  IntVec k = (s.basisClass("E1") - s.basisClass("E2")).integralCoeffs();
  IntVec twoK(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) twoK[i] = 2 * k[i];
  return !c.classGroup.isZeroClass(k) && c.classGroup.isZeroClass(twoK);
}

// 3. CM(V) has the Enriques profile and the pull-back identifies it with
// Pic(X_t)/<K>: pairings preserved on a full basis, image lattice equal.
bool cmIdentification(const ContractedSurface& c, const CobleSurfaceData& data) {
  QuadLattice cm = cobleMukaiLattice(data);
  if (!isEnriquesLattice(cm)) return false;
  FiberPicard fiber = picardOfGeneralFiber(c);
  std::vector<IntVec> images;
  for (const IntVec& p : fiber.evenBasis) images.push_back(phiStarDoubled(c, p));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i; j < images.size(); ++j) {
      RatVec a(fiber.evenBasis[i].size()), b(fiber.evenBasis[j].size());
      for (std::size_t t = 0; t < a.size(); ++t) a[t] = Rat(fiber.evenBasis[i][t]);
      for (std::size_t t = 0; t < b.size(); ++t) b[t] = Rat(fiber.evenBasis[j][t]);
      RatVec ia(images[i].size()), ib(images[j].size());
      for (std::size_t t = 0; t < ia.size(); ++t) ia[t] = Rat(images[i][t]);
      for (std::size_t t = 0; t < ib.size(); ++t) ib[t] = Rat(images[j][t]);
      if (mumfordPairing(c, a, b) != pairWith(cm.ambientGram, ia, ib)) return false;
    }
  return hermiteRowBasis(IntMat::fromRows(images)) == cm.basisRows;
}

// 5. The printed 3*delta = sum f_i identity fails raw and the suite passes
// exactly when the built-in known-discrepancy table covers it.
bool deltaDiscrepancyGate(const VerificationReport& section4) {
  if (!checkHasStatus(section4, "isotropic-squares", CheckStatus::Pass)) return false;
  if (!checkHasStatus(section4, "isotropic-pairs", CheckStatus::Pass)) return false;
  if (!checkHasStatus(section4, "isotropic-delta-identity", CheckStatus::Fail))
    return false;

  VerificationReport withTable = section4;
  applyKnownDiscrepancies(withTable, knownDiscrepancyTable());
  if (!withTable.allPassed()) return false;
  if (!checkHasStatus(withTable, "isotropic-delta-identity",
                      CheckStatus::KnownDiscrepancy))
    return false;

  std::vector<std::pair<std::string, std::string>> withoutDelta;
  for (const auto& entry : knownDiscrepancyTable())
    if (entry.second != "isotropic-delta-identity") withoutDelta.push_back(entry);
  VerificationReport partial = section4;
  applyKnownDiscrepancies(partial, withoutDelta);
  return !partial.allPassed();
}

// 6. The 13-generator, 3-relation presentation of Cl(X') has rank 10, and
// the continued-fraction bookkeeping matches: 40/19 and milnorRank(10).
bool section5Presentation() {
  const int rel[3][13] = {
      {-2, -2, -2, -1, 1, 3, 3, 1, -1, -1, -1, 2, 0},
      {-1, -3, -5, -4, 0, 4, 5, 3, 1, 0, -3, 3, 0},
      {-1, -3, -5, -3, 3, 9, 10, 6, 2, -1, -4, 5, -2},
  };
  IntMat relations(3, 13);
  std::vector<std::string> gens;
  for (std::size_t j = 0; j < 13; ++j) {
    gens.push_back("g" + std::to_string(j));
    for (std::size_t i = 0; i < 3; ++i) relations(i, j) = rel[i][j];
  }
  if (presentGroup(gens, relations).rank != 10) return false;
  if (hjExpand(40, 19) != HJChain{3, 2, 2, 2, 2, 2, 2, 2, 2, 3}) return false;
  return milnorRank(10) == 9;
}

// 7. Round trips: expand(evaluate(chain)) = chain for every chain with
// entries <= 6 and length <= 8, evaluate(expand(n/a)) = n/a for n <= 200.
bool roundTrips() {
  HJChain chain;
  auto sweep = [&](auto&& self, std::size_t depth) -> bool {
    if (!chain.empty()) {
      Rat value = hjEvaluate(chain);
      if (hjExpand(numerator(value), denominator(value)) != chain) return false;
    }
    if (depth == 8) return true;
    chain.push_back(Int(0));
    for (int entry = 2; entry <= 6; ++entry) {
      chain.back() = entry;
      if (!self(self, depth + 1)) return false;
    }
    chain.pop_back();
    return true;
  };
  if (!sweep(sweep, 0)) return false;
  for (Int n = 2; n <= 200; ++n)
    for (Int a = 1; a < n; ++a) {
      if (gcd(n, a) != 1) continue;
      if (hjEvaluate(hjExpand(n, a)) != Rat(n, a)) return false;
    }
  return true;
}

// 8. The Wahl family and the reversed printed chains carry the expected
// (n, a) parameters.
bool wahlFamily() {
  for (int k = 1; k <= 10; ++k) {
    std::optional<CyclicQuotient> w = isWahl(wahlFamilyChain(k));
    if (!w || w->n != 2 * k || w->a != 2 * k - 1) return false;
  }
  const std::vector<std::pair<HJChain, CyclicQuotient>> reversed = {
      {{4}, {2, 1}}, {{6, 2, 2}, {4, 1}}, {{8, 2, 2, 2, 2}, {6, 1}}};
  for (const auto& [rev, params] : reversed) {
    std::optional<CyclicQuotient> w = isWahl(rev);
    if (!w || *w != params) return false;
  }
  return true;
}

// 10. admissibleDegenerations(s) has 2 p(s) entries for s <= 10, s = 10
// contains {A9}, and every named root type sums to rank 9.
bool degenerationCounts() {
  for (int s = 1; s <= 10; ++s)
    if (admissibleDegenerations(s).size() != 2 * partitionsOf(s).size()) return false;
  std::vector<SingConfiguration> last = admissibleDegenerations(10);
  bool hasA9 = std::any_of(last.begin(), last.end(), [](const SingConfiguration& c) {
    return c.str() == "{A9}";
  });
  if (!hasA9) return false;
  for (const char* type : {"A9", "D8+A1", "D5+A4", "E8+A1", "A7+2A1", "3A3"})
    if (rootConfigurationRank(parseAdeConfiguration(type)) != 9) return false;
  return true;
}

}  // namespace

int main() {
  try {
    SurfaceModel s = section4Surface();
    ContractedSurface c = contract(s);
    CobleSurfaceData data = cobleSurfaceData(s);
    VerificationReport section4 = runSection4();

    criterion(1, "intersection table, all 144 pairs exact", intersectionTable(c));
    criterion(2, "Cl(X) = Z^10 + Z/2 generated by E1 - E2", classGroupStructure(s, c));
    criterion(3, "CM(V) identified with Pic(X_t)/<K>", cmIdentification(c, data));
    criterion(4, "U and E8(-1) summands, T(2,3,7) root basis",
              checkHasStatus(section4, "u-summand", CheckStatus::Pass) &&
                  checkHasStatus(section4, "e8-summand", CheckStatus::Pass) &&
                  checkHasStatus(section4, "root-basis-t237", CheckStatus::Pass));
    criterion(5, "delta identity fails raw, passes only via the known table",
              deltaDiscrepancyGate(section4));
    criterion(6, "13-generator presentation rank 10, 40/19 chain, milnor rank",
              section5Presentation());
    criterion(7, "continued-fraction round trips, exhaustive", roundTrips());
    criterion(8, "Wahl family parameters (2k, 2k-1) and reversed chains", wahlFamily());
    criterion(9, "exact-sequence index 2^(s-1) = 2",
              picardOfGeneralFiber(c).freeImageIndex == Int(2));
    criterion(10, "2 p(s) degenerations, A9 present, root ranks 9",
              degenerationCounts());
  } catch (const std::exception& e) {
    std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
    ++failures;
  }

  if (failures == 0) {
    std::cout << "all 10 criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
