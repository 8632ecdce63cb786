#include "coble/scenarios.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

#include "coble/enriques.hpp"
#include "coble/singular.hpp"

namespace coble {

namespace {

// ---------------------------------------------------------------------
// Data tables for the first scenario. Basis order H, R1..R9, E1, E2.
// ---------------------------------------------------------------------

constexpr std::size_t kRank4 = 12;

const char* const kBasis4[kRank4] = {"H",  "R1", "R2", "R3", "R4", "R5",
                                     "R6", "R7", "R8", "R9", "E1", "E2"};

// -3H + R1 + .. + R9 + E1 + E2
const int kCanonical4[kRank4] = {-3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

// C_e = 3H - R1 - .. - R9 - 2E_e
const int kBoundary4[2][kRank4] = {
    {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, -2, 0},
    {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, -2},
};

// 2-torsion generator E1 - E2.
const int kTorsionK4[kRank4] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1};

// The ten printed generators of the general-fiber Picard group, in print
// order: E1, E1+2R9, then the eight roots spanning the definite summand.
const int kFiberGens4[10][kRank4] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},     // E1
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0},     // E1 + 2R9
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},    // R1 - R2
    {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},    // R2 - R3
    {0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},    // R3 - R4
    {0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},    // R4 - R5
    {0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0},    // R5 - R6
    {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},    // R6 - R7
    {0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0},    // R7 - R8
    {1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},  // H - R1 - R2 - R3
};

// The ten printed root classes: alpha0 = H-R1-R2-R3, alpha_i = R_i-R_{i+1}
// for i = 1..7, alpha8 = -3H+E1+R1+..+R7+2R8, alpha9 = 2R9.
const int kRoots4[10][kRank4] = {
    {1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0},
    {-3, 1, 1, 1, 1, 1, 1, 1, 2, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0},
};

// The nine printed isotropic classes in the reading that verifies:
// f_i = -3H+2E1+(R1+..+R8)+R_i+2R9 for i = 1..7, f9 = E1+2R9, f10 = E1.
const int kIsotropic4[9][kRank4] = {
    {-3, 2, 1, 1, 1, 1, 1, 1, 1, 2, 2, 0},
    {-3, 1, 2, 1, 1, 1, 1, 1, 1, 2, 2, 0},
    {-3, 1, 1, 2, 1, 1, 1, 1, 1, 2, 2, 0},
    {-3, 1, 1, 1, 2, 1, 1, 1, 1, 2, 2, 0},
    {-3, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2, 0},
    {-3, 1, 1, 1, 1, 1, 2, 1, 1, 2, 2, 0},
    {-3, 1, 1, 1, 1, 1, 1, 2, 1, 2, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
};

// Printed average of the ten-term sequence: -8H + 3(R1+..+R9) + 6E1.
const int kDelta4[kRank4] = {-8, 3, 3, 3, 3, 3, 3, 3, 3, 3, 6, 0};

// Expected pairing table on the contraction, row per basis class.
const char* const kMumfordTable4[kRank4] = {
    "11/2 3/2 3/2 3/2 3/2 3/2 3/2 3/2 3/2 3/2 3/2 3/2",
    "3/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 -1/2 1/2 1/2",
    "3/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 0 0",
    "3/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 0 0",
};

// Expected Gram of the hyperbolic summand <E1, E1+2R9>.
const int kUGram[2][2] = {{0, 1}, {1, 0}};

// Expected Gram of the eight remaining generators: a chain of seven with
// the eighth node attached to the third.
const int kE8Gram[8][8] = {
    {-2, 1, 0, 0, 0, 0, 0, 0},
    {1, -2, 1, 0, 0, 0, 0, 0},
    {0, 1, -2, 1, 0, 0, 0, 1},
    {0, 0, 1, -2, 1, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0},
    {0, 0, 0, 0, 1, -2, 1, 0},
    {0, 0, 0, 0, 0, 1, -2, 0},
    {0, 0, 1, 0, 0, 0, 0, -2},
};

// ---------------------------------------------------------------------
// Data tables for the second scenario: a 13-generator presentation of the
// class group of the degenerate surface, three relation rows.
// ---------------------------------------------------------------------

constexpr std::size_t kGens5 = 13;

const int kRelations5[3][kGens5] = {
    {-2, -2, -2, -1, 1, 3, 3, 1, -1, -1, -1, 2, 0},
    {-1, -3, -5, -4, 0, 4, 5, 3, 1, 0, -3, 3, 0},
    {-1, -3, -5, -3, 3, 9, 10, 6, 2, -1, -4, 5, -2},
};

const int kExpectedDivisors5[3] = {1, 1, 2};
const int kExpectedRank5 = 10;

// Frozen expansion of 40/19.
const int kExpansion5[10] = {3, 2, 2, 2, 2, 2, 2, 2, 2, 3};

// ---------------------------------------------------------------------
// Other frozen values.
// ---------------------------------------------------------------------

// Partition counts p(1)..p(10).
const int kPartitionCounts[10] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};

// Root configurations of the rank-9 degenerations checked by name.
const char* const kRootConfigs[6] = {"A9",    "D8+A1",  "D5+A4",
                                     "E8+A1", "A7+2A1", "3A3"};

// ---------------------------------------------------------------------

Rat parseFrac(const std::string& token) {
  auto slash = token.find('/');
  if (slash == std::string::npos) return Rat(parseInt(token));
  return Rat(parseInt(token.substr(0, slash)), parseInt(token.substr(slash + 1)));
}

RatMat parseTable(const char* const* rows, std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream in(rows[i]);
    std::string token;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> token)) throw std::logic_error("short table row");
      m(i, j) = parseFrac(token);
    }
  }
  return m;
}

DivisorClass classFromRow(const SurfaceModel& s, const int* row) {
  RatVec coeffs(s.rank());
  for (std::size_t j = 0; j < s.rank(); ++j) coeffs[j] = Rat(row[j]);
  return DivisorClass{s.name, coeffs};
}

IntVec vecFromRow(const int* row, std::size_t n) {
  IntVec v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = Int(row[j]);
  return v;
}

std::string chainStr(const HJChain& chain) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out << ", ";
    out << intStr(chain[i]);
  }
  out << "]";
  return out.str();
}

std::string intListStr(const std::vector<Int>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << intStr(v[i]);
  }
  out << "]";
  return out.str();
}

std::string boolStr(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<std::string> scenarioNames() {
  return {"section4", "section5", "wahl-family", "degenerations", "t-chains"};
}

std::string scenarioName(ScenarioId id) {
  switch (id) {
    case ScenarioId::Section4:
      return "section4";
    case ScenarioId::Section5:
      return "section5";
    case ScenarioId::WahlFamily:
      return "wahl-family";
    case ScenarioId::Degenerations:
      return "degenerations";
    case ScenarioId::TChains:
      return "t-chains";
  }
  throw std::logic_error("unknown scenario");
}

std::optional<ScenarioId> scenarioFromName(const std::string& name) {
  for (ScenarioId id : {ScenarioId::Section4, ScenarioId::Section5,
                        ScenarioId::WahlFamily, ScenarioId::Degenerations,
                        ScenarioId::TChains})
    if (scenarioName(id) == name) return id;
  return std::nullopt;
}

SurfaceModel section4Surface() {
  SurfaceModel s;
  s.name = "V";
  for (const char* label : kBasis4) s.basisLabels.emplace_back(label);
  s.gram = IntMat(kRank4, kRank4);
  s.gram(0, 0) = 1;
  for (std::size_t i = 1; i < kRank4; ++i) s.gram(i, i) = -1;
  s.canonical = classFromRow(s, kCanonical4);
  s.classes["C1"] = classFromRow(s, kBoundary4[0]);
  s.classes["C2"] = classFromRow(s, kBoundary4[1]);
  s.boundaryOrder = {"C1", "C2"};
  return s;
}

VerificationReport runSection4() {
  VerificationReport report;
  report.title = "section4";

  SurfaceModel s = section4Surface();
  ContractedSurface c = contract(s);
  CobleSurfaceData data = cobleSurfaceData(s);
  DivisorClass k = classFromRow(s, kTorsionK4);

  {
    CheckResult check;
    check.id = "intersection-table";
    RatMat expected = parseTable(kMumfordTable4, kRank4);
    std::size_t mismatches = 0;
    RatMat computed(kRank4, kRank4);
    for (std::size_t i = 0; i < kRank4; ++i)
      for (std::size_t j = 0; j < kRank4; ++j) {
        IntVec a(kRank4, Int(0)), b(kRank4, Int(0));
        a[i] = 1;
        b[j] = 1;
        RatVec ra(kRank4), rb(kRank4);
        for (std::size_t t = 0; t < kRank4; ++t) {
          ra[t] = Rat(a[t]);
          rb[t] = Rat(b[t]);
        }
        computed(i, j) = mumfordPairing(c, ra, rb);
        if (computed(i, j) != expected(i, j)) ++mismatches;
      }
    check.status = mismatches == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("pairs-checked", "144");
    check.value("mismatches", std::to_string(mismatches));
    check.value("H.H", ratStr(computed(0, 0)));
    check.value("H.R1", ratStr(computed(0, 1)));
    check.value("H.E1", ratStr(computed(0, 10)));
    check.value("R1.R1", ratStr(computed(1, 1)));
    check.value("R1.R2", ratStr(computed(1, 2)));
    check.value("R1.E1", ratStr(computed(1, 10)));
    check.value("E1.E1", ratStr(computed(10, 10)));
    check.value("E1.E2", ratStr(computed(10, 11)));
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "cl-group-structure";
    bool ok = c.classGroup.rank == 10 && c.classGroup.torsion == std::vector<Int>{Int(2)};
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("rank", std::to_string(c.classGroup.rank));
    check.value("torsion", intListStr(c.classGroup.torsion));
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "k-torsion-generator";
    IntVec kv = vecFromRow(kTorsionK4, kRank4);
    IntVec twice(kRank4);
    for (std::size_t i = 0; i < kRank4; ++i) twice[i] = 2 * kv[i];
    bool nonzero = !c.classGroup.isZeroClass(kv);
    bool killed = c.classGroup.isZeroClass(twice);
    bool cyclic = c.classGroup.torsion == std::vector<Int>{Int(2)};
    check.status = (nonzero && killed && cyclic) ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("k-nonzero", boolStr(nonzero));
    check.value("2k-zero", boolStr(killed));
    check.value("torsion-cyclic-of-order-2", boolStr(cyclic));
    report.add(check);
  }

  FiberPicard fiber = picardOfGeneralFiber(c);

  {
    CheckResult check;
    check.id = "fiber-generators";
    IntMat evenRows = IntMat::fromRows(fiber.evenBasis);
    bool contained = true;
    IntMat freeRows(10, c.classGroup.rank);
    for (std::size_t g = 0; g < 10; ++g) {
      IntVec v = vecFromRow(kFiberGens4[g], kRank4);
      if (!inRowLattice(evenRows, v)) contained = false;
      IntVec f = c.classGroup.freeCoords(v);
      for (std::size_t t = 0; t < f.size(); ++t) freeRows(g, t) = f[t];
    }
    bool spans = hermiteRowBasis(freeRows) == fiber.lattice.basisRows;
    check.status = (contained && spans) ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("generators", "10");
    check.value("all-satisfy-parity", boolStr(contained));
    check.value("span-the-fiber-lattice", boolStr(spans));
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "fiber-enriques-profile";
    check.status = isEnriquesLattice(fiber.lattice) ? CheckStatus::Pass : CheckStatus::Fail;
    LatticeProfile p = profile(fiber.lattice);
    check.value("rank", std::to_string(p.rank));
    check.value("discriminant", ratStr(p.discriminant));
    check.value("even", p.even ? boolStr(*p.even) : "non-integral");
    check.value("signature",
                "(" + std::to_string(p.positive) + ", " + std::to_string(p.negative) + ")");
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "u-summand";
    DivisorClass u0 = classFromRow(s, kFiberGens4[0]);
    DivisorClass u1 = classFromRow(s, kFiberGens4[1]);
    bool ok = true;
    RatMat gram(2, 2);
    const DivisorClass* us[2] = {&u0, &u1};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        gram(i, j) = mumfordPairing(c, *us[i], *us[j]);
        if (gram(i, j) != Rat(kUGram[i][j])) ok = false;
      }
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("E1.E1", ratStr(gram(0, 0)));
    check.value("E1.(E1+2R9)", ratStr(gram(0, 1)));
    check.value("(E1+2R9).(E1+2R9)", ratStr(gram(1, 1)));
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "e8-summand";
    RatMat gram(8, 8);
    bool matches = true;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        DivisorClass a = classFromRow(s, kFiberGens4[2 + i]);
        DivisorClass b = classFromRow(s, kFiberGens4[2 + j]);
        gram(i, j) = mumfordPairing(c, a, b);
        if (gram(i, j) != Rat(kE8Gram[i][j])) matches = false;
      }
    LatticeProfile p = profile(gram);
    bool definite = p.signatureIs(0, 8) && p.discriminant == Rat(1) && p.even &&
                    *p.even;
    check.status = (matches && definite) ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("matches-table", boolStr(matches));
    check.value("discriminant", ratStr(p.discriminant));
    check.value("signature",
                "(" + std::to_string(p.positive) + ", " + std::to_string(p.negative) + ")");
    report.add(check);
  }

  {
    std::vector<DivisorClass> alphas;
    for (const auto& row : kRoots4) alphas.push_back(classFromRow(s, row));
    report.add(checkRootBasis(c, alphas));
  }

  {
    std::vector<DivisorClass> fs;
    for (const auto& row : kIsotropic4) fs.push_back(classFromRow(s, row));
    for (CheckResult& check :
         checkIsotropicSequence(c, fs, classFromRow(s, kDelta4)))
      report.add(std::move(check));
  }

  {
    CheckResult check;
    check.id = "isotropic-e-literal";
    check.status = CheckStatus::Fail;
    check.value("defined-e-symbols", "E1, E2");
    check.value("referenced-e-symbols", "E1..E8");
    check.note =
        "the printed interior classes use exceptional symbols up to E8 that do "
        "not exist in this basis; only the reading through R3..R8 verifies";
    report.add(check);
  }

  report.merge(verifyCmPicIdentification(c, data, k));
  report.merge(exactSequenceReport(c));

  stampRef(report, "section4");
  return report;
}

VerificationReport runSection5() {
  VerificationReport report;
  report.title = "section5";

  IntMat relations(3, kGens5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < kGens5; ++j) relations(i, j) = kRelations5[i][j];
  std::vector<std::string> gens;
  for (std::size_t j = 0; j < kGens5; ++j) gens.push_back("g" + std::to_string(j + 1));
  PresentedGroup group = presentGroup(gens, relations);

  {
    CheckResult check;
    check.id = "presentation-snf";
    std::vector<Int> expected;
    for (int d : kExpectedDivisors5) expected.emplace_back(d);
    bool ok = group.snf.divisors == expected &&
              group.rank == static_cast<std::size_t>(kExpectedRank5) &&
              group.torsion == std::vector<Int>{Int(2)};
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("divisors", intListStr(group.snf.divisors));
    check.value("rank", std::to_string(group.rank));
    check.value("torsion", intListStr(group.torsion));
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "sequence-rank";
    bool ok = group.rank == 10;
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("cl-rank", std::to_string(group.rank));
    check.value("fiber-rank", "10");
    check.note = "presentation-level comparison";
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "sequence-index";
    check.status = CheckStatus::NotApplicable;
    check.value("2^(s-1)", "512");
    check.note = "no intersection form at presentation level to compute the image index";
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "hj-expansion";
    HJChain chain = hjExpand(Int(40), Int(19));
    HJChain expected;
    for (int b : kExpansion5) expected.emplace_back(b);
    Rat back = hjEvaluate(chain);
    auto t = isTChain(chain);
    bool ok = chain == expected && back == Rat(40, 19) && t &&
              *t == TParams{Int(10), Int(2), Int(1)};
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("40/19", chainStr(chain));
    check.value("evaluates-to", ratStr(back));
    if (t) {
      check.value("t-params-d", intStr(t->d));
      check.value("t-params-n", intStr(t->n));
      check.value("t-params-a", intStr(t->a));
    }
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "milnor-rank";
    int r = milnorRank(10);
    check.status = r == 9 ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("milnor-rank", std::to_string(r));
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "z2-rank-consistency";
    // The torsion quotient has rank s - 1 = 9, matching the Milnor rank.
    int fromMilnor = milnorRank(10);
    int fromSequence = 9;
    check.status = fromMilnor == fromSequence ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("milnor-rank", std::to_string(fromMilnor));
    check.value("sequence-target-rank", std::to_string(fromSequence));
    report.add(check);
  }

  stampRef(report, "section5");
  return report;
}

VerificationReport runWahlFamily(unsigned maxK) {
  VerificationReport report;
  report.title = "wahl-family";
  for (unsigned k = 1; k <= maxK; ++k) {
    CheckResult check;
    check.id = "wahl-family-k" + std::to_string(k);
    HJChain chain = wahlFamilyChain(static_cast<int>(k));
    HJChain reversed(chain.rbegin(), chain.rend());
    auto forward = isWahl(chain);
    auto backward = isWahl(reversed);
    Int n(2 * k);
    bool ok = forward && forward->n == n && forward->a == n - 1 && backward &&
              backward->n == n && backward->a == 1;
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("chain", chainStr(chain));
    check.value("fraction", ratStr(hjEvaluate(chain)));
    if (forward) {
      check.value("n", intStr(forward->n));
      check.value("a", intStr(forward->a));
    }
    if (backward) check.value("reversed-a", intStr(backward->a));
    report.add(check);
  }
  stampRef(report, "wahl-family");
  return report;
}

VerificationReport runDegenerations(unsigned maxS) {
  VerificationReport report;
  report.title = "degenerations";
  for (unsigned s = 1; s <= maxS; ++s) {
    CheckResult check;
    check.id = "degenerations-s" + std::to_string(s);
    std::vector<SingConfiguration> configs = admissibleDegenerations(static_cast<int>(s));
    std::size_t expected = 2 * static_cast<std::size_t>(kPartitionCounts[s - 1]);
    check.status = configs.size() == expected ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("count", std::to_string(configs.size()));
    check.value("expected", std::to_string(expected));
    std::ostringstream list;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      if (i) list << "; ";
      list << configs[i].str();
    }
    check.value("configurations", list.str());
    report.add(check);
  }

  if (maxS >= 10) {
    {
      CheckResult check;
      check.id = "degenerations-contains-a9";
      std::vector<SingConfiguration> configs = admissibleDegenerations(10);
      SingPart a9;
      a9.family = 'A';
      a9.rank = 9;
      SingConfiguration wanted{{a9}, 0};
      bool found = false;
      for (const SingConfiguration& c : configs)
        if (c == wanted) found = true;
      check.status = found ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("configuration", wanted.str());
      check.value("present", boolStr(found));
      report.add(check);
    }
    {
      CheckResult check;
      check.id = "degeneration-root-ranks";
      bool ok = true;
      for (const char* name : kRootConfigs) {
        int rank = rootConfigurationRank(parseAdeConfiguration(name));
        check.value(name, std::to_string(rank));
        if (rank != 9) ok = false;
      }
      check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      report.add(check);
    }
  }

  stampRef(report, "degenerations");
  return report;
}

VerificationReport runTChains(unsigned maxS) {
  VerificationReport report;
  report.title = "t-chains";
  for (unsigned s = 1; s <= maxS; ++s) {
    CheckResult check;
    check.id = "t-chain-s" + std::to_string(s);
    HJChain chain = tChainFromS(static_cast<int>(s));
    Rat value = hjEvaluate(chain);
    auto t = isTChain(chain);
    auto w = isWahl(chain);
    bool ok = chain.size() == s && value == Rat(4 * s, 2 * s - 1) && t &&
              *t == TParams{Int(s), Int(2), Int(1)} && (s == 1) == w.has_value() &&
              milnorRank(static_cast<int>(s)) == static_cast<int>(s) - 1;
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("chain", chainStr(chain));
    check.value("value", ratStr(value));
    if (t) {
      check.value("d", intStr(t->d));
      check.value("n", intStr(t->n));
      check.value("a", intStr(t->a));
    }
    check.value("wahl", boolStr(w.has_value()));
    check.value("milnor-rank", std::to_string(milnorRank(static_cast<int>(s))));
    report.add(check);
  }
  stampRef(report, "t-chains");
  return report;
}

VerificationReport runScenario(ScenarioId id) {
  switch (id) {
    case ScenarioId::Section4:
      return runSection4();
    case ScenarioId::Section5:
      return runSection5();
    case ScenarioId::WahlFamily:
      return runWahlFamily(10);
    case ScenarioId::Degenerations:
      return runDegenerations(10);
    case ScenarioId::TChains:
      return runTChains(10);
  }
  throw std::logic_error("unknown scenario");
}

VerificationReport runAllScenarios() {
  std::vector<std::future<VerificationReport>> futures;
  for (ScenarioId id : {ScenarioId::Section4, ScenarioId::Section5,
                        ScenarioId::WahlFamily, ScenarioId::Degenerations,
                        ScenarioId::TChains})
    futures.push_back(std::async(std::launch::async, [id] { return runScenario(id); }));
  VerificationReport merged;
  merged.title = "all-scenarios";
  for (auto& f : futures) merged.merge(f.get());
  return merged;
}

const std::vector<std::pair<std::string, std::string>>& knownDiscrepancyTable() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"section4", "isotropic-delta-identity"},
      {"section4", "isotropic-e-literal"},
  };
  return table;
}

}  // namespace coble
