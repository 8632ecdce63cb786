#include "coble/enriques.hpp"

#include <sstream>
#include <stdexcept>

namespace coble {

namespace {

RatVec toRatVec(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

std::string vecStr(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << intStr(v[i]);
  }
  out << ")";
  return out.str();
}

std::string boolStr(bool b) { return b ? "true" : "false"; }

RatMat quarterGram(const SurfaceModel& s) {
  RatMat g(s.rank(), s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j) g(i, j) = Rat(s.gram(i, j), 4);
  return g;
}

IntMat betaRows(const CobleSurfaceData& data) {
  IntMat rows(data.betas.size(), data.surface.rank());
  for (std::size_t i = 0; i < data.betas.size(); ++i) {
    IntVec b = data.betas[i].integralCoeffs();
    for (std::size_t j = 0; j < b.size(); ++j) rows(i, j) = b[j];
  }
  return rows;
}

std::size_t mod2Rank(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> w = rows;
  std::size_t rank = 0;
  std::size_t cols = w.empty() ? 0 : w.front().size();
  for (std::size_t c = 0; c < cols && rank < w.size(); ++c) {
    std::size_t pivot = w.size();
    for (std::size_t i = rank; i < w.size(); ++i)
      if (w[i][c] % 2 != 0) {
        pivot = i;
        break;
      }
    if (pivot == w.size()) continue;
    std::swap(w[rank], w[pivot]);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == rank || w[i][c] % 2 == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) w[i][j] = (w[i][j] + w[rank][j]) % 2;
    }
    ++rank;
  }
  return rank;
}

void addProfileValues(CheckResult& check, const QuadLattice& l) {
  LatticeProfile p = profile(l);
  check.value("rank", std::to_string(p.rank));
  check.value("discriminant", ratStr(p.discriminant));
  check.value("even", p.even ? boolStr(*p.even) : "non-integral");
  check.value("signature",
              "(" + std::to_string(p.positive) + ", " + std::to_string(p.negative) + ")");
}

}  // namespace

CobleSurfaceData cobleSurfaceData(const SurfaceModel& s) {
  CobleSurfaceData data{s, s.boundaryClasses()};
  validateCobleData(data);
  return data;
}

void validateCobleData(const CobleSurfaceData& data) {
  if (data.betas.size() > 10)
    throw std::invalid_argument("more than ten boundary classes");
  for (const DivisorClass& b : data.betas) {
    if (b.surfaceName != data.surface.name)
      throw std::invalid_argument("boundary class belongs to a different surface");
    b.integralCoeffs();  // throws when fractional
    if (data.surface.pairing(b, b) != Rat(-4))
      throw std::invalid_argument("boundary class does not have self-intersection -4");
  }
  for (std::size_t i = 0; i < data.betas.size(); ++i)
    for (std::size_t j = i + 1; j < data.betas.size(); ++j) {
      Rat p = data.surface.pairing(data.betas[i], data.betas[j]);
      if (!isEvenInteger(p))
        throw std::invalid_argument("boundary classes with odd mutual pairing");
    }
}

bool anticanonicalBoundary(const CobleSurfaceData& data) {
  DivisorClass total = Rat(2) * data.surface.canonical;
  for (const DivisorClass& b : data.betas) total = total + b;
  for (const Rat& x : total.coeffs)
    if (x != 0) return false;
  return true;
}

ExtendedPicard extendedPicard(const CobleSurfaceData& data) {
  validateCobleData(data);
  const std::size_t n = data.surface.rank(), s = data.betas.size();
  IntMat beta = betaRows(data);
  IntMat stacked(n + s, n);
  for (std::size_t i = 0; i < n; ++i) stacked(i, i) = 2;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(n + i, j) = beta(i, j);

  ExtendedPicard out;
  out.lattice.ambientGram = quarterGram(data.surface);
  out.lattice.basisRows = hermiteRowBasis(stacked);

  // [extension : Pic] = covolume ratio of the doubled lattices.
  Rat det = detRat(toRational(out.lattice.basisRows));
  Rat index = Rat(Int(1) << n) / abs(det);
  if (!isInteger(index)) throw std::logic_error("non-integral index over Pic");
  out.indexOverPic = numerator(index);
  return out;
}

QuadLattice cobleMukaiLattice(const CobleSurfaceData& data) {
  ExtendedPicard ext = extendedPicard(data);
  const std::size_t n = data.surface.rank(), s = data.betas.size();
  IntMat beta = betaRows(data);

  // y ranges over coordinates in the extension basis B; the condition
  // (y B) . G . beta_i = 0 is integral, so its kernel is saturated.
  IntMat cond(s, n);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t y = 0; y < n; ++y) {
      Int e(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          e += ext.lattice.basisRows(y, a) * data.surface.gram(a, b) * beta(i, b);
      cond(i, y) = e;
    }
  std::vector<IntVec> rows;
  for (const IntVec& y : kernelBasis(cond)) {
    IntVec x(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) x[t] += y[j] * ext.lattice.basisRows(j, t);
    rows.push_back(x);
  }
  QuadLattice out;
  out.ambientGram = ext.lattice.ambientGram;
  out.basisRows = rows.empty() ? IntMat(0, n) : hermiteRowBasis(IntMat::fromRows(rows));
  return out;
}

IntVec phiStarDoubled(const ContractedSurface& c, const IntVec& x) {
  // The map is only defined on classes pairing evenly with every boundary
  // curve; outside that domain 2 * pullback can still be integral but
  // falls outside the extended lattice.
  RatMat gram = toRational(c.source.gram);
  for (std::size_t i = 0; i < c.boundaryCount(); ++i) {
    Rat p = pairWith(gram, toRatVec(x), toRatVec(c.boundaryRows.row(i)));
    if (!isEvenInteger(p))
      throw std::invalid_argument("class pairs oddly with the boundary");
  }
  RatVec pull = mumfordPullbackCoeffs(c, toRatVec(x));
  IntVec out(pull.size());
  for (std::size_t i = 0; i < pull.size(); ++i) {
    Rat v = Rat(2) * pull[i];
    if (!isInteger(v))
      throw std::invalid_argument("doubled pull-back is not integral");
    out[i] = numerator(v);
  }
  return out;
}

namespace {

VerificationReport cmPicReport(const ContractedSurface& c, const CobleSurfaceData& data,
                               const DivisorClass* k) {
  if (data.surface.name != c.source.name || data.surface.rank() != c.sourceRank())
    throw std::invalid_argument("surface data does not match the contraction");
  IntMat beta = betaRows(data);
  if (!(beta == c.boundaryRows))
    throw std::invalid_argument("boundary classes do not match the contraction");
  validateCobleData(data);
  IntVec kInt;
  if (k) {
    if (k->surfaceName != c.source.name)
      throw std::invalid_argument("torsion class belongs to a different surface");
    kInt = k->integralCoeffs();
  }
  const std::size_t n = c.sourceRank(), s = c.boundaryCount();

  VerificationReport report;
  report.title = "cm-pic-identification";

  {
    CheckResult check;
    check.id = "anticanonical-boundary";
    DivisorClass total = Rat(2) * data.surface.canonical;
    for (const DivisorClass& b : data.betas) total = total + b;
    bool ok = anticanonicalBoundary(data);
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("two-k-plus-boundary", vecStr(total.integralCoeffs()));
    if (!ok) check.note = "boundary is not anticanonical; downstream checks may degrade";
    report.add(check);
  }

  {
    CheckResult check;
    check.id = "k-two-torsion";
    if (!k) {
      check.status = CheckStatus::NotApplicable;
      check.note = "no torsion class supplied";
    } else {
      IntVec twice(kInt.size());
      for (std::size_t i = 0; i < kInt.size(); ++i) twice[i] = 2 * kInt[i];
      bool vanishes = c.classGroup.isZeroClass(kInt);
      bool doubleVanishes = c.classGroup.isZeroClass(twice);
      check.status = (!vanishes && doubleVanishes) ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("k-vanishes-in-cl", boolStr(vanishes));
      check.value("2k-vanishes-in-cl", boolStr(doubleVanishes));
      if (vanishes) check.note = "supplied torsion class is zero in the class group";
    }
    report.add(check);
  }

  ExtendedPicard ext = extendedPicard(data);
  {
    // Internal consistency: the index over Pic is 2 to the mod-2 rank of
    // the boundary rows.
    CheckResult check;
    check.id = "extended-picard-index";
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<int> r(n);
      for (std::size_t j = 0; j < n; ++j)
        r[j] = static_cast<int>(((beta(i, j) % 2) + 2) % 2);
      rows.push_back(r);
    }
    Int expected = Int(1) << mod2Rank(rows);
    check.status = ext.indexOverPic == expected ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("index-over-pic", intStr(ext.indexOverPic));
    check.value("2^rank2(boundary)", intStr(expected));
    report.add(check);
  }

  QuadLattice cm = cobleMukaiLattice(data);

  FiberPicard fiber;
  bool fiberOk = true;
  try {
    fiber = picardOfGeneralFiber(c);
  } catch (const std::invalid_argument& e) {
    fiberOk = false;
    CheckResult check;
    check.id = "fiber-picard";
    check.status = CheckStatus::Fail;
    check.note = e.what();
    report.add(check);
  }

  if (!fiberOk) {
    for (const char* id : {"phi-into-cm", "phi-pairing", "phi-image-saturation",
                           "phi-kernel", "fiber-enriques-profile"}) {
      CheckResult check;
      check.id = id;
      check.status = CheckStatus::NotApplicable;
      check.note = "fiber Picard group unavailable";
      report.add(check);
    }
  } else {
    std::vector<IntVec> images;
    bool integral = true;
    for (const IntVec& p : fiber.evenBasis) {
      try {
        images.push_back(phiStarDoubled(c, p));
      } catch (const std::invalid_argument&) {
        integral = false;
        break;
      }
    }

    {
      CheckResult check;
      check.id = "phi-into-cm";
      bool contained = integral;
      if (integral)
        for (const IntVec& img : images)
          if (!inRowLattice(cm.basisRows, img)) contained = false;
      check.status = contained ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("classes-mapped", std::to_string(fiber.evenBasis.size()));
      if (!integral) check.note = "pull-back of an even class is not half-integral";
      report.add(check);
    }

    {
      CheckResult check;
      check.id = "phi-pairing";
      std::size_t pairs = 0, mismatches = 0;
      if (integral) {
        for (std::size_t i = 0; i < images.size(); ++i)
          for (std::size_t j = i; j < images.size(); ++j) {
            Rat lhs = mumfordPairing(c, toRatVec(fiber.evenBasis[i]),
                                     toRatVec(fiber.evenBasis[j]));
            Rat rhs = pairWith(cm.ambientGram, toRatVec(images[i]), toRatVec(images[j]));
            ++pairs;
            if (lhs != rhs) ++mismatches;
          }
      }
      check.status = (integral && mismatches == 0) ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("pairs-checked", std::to_string(pairs));
      check.value("mismatches", std::to_string(mismatches));
      report.add(check);
    }

    {
      CheckResult check;
      check.id = "phi-image-saturation";
      if (integral) {
        IntMat imageRows = IntMat::fromRows(images);
        IntMat imageSat = IntMat::fromRows(saturate(images, n).basis);
        std::vector<IntVec> cmRows;
        for (std::size_t i = 0; i < cm.basisRows.rows(); ++i)
          cmRows.push_back(cm.basisRows.row(i));
        IntMat cmSat = IntMat::fromRows(saturate(cmRows, n).basis);
        bool saturationsEqual = hermiteRowBasis(imageSat) == hermiteRowBasis(cmSat);
        bool latticesEqual = hermiteRowBasis(imageRows) == cm.basisRows;
        check.status = saturationsEqual ? CheckStatus::Pass : CheckStatus::Fail;
        check.value("saturations-equal", boolStr(saturationsEqual));
        check.value("image-equals-cm", boolStr(latticesEqual));
      } else {
        check.status = CheckStatus::Fail;
        check.note = "image not computable";
      }
      report.add(check);
    }

    {
      CheckResult check;
      check.id = "phi-kernel";
      IntMat evenRows = IntMat::fromRows(fiber.evenBasis);
      SaturationResult satC = saturate(
          [&] {
            std::vector<IntVec> rows;
            for (std::size_t i = 0; i < s; ++i) rows.push_back(c.boundaryRows.row(i));
            return rows;
          }(),
          n);
      IntMat kernelLattice = intersectRowLattices(evenRows, IntMat::fromRows(satC.basis));

      // Kernel of the pull-back on Pic(X_t): classes in the rational span
      // of the boundary, modulo the boundary classes themselves.
      bool structureOk = false;
      std::vector<Int> torsion;
      std::size_t kernelRank = 0;
      RatMat tr(n, kernelLattice.rows());
      for (std::size_t i = 0; i < kernelLattice.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) tr(j, i) = Rat(kernelLattice(i, j));
      IntMat rel(s, kernelLattice.rows());
      bool coordsOk = true;
      for (std::size_t i = 0; i < s && coordsOk; ++i) {
        auto y = solveRationalLinear(tr, toRatVec(c.boundaryRows.row(i)));
        if (!y) {
          coordsOk = false;
          break;
        }
        for (std::size_t j = 0; j < kernelLattice.rows(); ++j) {
          if (!isInteger((*y)[j])) {
            coordsOk = false;
            break;
          }
          rel(i, j) = numerator((*y)[j]);
        }
      }
      if (coordsOk) {
        std::vector<std::string> gens;
        for (std::size_t j = 0; j < kernelLattice.rows(); ++j)
          gens.push_back("t" + std::to_string(j));
        PresentedGroup g = presentGroup(gens, rel);
        kernelRank = g.rank;
        torsion = g.torsion;
        structureOk = g.rank == 0 && g.torsion == std::vector<Int>{Int(2)};
      }
      check.status = structureOk ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("kernel-rank", std::to_string(kernelRank));
      {
        std::ostringstream t;
        t << "[";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
          if (i) t << ", ";
          t << intStr(torsion[i]);
        }
        t << "]";
        check.value("kernel-torsion", t.str());
      }
      if (k) {
        bool kInKernel = inRowLattice(kernelLattice, kInt);
        bool kNonzero = !c.classGroup.isZeroClass(kInt);
        if (!(kInKernel && kNonzero)) check.status = CheckStatus::Fail;
        check.value("k-in-kernel", boolStr(kInKernel));
        check.value("k-nonzero-in-cl", boolStr(kNonzero));
        if (!kNonzero)
          check.note = "kernel not generated by the supplied class: it is zero";
      }
      report.add(check);
    }

    {
      CheckResult check;
      check.id = "fiber-enriques-profile";
      check.status =
          isEnriquesLattice(fiber.lattice) ? CheckStatus::Pass : CheckStatus::Fail;
      addProfileValues(check, fiber.lattice);
      report.add(check);
    }
  }

  {
    CheckResult check;
    check.id = "cm-enriques-profile";
    check.status = isEnriquesLattice(cm) ? CheckStatus::Pass : CheckStatus::Fail;
    addProfileValues(check, cm);
    report.add(check);
  }

  return report;
}

}  // namespace

VerificationReport verifyCmPicIdentification(const ContractedSurface& c,
                                             const CobleSurfaceData& data,
                                             const DivisorClass& k) {
  return cmPicReport(c, data, &k);
}

VerificationReport verifyCmPicIdentification(const ContractedSurface& c,
                                             const CobleSurfaceData& data) {
  return cmPicReport(c, data, nullptr);
}

CheckResult checkRootBasis(const ContractedSurface& c,
                           const std::vector<DivisorClass>& alphas) {
  if (alphas.size() != 10) throw std::invalid_argument("a root basis needs ten classes");
  RatMat gram(10, 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i; j < 10; ++j) {
      Rat v = mumfordPairing(c, alphas[i], alphas[j]);
      gram(i, j) = v;
      gram(j, i) = v;
    }
  CheckResult check;
  check.id = "root-basis-t237";
  bool ok = matchesTreeCartan(gram, 2, 3, 7);
  check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  check.value("classes", "10");
  check.value("matches-t237", boolStr(ok));
  if (!ok) check.note = "Gram matrix is not a T(2,3,7) Cartan matrix in any ordering";
  return check;
}

std::vector<CheckResult> checkIsotropicSequence(const ContractedSurface& c,
                                                const std::vector<DivisorClass>& fs,
                                                const std::optional<DivisorClass>& delta) {
  if (fs.size() < 2)
    throw std::invalid_argument("an isotropic sequence needs at least two classes");
  std::vector<CheckResult> out;

  {
    CheckResult check;
    check.id = "isotropic-squares";
    bool ok = true;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Rat sq = mumfordPairing(c, fs[i], fs[i]);
      check.value("f" + std::to_string(i + 1) + "^2", ratStr(sq));
      if (sq != 0) ok = false;
    }
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(check);
  }

  {
    CheckResult check;
    check.id = "isotropic-pairs";
    std::size_t pairs = 0, mismatches = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        Rat v = mumfordPairing(c, fs[i], fs[j]);
        ++pairs;
        if (v != 1) {
          ++mismatches;
          check.value("f" + std::to_string(i + 1) + ".f" + std::to_string(j + 1),
                      ratStr(v));
        }
      }
    check.status = mismatches == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("pairs-checked", std::to_string(pairs));
    check.value("mismatches", std::to_string(mismatches));
    out.push_back(check);
  }

  if (delta) {
    CheckResult check;
    check.id = "isotropic-delta-identity";
    DivisorClass diff = Rat(3) * *delta;
    for (const DivisorClass& f : fs) diff = diff - f;
    check.value("delta-integral", boolStr(delta->isIntegral()));
    if (!delta->isIntegral()) {
      check.status = CheckStatus::Fail;
      check.note = "delta is not an integral class";
    } else {
      IntVec d = diff.integralCoeffs();
      bool vanishes = c.classGroup.isZeroClass(d);
      check.status = vanishes ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("3delta-minus-sum", vecStr(d));
      check.value("vanishes-in-cl", boolStr(vanishes));
      if (!vanishes) {
        check.value("in-boundary-lattice", boolStr(inRowLattice(c.boundaryRows, d)));
        check.note = "the identity fails by the recorded class";
      }
    }
    out.push_back(check);
  }

  return out;
}

VerificationReport exactSequenceReport(const ContractedSurface& c) {
  const std::size_t n = c.sourceRank(), s = c.boundaryCount();
  VerificationReport report;
  report.title = "exact-sequence";

  std::vector<std::vector<int>> parityRows;
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, Int(0));
    e[j] = 1;
    parityRows.push_back(parityVector(c, e));
  }
  std::size_t rank2 = mod2Rank(parityRows);
  bool surjective = rank2 == s - 1;
  {
    CheckResult check;
    check.id = "sequence-parity-surjective";
    check.status = surjective ? CheckStatus::Pass : CheckStatus::Fail;
    check.value("parity-rank", std::to_string(rank2));
    check.value("target-rank", std::to_string(s - 1));
    report.add(check);
  }

  if (!surjective) {
    for (const char* id : {"sequence-rank", "sequence-index"}) {
      CheckResult check;
      check.id = id;
      check.status = CheckStatus::NotApplicable;
      check.note = "parity map not surjective";
      report.add(check);
    }
    return report;
  }

  try {
    FiberPicard fiber = picardOfGeneralFiber(c);
    {
      CheckResult check;
      check.id = "sequence-rank";
      check.status = fiber.quotient.rank == c.classGroup.rank ? CheckStatus::Pass
                                                              : CheckStatus::Fail;
      check.value("fiber-rank", std::to_string(fiber.quotient.rank));
      check.value("cl-rank", std::to_string(c.classGroup.rank));
      report.add(check);
    }
    {
      CheckResult check;
      check.id = "sequence-index";
      Int expected = Int(1) << (s - 1);
      check.status =
          fiber.freeImageIndex == expected ? CheckStatus::Pass : CheckStatus::Fail;
      check.value("index", intStr(fiber.freeImageIndex));
      check.value("2^(s-1)", intStr(expected));
      report.add(check);
    }
  } catch (const std::invalid_argument& e) {
    for (const char* id : {"sequence-rank", "sequence-index"}) {
      CheckResult check;
      check.id = id;
      check.status = CheckStatus::Fail;
      check.note = e.what();
      report.add(check);
    }
  }
  return report;
}

void stampRef(VerificationReport& report, const std::string& ref) {
  for (CheckResult& c : report.checks) c.ref = ref;
}

namespace {

CheckResult notApplicable(const std::string& id, const std::string& note) {
  CheckResult check;
  check.id = id;
  check.status = CheckStatus::NotApplicable;
  check.note = note;
  return check;
}

}  // namespace

VerificationReport surfaceVerificationReport(const SurfaceModel& model) {
  VerificationReport report;
  report.title = "surface-verify";
  auto finish = [&] {
    stampRef(report, "surface:" + model.name);
    return report;
  };

  {
    CheckResult check;
    check.id = "model-shape";
    check.value("surface", model.name);
    check.value("rank", std::to_string(model.rank()));
    check.value("named-classes", std::to_string(model.classes.size()));
    check.value("boundary-count", std::to_string(model.boundaryOrder.size()));
    report.add(check);
  }

  const char* dependent[] = {"contraction", "exact-sequence", "cm-pic-identification"};
  if (model.boundaryOrder.empty()) {
    report.add(notApplicable("boundary-structural", "no boundary declared"));
    for (const char* id : dependent) report.add(notApplicable(id, "no boundary declared"));
    return finish();
  }

  CobleSurfaceData data;
  {
    CheckResult check;
    check.id = "boundary-structural";
    try {
      data = cobleSurfaceData(model);
      check.value("boundary-count", std::to_string(data.betas.size()));
    } catch (const std::invalid_argument& e) {
      check.status = CheckStatus::Fail;
      check.note = e.what();
    }
    report.add(check);
    if (check.status == CheckStatus::Fail) {
      for (const char* id : dependent)
        report.add(notApplicable(id, "boundary conditions violated"));
      return finish();
    }
  }

  std::optional<ContractedSurface> con;
  {
    CheckResult check;
    check.id = "contraction";
    try {
      con = contract(model);
      check.value("cl-rank", std::to_string(con->classGroup.rank));
      std::string torsion = "[";
      for (std::size_t i = 0; i < con->classGroup.torsion.size(); ++i) {
        if (i) torsion += ", ";
        torsion += intStr(con->classGroup.torsion[i]);
      }
      check.value("cl-torsion", torsion + "]");
    } catch (const std::invalid_argument& e) {
      check.status = CheckStatus::Fail;
      check.note = e.what();
    }
    report.add(check);
  }
  if (!con) {
    report.add(notApplicable("exact-sequence", "contraction unavailable"));
    report.add(notApplicable("cm-pic-identification", "contraction unavailable"));
    return finish();
  }

  try {
    report.merge(exactSequenceReport(*con));
  } catch (const std::invalid_argument& e) {
    CheckResult check;
    check.id = "exact-sequence";
    check.status = CheckStatus::Fail;
    check.note = e.what();
    report.add(check);
  }

  // A class literally named K, when present, is taken as the candidate
  // torsion generator of the pull-back kernel.
  try {
    auto k = model.classes.find("K");
    report.merge(k != model.classes.end()
                     ? verifyCmPicIdentification(*con, data, k->second)
                     : verifyCmPicIdentification(*con, data));
  } catch (const std::invalid_argument& e) {
    CheckResult check;
    check.id = "cm-pic-identification";
    check.status = CheckStatus::Fail;
    check.note = e.what();
    report.add(check);
  }

  return finish();
}

}  // namespace coble
