#include "coble/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace coble {

namespace {

void checkSameSurface(const DivisorClass& a, const DivisorClass& b) {
  if (a.surfaceName != b.surfaceName || a.coeffs.size() != b.coeffs.size())
    throw std::invalid_argument("divisor classes belong to different surfaces");
}

RatVec toRatVec(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

}  // namespace

bool DivisorClass::isIntegral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& q) { return isInteger(q); });
}

IntVec DivisorClass::integralCoeffs() const {
  if (!isIntegral()) throw std::invalid_argument("divisor class is not integral");
  IntVec out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = numerator(coeffs[i]);
  return out;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  checkSameSurface(a, b);
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  checkSameSurface(a, b);
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass out = a;
  for (Rat& q : out.coeffs) q = -q;
  return out;
}

DivisorClass operator*(const Rat& f, const DivisorClass& a) {
  DivisorClass out = a;
  for (Rat& q : out.coeffs) q *= f;
  return out;
}

std::size_t SurfaceModel::basisIndex(const std::string& label) const {
  for (std::size_t i = 0; i < basisLabels.size(); ++i)
    if (basisLabels[i] == label) return i;
  throw std::invalid_argument("unknown basis label '" + label + "'");
}

DivisorClass SurfaceModel::basisClass(const std::string& label) const {
  DivisorClass d = zeroClass();
  d.coeffs[basisIndex(label)] = Rat(1);
  return d;
}

DivisorClass SurfaceModel::zeroClass() const {
  return DivisorClass{name, RatVec(rank(), Rat(0))};
}

DivisorClass SurfaceModel::namedClass(const std::string& n) const {
  auto it = classes.find(n);
  if (it == classes.end()) throw std::invalid_argument("unknown class '" + n + "'");
  return it->second;
}

std::vector<DivisorClass> SurfaceModel::boundaryClasses() const {
  std::vector<DivisorClass> out;
  for (const std::string& n : boundaryOrder) out.push_back(namedClass(n));
  return out;
}

Rat SurfaceModel::pairing(const DivisorClass& a, const DivisorClass& b) const {
  checkSameSurface(a, b);
  if (a.surfaceName != name || a.coeffs.size() != rank())
    throw std::invalid_argument("divisor class does not live on this surface");
  return pairWith(toRational(gram), a.coeffs, b.coeffs);
}

SurfaceModel projectivePlane() {
  SurfaceModel s;
  s.name = "P2";
  s.basisLabels = {"H"};
  s.gram = IntMat{{1}};
  s.canonical = DivisorClass{s.name, {Rat(-3)}};
  return s;
}

SurfaceModel blowUpPoint(const SurfaceModel& s, const std::string& label) {
  if (std::find(s.basisLabels.begin(), s.basisLabels.end(), label) != s.basisLabels.end())
    throw std::invalid_argument("duplicate exceptional label '" + label + "'");
  SurfaceModel out;
  out.name = s.name;
  out.basisLabels = s.basisLabels;
  out.basisLabels.push_back(label);
  const std::size_t n = s.rank();
  out.gram = IntMat(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.gram(i, j) = s.gram(i, j);
  out.gram(n, n) = -1;
  auto extend = [&](const DivisorClass& d) {
    DivisorClass e{out.name, d.coeffs};
    e.coeffs.push_back(Rat(0));
    return e;
  };
  out.canonical = extend(s.canonical);
  out.canonical.coeffs[n] = Rat(1);  // K' = K + E
  for (const auto& [name, cls] : s.classes) out.classes.emplace(name, extend(cls));
  out.boundaryOrder = s.boundaryOrder;
  return out;
}

SurfaceModel renamed(const SurfaceModel& s, const std::string& name) {
  SurfaceModel out = s;
  out.name = name;
  out.canonical.surfaceName = name;
  for (auto& [key, cls] : out.classes) cls.surfaceName = name;
  return out;
}

DivisorClass properTransform(const SurfaceModel& s, const DivisorClass& d,
                             const std::vector<std::pair<std::string, Int>>& assignments) {
  if (d.surfaceName != s.name || d.coeffs.size() != s.rank())
    throw std::invalid_argument("divisor class does not live on this surface");
  DivisorClass out = d;
  for (const auto& [label, mult] : assignments)
    out.coeffs[s.basisIndex(label)] -= Rat(mult);
  return out;
}

std::vector<IntVec> ContractedSurface::freeBasisLifts() const {
  std::vector<IntVec> lifts;
  for (std::size_t j = classGroup.snf.rank(); j < sourceRank(); ++j)
    lifts.push_back(classGroup.snf.vInv.row(j));
  return lifts;
}

ContractedSurface contract(const SurfaceModel& s) {
  std::vector<DivisorClass> boundary = s.boundaryClasses();
  if (boundary.empty()) throw std::invalid_argument("contract: empty boundary");
  const std::size_t n = s.rank(), k = boundary.size();
  IntMat rows(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    IntVec c = boundary[i].integralCoeffs();
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = c[j];
  }
  RatMat bg(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      bg(i, j) = s.pairing(boundary[i], boundary[j]);
  if (!profile(bg).signatureIs(0, k))
    throw std::invalid_argument("contract: boundary Gram is not negative definite");
  ContractedSurface out;
  out.source = s;
  out.classGroup = presentGroup(s.basisLabels, rows);
  out.boundaryRows = rows;
  out.boundaryGram = bg;
  return out;
}

RatVec mumfordPullbackCoeffs(const ContractedSurface& c, const RatVec& d) {
  const std::size_t n = c.sourceRank(), k = c.boundaryCount();
  if (d.size() != n) throw std::invalid_argument("class length does not match surface rank");
  RatMat gram = toRational(c.source.gram);
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i)
    rhs[i] = -pairWith(gram, d, toRatVec(c.boundaryRows.row(i)));
  auto mu = solveRationalLinear(c.boundaryGram, rhs);
  if (!mu) throw std::logic_error("mumford system inconsistent despite definite boundary");
  RatVec out = d;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j] += (*mu)[i] * Rat(c.boundaryRows(i, j));
  return out;
}

DivisorClass mumfordPullback(const ContractedSurface& c, const DivisorClass& d) {
  if (d.surfaceName != c.source.name)
    throw std::invalid_argument("divisor class does not live on the source surface");
  return DivisorClass{d.surfaceName, mumfordPullbackCoeffs(c, d.coeffs)};
}

Rat mumfordPairing(const ContractedSurface& c, const RatVec& d, const RatVec& f) {
  RatMat gram = toRational(c.source.gram);
  Rat viaD = pairWith(gram, mumfordPullbackCoeffs(c, d), f);
  Rat viaF = pairWith(gram, mumfordPullbackCoeffs(c, f), d);
  if (viaD != viaF)
    throw std::logic_error("mumford pairing differs between the two pull-back sides");
  return viaD;
}

Rat mumfordPairing(const ContractedSurface& c, const DivisorClass& d, const DivisorClass& f) {
  checkSameSurface(d, f);
  return mumfordPairing(c, d.coeffs, f.coeffs);
}

namespace {

// Parity data descends to Cl only if every pairing among boundary curves is
// even and the parity against the last curve is forced by the others; the
// latter holds when the boundary sum is coefficientwise even (it is -2K for
// the surfaces of interest).
void checkParityDescends(const ContractedSurface& c) {
  const std::size_t k = c.boundaryCount();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!isEvenInteger(c.boundaryGram(i, j)))
        throw std::invalid_argument("boundary pairings must all be even");
  for (std::size_t j = 0; j < c.sourceRank(); ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += c.boundaryRows(i, j);
    if (sum % 2 != 0)
      throw std::invalid_argument(
          "parity against the last boundary curve is not determined by the others");
  }
}

}  // namespace

std::vector<int> parityVector(const ContractedSurface& c, const IntVec& d) {
  checkParityDescends(c);
  const std::size_t n = c.sourceRank();
  if (d.size() != n) throw std::invalid_argument("class length does not match surface rank");
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < c.boundaryCount(); ++i) {
    Int p(0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) p += d[a] * c.source.gram(a, b) * c.boundaryRows(i, b);
    out.push_back(static_cast<int>(((p % 2) + 2) % 2));
  }
  return out;
}

std::vector<int> parityVector(const ContractedSurface& c, const DivisorClass& d) {
  if (d.surfaceName != c.source.name)
    throw std::invalid_argument("divisor class does not live on the source surface");
  return parityVector(c, d.integralCoeffs());
}

FiberPicard picardOfGeneralFiber(const ContractedSurface& c) {
  checkParityDescends(c);
  const std::size_t n = c.sourceRank(), s = c.boundaryCount();

  // Evenness constraints against the first s-1 boundary curves: rows of
  // (gram * C_i). x satisfies them iff x = V z with z even at positions
  // whose elementary divisor is odd.
  IntMat m(s - 1, n);
  for (std::size_t i = 0; i + 1 < s; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int e(0);
      for (std::size_t b = 0; b < n; ++b) e += c.source.gram(j, b) * c.boundaryRows(i, b);
      m(i, j) = e;
    }
  SnfResult snf = smithNormalForm(m);
  IntVec scale(n, Int(1));
  for (std::size_t i = 0; i < snf.rank(); ++i)
    if (snf.divisors[i] % 2 != 0) scale[i] = 2;

  FiberPicard out;
  for (std::size_t j = 0; j < n; ++j) {
    IntVec col = snf.v.col(j);
    for (Int& x : col) x *= scale[j];
    out.evenBasis.push_back(col);
  }

  // Boundary classes written in the even-basis coordinates become the
  // relations of the quotient.
  IntMat rel(s, n);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Int z(0);
      for (std::size_t a = 0; a < n; ++a) z += snf.vInv(j, a) * c.boundaryRows(i, a);
      if (z % scale[j] != 0)
        throw std::invalid_argument("boundary class violates its own parity constraints");
      rel(i, j) = z / scale[j];
    }
  }
  std::vector<std::string> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back("p" + std::to_string(j));
  out.quotient = presentGroup(gens, rel);

  // Image inside the free part of Cl, with its index.
  const std::size_t r = c.classGroup.rank;
  IntMat freeImage(n, r);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec f = c.classGroup.freeCoords(out.evenBasis[j]);
    for (std::size_t t = 0; t < r; ++t) freeImage(j, t) = f[t];
  }
  SnfResult img = smithNormalForm(freeImage);
  if (img.rank() != r)
    throw std::invalid_argument("even classes do not span the free part of Cl over Q");
  out.freeImageIndex = 1;
  for (const Int& d : img.divisors) out.freeImageIndex *= d;
  Int expected = Int(1) << (s - 1);
  if (out.freeImageIndex != expected)
    throw std::invalid_argument("boundary parity conditions are not independent");

  // The image as a lattice: ambient = free part of Cl with the Mumford
  // form evaluated on integral lifts of its basis.
  std::vector<IntVec> lifts = c.freeBasisLifts();
  RatMat ambient(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Rat v = mumfordPairing(c, toRatVec(lifts[i]), toRatVec(lifts[j]));
      ambient(i, j) = v;
      ambient(j, i) = v;
    }
  out.lattice.ambientGram = ambient;
  out.lattice.basisRows = hermiteRowBasis(freeImage);
  return out;
}

}  // namespace coble
