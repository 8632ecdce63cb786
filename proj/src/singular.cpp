#include "coble/singular.hpp"

#include <algorithm>
#include <stdexcept>

namespace coble {

HJChain hjExpand(const Int& n, const Int& a) {
  if (a <= 0 || a >= n || gcd(n, a) != 1)
    throw std::invalid_argument("hjExpand: need 0 < a < n with gcd(n,a) = 1");
  HJChain out;
  Int p = n, q = a;
  while (q > 0) {
    Int b = (p + q - 1) / q;  // ceil(p/q), both positive
    out.push_back(b);
    Int next = b * q - p;
    p = q;
    q = next;
  }
  return out;
}

Rat hjEvaluate(const HJChain& chain) {
  if (chain.empty()) throw std::invalid_argument("hjEvaluate: empty chain");
  for (const Int& b : chain)
    if (b < 2) throw std::invalid_argument("hjEvaluate: entries must be >= 2");
  Rat val(chain.back());
  for (std::size_t i = chain.size() - 1; i-- > 0;) val = Rat(chain[i]) - 1 / val;
  return val;
}

std::optional<CyclicQuotient> isWahl(const HJChain& chain) {
  std::optional<TParams> t = isTChain(chain);
  if (!t || t->d != 1) return std::nullopt;
  return CyclicQuotient{t->n, t->a};
}

std::optional<TParams> isTChain(const HJChain& chain) {
  Rat val = hjEvaluate(chain);
  const Int p = numerator(val), q = denominator(val);
  for (Int n = 2; n * n <= p; ++n) {
    if (p % (n * n) != 0) continue;
    Int d = p / (n * n);
    if ((q + 1) % (d * n) != 0) continue;
    Int a = (q + 1) / (d * n);
    if (a <= 0 || a >= n || gcd(n, a) != 1) continue;
    return TParams{d, n, a};
  }
  return std::nullopt;
}

HJChain tChainFromS(int s) {
  if (s < 1) throw std::invalid_argument("tChainFromS: s must be >= 1");
  if (s == 1) return {Int(4)};
  HJChain out{Int(3)};
  out.insert(out.end(), static_cast<std::size_t>(s - 2), Int(2));
  out.push_back(Int(3));
  return out;
}

HJChain wahlFamilyChain(int k) {
  if (k < 1) throw std::invalid_argument("wahlFamilyChain: k must be >= 1");
  HJChain out(static_cast<std::size_t>(2 * k - 2), Int(2));
  out.push_back(Int(2 * k + 2));
  return out;
}

int milnorRank(int s) {
  if (s < 1) throw std::invalid_argument("milnorRank: s must be >= 1");
  return s - 1;
}

std::string SingPart::str() const {
  if (isT) return "1/" + frac.n.str() + "(1," + frac.a.str() + ")";
  return std::string(1, family) + std::to_string(rank);
}

std::string SingConfiguration::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i].str();
  }
  return out + "}";
}

std::vector<std::vector<int>> partitionsOf(int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxPart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = std::min(rest, maxPart); first >= 1; --first) {
      cur.push_back(first);
      self(self, rest - first, first);
      cur.pop_back();
    }
  };
  rec(rec, s, s);
  return out;
}

namespace {

SingPart adePart(int rank) {
  SingPart p;
  p.family = 'A';
  p.rank = static_cast<unsigned>(rank);
  return p;
}

SingPart tPart(int e) {
  SingPart p;
  p.isT = true;
  p.frac = CyclicQuotient{Int(4 * e), Int(2 * e - 1)};
  return p;
}

}  // namespace

std::vector<SingConfiguration> admissibleDegenerations(int s) {
  if (s < 1 || s > 10)
    throw std::invalid_argument("admissibleDegenerations: s must be between 1 and 10");
  std::vector<SingConfiguration> out;
  for (const std::vector<int>& part : partitionsOf(s)) {
    SingConfiguration plain;  // A_{e1-1}, ..., A_{er-1}
    for (int e : part) {
      if (e >= 2)
        plain.parts.push_back(adePart(e - 1));
      else
        ++plain.droppedSmooth;
    }
    SingConfiguration withT;  // 1/4e1(1,2e1-1), A_{e2-1}, ..., A_{er-1}
    withT.parts.push_back(tPart(part.front()));
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (part[i] >= 2)
        withT.parts.push_back(adePart(part[i] - 1));
      else
        ++withT.droppedSmooth;
    }
    if (std::find(out.begin(), out.end(), plain) == out.end()) out.push_back(plain);
    if (std::find(out.begin(), out.end(), withT) == out.end()) out.push_back(withT);
  }
  return out;
}

std::vector<std::string> parseAdeConfiguration(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string piece = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
    if (piece.empty()) throw std::invalid_argument("bad root type '" + text + "'");
    std::size_t i = 0;
    while (i < piece.size() && piece[i] >= '0' && piece[i] <= '9') ++i;
    int mult = 1;
    if (i > 0) mult = std::stoi(piece.substr(0, i));
    if (mult < 1 || i >= piece.size())
      throw std::invalid_argument("bad root type '" + text + "'");
    for (int k = 0; k < mult; ++k) out.push_back(piece.substr(i));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

int rootConfigurationRank(const std::vector<std::string>& types) {
  int total = 0;
  for (const std::string& t : types) {
    if (t.size() < 2) throw std::invalid_argument("bad ADE type '" + t + "'");
    char fam = t[0];
    int rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoi(t.substr(1), &used);
      if (used != t.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad ADE type '" + t + "'");
    }
    if (fam == 'A' && rank >= 1) {
    } else if (fam == 'D' && rank >= 2) {
    } else if (fam == 'E' && rank >= 6 && rank <= 8) {
    } else {
      throw std::invalid_argument("bad ADE type '" + t + "'");
    }
    total += rank;
  }
  return total;
}

}  // namespace coble
