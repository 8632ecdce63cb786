#include "coble/surface_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace coble {

namespace {

bool isLabelStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isLabelChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

struct Builder {
  std::size_t lineNo = 0;
  SurfaceModel model;
  bool haveSurface = false;
  bool haveCanonical = false;
  bool haveBoundary = false;
  bool gensClosed = false;  // set once the first class/canonical appears
  std::vector<std::pair<std::string, Int>> selfPairings;
  std::vector<std::tuple<std::string, std::string, Int>> crossPairings;

  [[noreturn]] void fail(const std::string& message) const {
    throw SurfaceParseError(lineNo, message);
  }

  Int parseIntToken(const std::string& t) const {
    try {
      return parseInt(t);
    } catch (const std::invalid_argument&) {
      fail("expected an integer, got '" + t + "'");
    }
  }

  bool isGen(const std::string& label) const {
    for (const std::string& l : model.basisLabels)
      if (l == label) return true;
    return false;
  }

  /// Linear combination over generators and previously defined classes.
  DivisorClass parseExpr(const std::string& text) const {
    DivisorClass total = model.zeroClass();
    std::size_t pos = 0;
    auto skipSpace = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skipSpace();
    if (pos == text.size()) fail("empty expression");
    bool first = true;
    while (pos < text.size()) {
      Int sign(1);
      if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1;
        ++pos;
        skipSpace();
      } else if (!first) {
        fail("expected '+' or '-' before '" + text.substr(pos) + "'");
      }
      std::size_t digits = pos;
      while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
      Int coeff(1);
      if (digits > pos) {
        coeff = parseIntToken(text.substr(pos, digits - pos));
        pos = digits;
        skipSpace();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skipSpace();
        }
      }
      if (pos == text.size() || !isLabelStart(text[pos]))
        fail("expected a generator or class label in expression");
      std::size_t start = pos;
      while (pos < text.size() && isLabelChar(text[pos])) ++pos;
      std::string label = text.substr(start, pos - start);
      DivisorClass term = model.zeroClass();
      if (isGen(label)) {
        term.coeffs[indexOf(label)] = Rat(1);
      } else if (auto it = model.classes.find(label); it != model.classes.end()) {
        term = it->second;
      } else {
        fail("unknown label '" + label + "' in expression");
      }
      total = total + Rat(sign * coeff) * term;
      skipSpace();
      first = false;
    }
    return total;
  }

  std::size_t indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < model.basisLabels.size(); ++i)
      if (model.basisLabels[i] == label) return i;
    fail("unknown generator '" + label + "'");
  }

  void requireSurface() const {
    if (!haveSurface) fail("the surface line must come first");
  }

  void handleSurface(const std::vector<std::string>& tokens) {
    if (haveSurface) fail("duplicate surface line");
    if (tokens.size() != 2) fail("usage: surface <name>");
    if (!model.basisLabels.empty() || !model.classes.empty())
      fail("the surface line must come first");
    model.name = tokens[1];
    haveSurface = true;
  }

  void handleGen(const std::vector<std::string>& tokens) {
    requireSurface();
    if (gensClosed) fail("generators must be declared before classes");
    if (tokens.size() != 3 || tokens[2].rfind("self=", 0) != 0)
      fail("usage: gen <label> self=<int>");
    const std::string& label = tokens[1];
    if (!isLabelStart(label[0])) fail("generator label must start with a letter");
    for (char c : label)
      if (!isLabelChar(c)) fail("invalid character in generator label '" + label + "'");
    if (isGen(label)) fail("duplicate generator '" + label + "'");
    model.basisLabels.push_back(label);
    selfPairings.emplace_back(label, parseIntToken(tokens[2].substr(5)));
  }

  void handlePair(const std::vector<std::string>& tokens) {
    requireSurface();
    if (gensClosed) fail("pairings must be declared before classes");
    if (tokens.size() != 4) fail("usage: pair <label> <label> <int>");
    if (!isGen(tokens[1])) fail("unknown generator '" + tokens[1] + "'");
    if (!isGen(tokens[2])) fail("unknown generator '" + tokens[2] + "'");
    if (tokens[1] == tokens[2]) fail("self-intersections belong on the gen line");
    for (const auto& [a, b, v] : crossPairings)
      if ((a == tokens[1] && b == tokens[2]) || (a == tokens[2] && b == tokens[1]))
        fail("pairing of '" + tokens[1] + "' and '" + tokens[2] + "' already set");
    crossPairings.emplace_back(tokens[1], tokens[2], parseIntToken(tokens[3]));
  }

  void closeGens() {
    if (gensClosed) return;
    if (model.basisLabels.empty()) fail("no generators declared");
    gensClosed = true;
    const std::size_t n = model.basisLabels.size();
    model.gram = IntMat(n, n);
    for (const auto& [label, self] : selfPairings) model.gram(indexOf(label), indexOf(label)) = self;
    for (const auto& [a, b, v] : crossPairings) {
      model.gram(indexOf(a), indexOf(b)) = v;
      model.gram(indexOf(b), indexOf(a)) = v;
    }
  }

  void handleClass(const std::vector<std::string>& tokens, const std::string& line) {
    requireSurface();
    closeGens();
    if (tokens.size() < 3 || tokens[2] != "=") fail("usage: class <name> = <expr>");
    const std::string& name = tokens[1];
    if (name.find('=') != std::string::npos) fail("class name may not contain '='");
    if (isGen(name)) fail("class name '" + name + "' collides with a generator");
    if (model.classes.count(name)) fail("duplicate class '" + name + "'");
    auto eq = line.find('=');
    model.classes[name] = parseExpr(line.substr(eq + 1));
  }

  void handleCanonical(const std::vector<std::string>& tokens, const std::string& line) {
    requireSurface();
    closeGens();
    if (haveCanonical) fail("duplicate canonical line");
    if (tokens.size() < 2 || tokens[1] != "=") fail("usage: canonical = <expr>");
    auto eq = line.find('=');
    model.canonical = parseExpr(line.substr(eq + 1));
    haveCanonical = true;
  }

  void handleBoundary(const std::vector<std::string>& tokens) {
    requireSurface();
    closeGens();
    if (haveBoundary) fail("duplicate boundary line");
    if (tokens.size() < 2) fail("usage: boundary <classname> ...");
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!model.classes.count(tokens[i])) fail("unknown class '" + tokens[i] + "'");
      model.boundaryOrder.push_back(tokens[i]);
    }
    haveBoundary = true;
  }
};

}  // namespace

SurfaceParseError::SurfaceParseError(std::size_t line, const std::string& details,
                                     const std::string& file)
    : std::runtime_error((file.empty() ? "line " + std::to_string(line)
                                       : file + ":" + std::to_string(line)) +
                         ": " + details),
      line(line),
      details(details) {}

SurfaceModel parseSurface(std::istream& in) {
  Builder b;
  std::string raw;
  while (std::getline(in, raw)) {
    ++b.lineNo;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];
    if (directive == "surface")
      b.handleSurface(tokens);
    else if (directive == "gen")
      b.handleGen(tokens);
    else if (directive == "pair")
      b.handlePair(tokens);
    else if (directive == "class")
      b.handleClass(tokens, line);
    else if (directive == "canonical")
      b.handleCanonical(tokens, line);
    else if (directive == "boundary")
      b.handleBoundary(tokens);
    else
      b.fail("unknown directive '" + directive + "'");
  }
  ++b.lineNo;  // EOF position for the closing complaints
  if (!b.haveSurface) b.fail("missing surface line");
  b.closeGens();
  if (!b.haveCanonical) b.fail("missing canonical line");
  return b.model;
}

SurfaceModel loadSurfaceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parseSurface(in);
  } catch (const SurfaceParseError& e) {
    throw SurfaceParseError(e.line, e.details, path);
  }
}

}  // namespace coble
