// coble: command-line front end for the lattice verification library.
//
// Exit codes: 0 all checks passed, 1 at least one mathematical check
// failed, 2 input or usage error.

#include "coble/enriques.hpp"
#include "coble/scenarios.hpp"
#include "coble/singular.hpp"
#include "coble/surface_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace coble;

int emitReport(VerificationReport report, const std::string& format, bool allowKnown) {
  if (allowKnown) applyKnownDiscrepancies(report, knownDiscrepancyTable());
  std::cout << (format == "machine" ? renderMachine(report) : renderHuman(report));
  return report.allPassed() ? 0 : 1;
}

std::string chainStr(const HJChain& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ", ";
    out += intStr(chain[i]);
  }
  return out + "]";
}

HJChain parseChainSpec(const std::string& text) {
  HJChain chain;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t a = item.find_first_not_of(" \t");
    const std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty chain entry");
    chain.push_back(parseInt(item.substr(a, b - a + 1)));
  }
  if (chain.empty()) throw std::invalid_argument("empty chain");
  return chain;
}

IntMat readMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::vector<IntVec> rows;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    IntVec row;
    std::string token;
    try {
      while (fields >> token) row.push_back(parseInt(token));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineNo) + ": " + e.what());
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument(path + ":" + std::to_string(lineNo) +
                                  ": row length differs from the first row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument(path + ": no matrix rows found");
  return IntMat::fromRows(rows);
}

void printMatrix(const std::string& label, const IntMat& m) {
  std::cout << label << " =\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) std::cout << ' ';
      std::cout << intStr(m(i, j));
    }
    std::cout << '\n';
  }
}

int runHj(const std::string& nText, const std::string& aText) {
  Int n = parseInt(nText), a = parseInt(aText);
  HJChain chain = hjExpand(n, a);
  std::cout << intStr(n) << "/" << intStr(a) << " = " << chainStr(chain) << "\n";
  return 0;
}

int runWahl(const std::string& spec) {
  HJChain chain = parseChainSpec(spec);
  Rat value = hjEvaluate(chain);
  std::cout << "chain " << chainStr(chain) << "\n";
  std::cout << "value " << ratStr(value) << "\n";
  if (std::optional<CyclicQuotient> w = isWahl(chain)) {
    std::cout << "wahl n = " << intStr(w->n) << ", a = " << intStr(w->a) << "\n";
    std::cout << "singularity 1/" << intStr(w->n * w->n) << "(1, "
              << intStr(w->n * w->a - 1) << ")\n";
    return 0;
  }
  if (std::optional<TParams> t = isTChain(chain))
    std::cout << "not a Wahl chain (T-chain with d = " << intStr(t->d)
              << ", n = " << intStr(t->n) << ", a = " << intStr(t->a) << ")\n";
  else
    std::cout << "not a Wahl chain\n";
  return 1;
}

int runTChain(int s) {
  HJChain chain = tChainFromS(s);
  std::optional<TParams> t = isTChain(chain);
  std::cout << "chain " << chainStr(chain) << "\n";
  std::cout << "value " << ratStr(hjEvaluate(chain)) << "\n";
  if (t) {
    std::cout << "t-params d = " << intStr(t->d) << ", n = " << intStr(t->n)
              << ", a = " << intStr(t->a) << "\n";
    Int order = t->d * t->n * t->n;
    std::cout << "singularity 1/" << intStr(order) << "(1, "
              << intStr(t->d * t->n * t->a - 1) << ")\n";
  }
  std::cout << "milnor rank " << milnorRank(s) << "\n";
  return 0;
}

int runDegenerationList(int s) {
  for (const SingConfiguration& config : admissibleDegenerations(s))
    std::cout << config.str() << "\n";
  return 0;
}

int runSnf(const std::string& path) {
  IntMat m = readMatrixFile(path);
  SnfResult snf = smithNormalForm(m);
  std::cout << "input " << m.rows() << " x " << m.cols() << "\n";
  std::cout << "rank " << snf.rank() << "\n";
  std::cout << "divisors";
  for (const Int& d : snf.divisors) std::cout << ' ' << intStr(d);
  std::cout << "\n";
  printMatrix("d", snf.d);
  printMatrix("u", snf.u);
  printMatrix("v", snf.v);
  return 0;
}

int runSurfaceVerify(const std::string& path, const std::string& format,
                     bool allowKnown) {
  SurfaceModel model;
  try {
    model = loadSurfaceFile(path);
  } catch (const SurfaceParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return emitReport(surfaceVerificationReport(model), format, allowKnown);
}

std::string joinNames(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisor-class lattice checks for Coble surfaces and their "
               "Q-Gorenstein degenerations"};
  app.require_subcommand(0, 1);

  std::string format = "human";
  bool allowKnown = false;
  bool checkAll = false;
  auto addReportFlags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "report format: human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_flag("--allow-known-discrepancies", allowKnown,
                  "downgrade the documented source discrepancies instead of failing");
  };
  addReportFlags(&app);
  app.add_flag("--check-all", checkAll, "run every built-in scenario");

  std::string scenarioArg;
  CLI::App* run = app.add_subcommand("run", "replay a built-in scenario");
  run->add_option("scenario", scenarioArg, "one of: " + joinNames(scenarioNames()))
      ->required();
  addReportFlags(run);

  std::string hjN, hjA;
  CLI::App* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/a");
  hj->add_option("n", hjN, "numerator")->required();
  hj->add_option("a", hjA, "denominator, coprime to n and smaller")->required();

  std::string chainSpec;
  CLI::App* wahl = app.add_subcommand("wahl", "test a chain for the Wahl form n^2/(na-1)");
  wahl->add_option("chain", chainSpec, "comma-separated entries, like 2,2,6")->required();

  int tchainS = 0;
  CLI::App* tchain = app.add_subcommand("tchain", "the degeneration chain for a given s");
  tchain->add_option("s", tchainS, "number of boundary curves, s >= 1")->required();

  int degenS = 0;
  CLI::App* degen =
      app.add_subcommand("degenerations", "admissible singularity configurations");
  degen->add_option("s", degenS, "number of boundary curves, 1 <= s <= 10")->required();

  std::string matrixPath;
  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix-file", matrixPath, "whitespace-separated rows, '#' comments")
      ->required();

  CLI::App* surface = app.add_subcommand("surface", "operations on surface files");
  surface->require_subcommand(1);
  std::string surfacePath;
  CLI::App* verify = surface->add_subcommand("verify", "verify a surface description");
  verify->add_option("surface-file", surfacePath, "surface description file")->required();
  addReportFlags(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) {
      std::optional<ScenarioId> id = scenarioFromName(scenarioArg);
      if (!id) {
        std::cerr << "error: unknown scenario '" << scenarioArg
                  << "' (expected one of: " << joinNames(scenarioNames()) << ")\n";
        return 2;
      }
      return emitReport(runScenario(*id), format, allowKnown);
    }
    if (hj->parsed()) return runHj(hjN, hjA);
    if (wahl->parsed()) return runWahl(chainSpec);
    if (tchain->parsed()) return runTChain(tchainS);
    if (degen->parsed()) return runDegenerationList(degenS);
    if (snf->parsed()) return runSnf(matrixPath);
    if (verify->parsed()) return runSurfaceVerify(surfacePath, format, allowKnown);
    if (checkAll) return emitReport(runAllScenarios(), format, allowKnown);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << app.help();
  return 2;
}
