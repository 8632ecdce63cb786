#pragma once

#include "coble/report.hpp"
#include "coble/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coble {

/// Built-in verification scenarios. Each one replays a worked computation
/// against frozen expected values and returns the resulting report.
enum class ScenarioId { Section4, Section5, WahlFamily, Degenerations, TChains };

std::vector<std::string> scenarioNames();
std::string scenarioName(ScenarioId id);
std::optional<ScenarioId> scenarioFromName(const std::string& name);

/// The blown-up model underlying the first scenario, assembled from the
/// embedded tables: basis H, R1..R9, E1, E2 with boundary classes C1, C2.
SurfaceModel section4Surface();

VerificationReport runSection4();
VerificationReport runSection5();
VerificationReport runWahlFamily(unsigned maxK);
VerificationReport runDegenerations(unsigned maxS);
VerificationReport runTChains(unsigned maxS);

VerificationReport runScenario(ScenarioId id);

/// Runs every scenario (concurrently) and merges the reports in the fixed
/// declaration order of ScenarioId.
VerificationReport runAllScenarios();

/// Checks that are expected to fail against the printed source values;
/// pairs of (check ref, check id). Passing this table to
/// applyKnownDiscrepancies downgrades exactly these failures.
const std::vector<std::pair<std::string, std::string>>& knownDiscrepancyTable();

}  // namespace coble
