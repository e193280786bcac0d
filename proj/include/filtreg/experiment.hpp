#pragma once

#include <string>
#include <vector>

#include "filtreg/config.hpp"
#include "filtreg/report.hpp"

namespace filtreg {

/// Every check identifier the harness can emit.
const std::vector<std::string>& check_registry();

/// Computes all invariants and applicable checks. Errors from lower modules are
/// recorded in the report together with the failing stage.
InvariantReport run_experiment(const ExperimentConfig& cfg);

/// The built-in corpus.
std::vector<ExperimentConfig> builtin_corpus();

/// Runs the entries carrying `tag` (all when empty) on up to `jobs` threads.
/// The tag "fiber" also restricts the checks to the fiber-cone family.
std::vector<InvariantReport> run_corpus(const std::vector<ExperimentConfig>& entries, const std::string& tag = "",
                                        int jobs = 1);

/// 0 all pass; 1 check failure; 2 configuration error; 3 computation error.
int exit_code(const std::vector<InvariantReport>& reports);

}  // namespace filtreg
