#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace filtreg {

using GeneratorList = std::vector<std::string>;

/// One experiment: ring, module A/J, filtration of A/J, optional q.
struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<std::string> tags;
  std::uint32_t characteristic = 32003;
  std::vector<std::string> variables;
  GeneratorList j;
  GeneratorList i;
  /// Empty means the I-adic filtration.
  std::vector<GeneratorList> chain;
  std::optional<GeneratorList> q;
  /// Check identifiers or families ("A3", "A3.ii"); empty means all.
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  int cutoff_cap = 40;
  int retries = 5;
  /// Coefficients replayed by the first draw of the filter-regular sequence on G(F).
  std::vector<std::int64_t> first_sample;

  bool is_adic() const noexcept { return chain.empty(); }
};

/// Parses the line-oriented `key = value` format; throws ParseError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// Canonical text; parse_config(to_text(c)) reproduces c.
std::string to_text(const ExperimentConfig& c);

/// True if `id` is selected by the check list (exact id or family prefix).
bool check_selected(const ExperimentConfig& c, const std::string& id);

}  // namespace filtreg
