#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "filtreg/bounds.hpp"
#include "filtreg/config.hpp"
#include "filtreg/regularity.hpp"

namespace filtreg {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::optional<int> index;
  CheckStatus status = CheckStatus::Skipped;
  std::optional<BigInt> computed;
  std::optional<BigInt> bound;
  /// Skip reason, or a short note on what was compared.
  std::string detail;
};

/// Invariants of one instance; absent values are left empty.
struct Invariants {
  std::optional<int> d;
  std::optional<bool> depth_positive;
  std::optional<bool> cohen_macaulay;
  std::optional<int> r;
  std::optional<std::int64_t> l_ai;
  std::optional<std::int64_t> e_im;
  std::optional<std::int64_t> hdeg_im;
  std::optional<std::int64_t> hdeg_m;
  std::optional<std::int64_t> hdeg_im_bar;
  std::optional<std::int64_t> h0_length;
  std::optional<int> reg_m;
  std::optional<int> i_m;
  std::optional<int> mu_m;
  std::optional<int> delta;
  std::optional<std::int64_t> l_mqm;
  std::vector<std::string> reduction;
  std::optional<RegularityData> g;
  std::optional<HilbertData> hilbert;
  std::optional<RegularityData> g_bar;
  std::optional<RegularityData> fiber;
  std::vector<std::int64_t> fiber_e;
  std::optional<RegularityData> ambient;
  std::optional<int> r_scaled;
};

struct RunError {
  std::string stage;
  std::string kind;
  std::string message;
  bool configuration = false;
};

struct InvariantReport {
  ExperimentConfig config;
  Invariants inv;
  std::vector<CheckResult> checks;
  std::optional<RunError> error;
  /// Stage name to seconds, in execution order.
  std::vector<std::pair<std::string, double>> timings;

  std::size_t count(CheckStatus s) const;
  /// No failed check and no error.
  bool ok() const { return !error && count(CheckStatus::Fail) == 0; }
};

struct EmitOptions {
  bool timings = true;
};

/// Stable field order; integers beyond 2^53 in magnitude become decimal strings,
/// -infinity becomes "-inf".
std::string to_json(const InvariantReport& r, const EmitOptions& opt = {});
std::string to_json(const std::vector<InvariantReport>& rs, const EmitOptions& opt = {});
/// One row per check.
std::string to_csv(const std::vector<InvariantReport>& rs);

/// Inverse of the check part of to_json, used for roundtrip tests.
std::vector<CheckResult> checks_from_json(const std::string& json);

}  // namespace filtreg
