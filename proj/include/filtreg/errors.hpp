#pragma once

#include <stdexcept>
#include <string>

namespace filtreg {

/// Base of every error raised by the library. `kind()` is a stable identifier
/// used in reports and for mapping onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

  /// True for failures of the input (bad config, invalid filtration), false
  /// for failures of a computation on valid input.
  virtual bool is_configuration_error() const noexcept { return false; }

 private:
  std::string kind_;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
  bool is_configuration_error() const noexcept override { return true; }
};

struct ParseError : ConfigurationError {
  explicit ParseError(const std::string& what) : ConfigurationError("ParseError", what) {}
};

struct NotCofinite : Error {
  NotCofinite() : Error("NotCofinite", "quotient ring is not of finite length") {}
};

struct NotMPrimary : ConfigurationError {
  NotMPrimary() : ConfigurationError("NotMPrimary", "ideal is not primary to the maximal ideal") {}
};

struct NotGoodFiltration : ConfigurationError {
  NotGoodFiltration(int index, const std::string& why)
      : ConfigurationError("NotGoodFiltration",
                           "not a good filtration at index " + std::to_string(index) + ": " + why),
        index(index) {}
  int index;
};

struct QDoesNotContainI : ConfigurationError {
  QDoesNotContainI() : ConfigurationError("QDoesNotContainI", "q does not contain I") {}
};

struct BaseNotContained : ConfigurationError {
  BaseNotContained()
      : ConfigurationError("BaseNotContained", "quotient ideal does not contain the base ideal") {}
};

struct HypothesisFails : Error {
  explicit HypothesisFails(int n)
      : Error("HypothesisFails",
              "M_{n+1} is not contained in qM_n for n = " + std::to_string(n)),
        index(n) {}
  int index;
};

struct GenericityFailure : Error {
  explicit GenericityFailure(const std::string& what) : Error("GenericityFailure", what) {}
};

struct CutoffExceeded : Error {
  explicit CutoffExceeded(const std::string& what) : Error("CutoffExceeded", what) {}
};

struct CutoffTooSmall : Error {
  explicit CutoffTooSmall(int requested)
      : Error("CutoffTooSmall", "degree " + std::to_string(requested) + " beyond cutoff") {}
};

struct InterpolationInconsistent : Error {
  explicit InterpolationInconsistent(const std::string& what)
      : Error("InterpolationInconsistent", what) {}
};

struct StabilizationNotReached : Error {
  explicit StabilizationNotReached(const std::string& what)
      : Error("StabilizationNotReached", what) {}
};

struct ReductionCheckFailed : Error {
  explicit ReductionCheckFailed(const std::string& what) : Error("ReductionCheckFailed", what) {}
};

struct InvalidDimension : ConfigurationError {
  explicit InvalidDimension(int d)
      : ConfigurationError("InvalidDimension", "bound requires d >= 1, got " + std::to_string(d)) {}
};

struct IndexOutOfRange : ConfigurationError {
  explicit IndexOutOfRange(const std::string& what) : ConfigurationError("IndexOutOfRange", what) {}
};

struct BoundTooLarge : Error {
  explicit BoundTooLarge(const std::string& what) : Error("BoundTooLarge", what) {}
};

}  // namespace filtreg
