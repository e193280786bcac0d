#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "filtreg/graded_model.hpp"

namespace filtreg {

/// Degree value where nullopt stands for -infinity.
using EndDegree = std::optional<int>;

EndDegree max_end(EndDegree a, EndDegree b);
/// a + k, keeping -infinity.
EndDegree shift_end(EndDegree a, int k);

struct RegularityOptions {
  /// Nonzero local cohomology above this degree raises CutoffExceeded.
  int cap = 40;
  /// Consecutive vanishing kernel degrees required; 0 picks max(4, dim M + 2).
  int window = 0;
  int max_retries = 5;
  /// Upper bound for the length of the filter-regular sequence; 0 picks dim M.
  int max_length = 0;
};

struct RegularityData {
  /// a_0..a_dim.
  std::vector<EndDegree> a;
  /// End degrees of (0 :_{E_i} z_{i+1}) for i < length, then of E_length, E_i = E/(z_1..z_i)E.
  std::vector<EndDegree> b;
  EndDegree reg;
  EndDegree geom;
  int dim = -1;
  std::vector<Polynomial> sequence;
  /// Rejected samples across the whole sequence.
  int retries = 0;
  /// Rejected samples before the first element was accepted.
  int first_retries = 0;
  int scanned_to = 0;
  int window = 0;
};

/// a_i, reg and geom of E from a filter-regular sequence of generic degree-one elements.
/// Throws GenericityFailure or CutoffExceeded.
RegularityData regularity(const GradedPieceModule& e, CoefficientSource& src, const RegularityOptions& opt = {});
RegularityData regularity(const GradedPieceModule& e, std::uint64_t seed, const RegularityOptions& opt = {});

/// a_0(E): end degree of H^0 of E.
EndDegree a0(const GradedPieceModule& e, std::uint64_t seed, const RegularityOptions& opt = {});

/// Coefficients of sum_i (-1)^i e_i binom(t + deg - i, deg - i) fitted to h.
struct PolynomialFit {
  std::vector<std::int64_t> e;
  /// Least n0 with h(n) = P(n) for all computed n >= n0.
  int postulation = 0;
  int start = 0;
};

struct HilbertData {
  /// H(n) = l(M/M_{n+1}) for n = 0..values.size()-1.
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> e;
  int postulation = 0;
};

/// Evaluates sum_i (-1)^i e_i binom(t + deg - i, deg - i), deg = e.size() - 1.
std::int64_t binomial_polynomial(const std::vector<std::int64_t>& e, std::int64_t t);

/// Interpolates from h(start..start+deg) and checks h at the next two degrees.
/// Throws InterpolationInconsistent when the guard fails or a coefficient is not integral.
PolynomialFit fit_binomial_polynomial(const std::vector<std::int64_t>& h, int deg, int start);

/// Hilbert–Samuel data of F from reg(G(F)); values run up to reg + d + 3.
HilbertData hilbert_coefficients(const GoodFiltration& f, const RegularityData& g);
/// Hilbert coefficients of a graded piece module of dimension dim >= 1, fitted on dim E_n
/// beyond reg (binomial basis binom(n + dim - 1 - i, dim - 1 - i)).
HilbertData module_hilbert_coefficients(const GradedPieceModule& e, const RegularityData& g);

}  // namespace filtreg
