#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "filtreg/filtration.hpp"
#include "filtreg/graded_model.hpp"
#include "filtreg/presented_module.hpp"

namespace filtreg {

/// Graded free resolution F_len -> ... -> F_0 -> M. maps[j] (j >= 1) lists
/// the images in F_{j-1} of the basis of F_j.
struct ResolutionData {
  std::vector<std::vector<int>> shifts;
  std::vector<std::vector<FreeVector>> maps;

  int length() const noexcept { return static_cast<int>(shifts.size()) - 1; }
  /// max_j (max shift in F_j) - j; nullopt for the zero module.
  std::optional<int> regularity() const;
  /// Number of shifts equal to k in F_j.
  std::size_t betti(int j, int k) const;
};

/// Minimal generators of a graded submodule of the free module with the given
/// shifts, chosen greedily in degree order.
std::vector<FreeVector> minimal_generating_subset(const PrimeField& f, std::vector<FreeVector> gens,
                                                  const std::vector<int>& shifts);
/// Generators of the syzygy module of `vs` inside A^rank (component shifts
/// `shifts`); the i-th syzygy coordinate has degree deg(vs[i]).
std::vector<FreeVector> syzygies(const PrimeField& f, const std::vector<FreeVector>& vs,
                                 const std::vector<int>& shifts);

/// Minimal when the presentation's generators are minimal.
ResolutionData minimal_resolution(const PresentedModule& m);
std::optional<int> reg_module(const PresentedModule& m);
/// Alternating sum of free-module dimensions equals dim M_k for k <= up_to.
bool resolution_is_exact(const ResolutionData& r, const PresentedModule& m, int up_to);
/// Ext^j_A(M, A), 0 <= j <= n.
PresentedModule ext_module(const PresentedModule& m, int j);

struct Multiplicity {
  int d;
  std::int64_t e;
};
/// d from the Hilbert series, e from stabilized d-th differences of
/// l(M/I^{n+1}M). Throws StabilizationNotReached past `cap`.
Multiplicity multiplicity(const Ideal& i, const PresentedModule& m, int cap = 40);

struct ExtendedDegreeValue {
  std::int64_t value;
  std::string flavor = "hdeg";
};
ExtendedDegreeValue hdeg(const Ideal& i, const PresentedModule& m);

struct MinimalReduction {
  Ideal q;
  int verified_at;
  int retries;
};
/// Reduction of I on A/J by dim(A/J) generic combinations of minimal generators.
MinimalReduction minimal_reduction(const Ideal& i, const Ideal& j, int d, CoefficientSource& src,
                                   int max_retries = 5, int cap = 20);

struct ScalarInvariants {
  std::size_t l_ai = 0;
  std::size_t l_mqm = 0;
  int i_m = 0;
  int mu_m = 1;
  std::optional<int> delta;
  int d = 0;
  bool depth_positive = true;
};
/// Degree shared by all minimal generators of I, if any.
std::optional<int> common_generator_degree(const Ideal& i);
ScalarInvariants scalar_invariants(const Ideal& i, const ModuleSpec& spec, const std::optional<MinimalReduction>& q);

/// dim_K of (A(-s))_k over A in nvars variables.
std::int64_t free_dim(std::size_t nvars, int k, int s);

}  // namespace filtreg
