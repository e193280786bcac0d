#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "filtreg/filtration.hpp"
#include "filtreg/linalg.hpp"

namespace filtreg {

enum class ModelKind { AssocGraded, FiberCone, AmbientG };
std::string to_string(ModelKind k);

/// Degree-n piece upper/lower of a graded model.
struct Piece {
  int degree = 0;
  Ideal upper;
  Ideal lower;
  /// Monomials standard for `lower` but not for `upper`, grevlex descending.
  std::vector<Monomial> basis;
  /// lifts[j] = basis[j] - NF_upper(basis[j]), an element of `upper`.
  std::vector<Polynomial> lifts;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

/// Degreewise realization of G(F) = (+) M_n/M_{n+1}, F_q(F) = (+) M_n/qM_n, or
/// G_I(A). Pieces are built on demand and cached.
class GradedPieceModule {
 public:
  static GradedPieceModule assoc_graded(const GoodFiltration& f, int cutoff);
  static GradedPieceModule fiber_cone(const GoodFiltration& f, const Ideal& q, int cutoff);
  static GradedPieceModule ambient(const Ideal& i, int cutoff);

  ModelKind kind() const noexcept { return s_->kind; }
  const GoodFiltration& source() const noexcept { return s_->source; }
  const std::optional<Ideal>& q() const noexcept { return s_->q; }
  int cutoff() const noexcept { return s_->cutoff; }
  /// Degree beyond which the module is generated over G_I(A): r(F).
  int generation_bound() const { return s_->source.reduction_index(); }

  /// Throws CutoffTooSmall for n > cutoff.
  const Piece& piece(int n) const;
  std::size_t dim(int n) const { return piece(n).basis.size(); }
  /// Builds pieces 0..n, in parallel across degrees.
  void prepare(int n) const;

  /// Coordinates of w (an element of piece(n).upper) in the basis of degree n.
  std::vector<Coeff> coordinates(const Polynomial& w, int n) const;
  /// Matrix of multiplication by x in I, degree n to degree n+1 (columns
  /// indexed by the degree-n basis).
  Matrix multiplication(const Polynomial& x, int n) const;

 private:
  struct State {
    ModelKind kind;
    GoodFiltration source;
    std::optional<Ideal> q;
    int cutoff;
    std::mutex mutex;
    std::vector<std::unique_ptr<Piece>> pieces;
  };
  explicit GradedPieceModule(std::shared_ptr<State> s) : s_(std::move(s)) {}
  Piece build(int n) const;

  std::shared_ptr<State> s_;
};

/// Supplies coefficient vectors for generic combinations.
class CoefficientSource {
 public:
  CoefficientSource(const PrimeField& f, std::uint64_t seed) : field_(f), rng_(seed) {}
  /// Replays `script` entries (one per draw) before switching to random draws.
  void set_script(std::vector<std::vector<Coeff>> script) { script_ = std::move(script); }
  /// `count` coefficients, uniformly random and nonzero unless scripted.
  std::vector<Coeff> draw(std::size_t count);

 private:
  PrimeField field_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Coeff>> script_;
  std::size_t scripted_used_ = 0;
};

/// Subset of generators of I whose images form a basis of I/mI.
std::vector<Polynomial> minimal_generators(const Ideal& i);

struct GenericElement {
  Polynomial element;
  std::uint64_t seed = 0;
  int retries = 0;
};

struct FilterRegularity {
  bool regular = false;
  /// Largest degree with nonzero kernel, nullopt for -infinity.
  std::optional<int> witness;
  /// Last degree examined.
  int checked_to = -1;
};

/// Kernel of x on E must vanish on `window` consecutive degrees, at least up
/// to the generation bound; examines degrees up to `limit`.
FilterRegularity is_filter_regular(const Polynomial& x, const GradedPieceModule& e, int window, int limit);

/// Random combination of the minimal generators of I, resampled until it is
/// filter-regular on every target. Throws GenericityFailure.
GenericElement sample_generic(const Ideal& i, const std::vector<const GradedPieceModule*>& targets,
                              CoefficientSource& src, std::uint64_t seed, int max_retries, int window,
                              int limit);

/// Both sides of h_G(n) = H_{F/xM}(n) - l((M_{n+1} : x)/M_n).
struct SinghSides {
  std::int64_t lhs;
  std::int64_t rhs;
  bool holds() const noexcept { return lhs == rhs; }
};
SinghSides singh_identity(const GoodFiltration& f, const Polynomial& x, int n);

}  // namespace filtreg
