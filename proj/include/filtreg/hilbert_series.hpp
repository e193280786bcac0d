#pragma once

#include <cstdint>
#include <vector>

#include "filtreg/ideal.hpp"

namespace filtreg {

/// Integer polynomial in t, coefficient of t^k at index k.
using SeriesPoly = std::vector<std::int64_t>;

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of A/(monomial ideal).
SeriesPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);
/// Numerator for A/J via the leading-term ideal; J must be homogeneous.
SeriesPoly hilbert_numerator(const Ideal& j);

SeriesPoly series_add(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly series_sub(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly series_shift(const SeriesPoly& a, int k);
/// Divides by (1-t) as often as possible, returning the quotient and the
/// number of divisions (capped at `max_times`).
std::pair<SeriesPoly, int> divide_one_minus_t(SeriesPoly a, int max_times);
std::int64_t series_eval_at_one(const SeriesPoly& a);

/// Krull dimension and multiplicity read off N(t)/(1-t)^n.
struct SeriesDimension {
  int dim;                 // -1 for the zero module
  std::int64_t degree;     // multiplicity, 0 for the zero module
};
SeriesDimension dimension_of(const SeriesPoly& numerator, std::size_t nvars);

}  // namespace filtreg
