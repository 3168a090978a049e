#pragma once

#include "itm/interval.hpp"
#include "itm/map.hpp"
#include "itm/rational.hpp"

#include <vector>

namespace itm {

// One piece of a first-return system: every point of domain comes back to
// the base for the first time after return_time applications of the map,
// displaced in total by translation.
struct ReturnPiece {
  Interval domain;
  Rational translation;
  long long return_time;

  friend bool operator==(const ReturnPiece&, const ReturnPiece&) = default;
};

// First-return data on a base interval. The piece domains tile the base
// in left-to-right order.
struct ReturnSystem {
  Interval base;
  std::vector<ReturnPiece> pieces;

  friend bool operator==(const ReturnSystem&, const ReturnSystem&) = default;
};

// The orbit x, T(x), ..., T^steps(x), with steps + 1 entries.
std::vector<Rational> pointwise_orbit(const Map& map, const Rational& start,
                                      long long steps);

// True when every point of [0, 1) visits base within fewer than max_steps
// applications of the map, established by propagating whole intervals.
bool regular_check(const Map& map, const Interval& base, long long max_steps);

// Step allowance scaled to the map: 64 * (1 + ceil(1 / shortest piece)).
long long default_return_budget(const Map& map);

// Computes the first-return system on base by forward-propagating
// subintervals, splitting them at the map's breakpoints and at the edges
// of base, until every piece has returned. Uses only eval-style interval
// stepping, no closed forms. Throws BudgetExhausted when some piece fails
// to return within budget steps; that outcome makes no claim about
// regularity.
ReturnSystem first_return_map(const Map& map, const Interval& base,
                              long long budget);
ReturnSystem first_return_map(const Map& map, const Interval& base);

}  // namespace itm
