#pragma once

#include "itm/interval.hpp"
#include "itm/map.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace itm {

// The image chain stabilized: steps is the least n with the (n+1)-st
// image of [0, 1) equal to the n-th, and limit is that stable set.
struct FiniteType {
  long long steps;
  IntervalSet limit;

  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

// The budget or the piece cap ran out first. Says nothing about the map;
// the detector is a semi-decision procedure.
struct Undecided {
  long long budget_spent;
  IntervalSet last_omega;

  friend bool operator==(const Undecided&, const Undecided&) = default;
};

using TypeVerdict = std::variant<FiniteType, Undecided>;

bool is_finite(const TypeVerdict& verdict);

inline constexpr std::size_t kDefaultPieceCap = 4096;

// Successive images of [0, 1): entry n is the n-th image. Stops after the
// first repeated entry, or after budget steps. Requires budget >= 1.
// Throws std::logic_error if the chain ever fails to be nested.
std::vector<IntervalSet> omega_sequence(const Map& map, long long budget);

// Iteration allowance scaled to the map's grid: 16 times the common
// denominator, saturated to the integer range.
long long default_type_budget(const Map& map);

// Decides whether the image chain reaches a fixed point within budget
// steps, giving up early when an image exceeds piece_cap pieces.
TypeVerdict detect_type(const Map& map, long long budget,
                        std::size_t piece_cap = kDefaultPieceCap);
TypeVerdict detect_type(const Map& map);

// Iterates J -> hull(image of J) starting from [0, 1) until the interval
// stops shrinking; the result contains its own image. Returns nullopt
// when the budget runs out first.
std::optional<Interval> hull_chain_trap(const Map& map, long long budget);
std::optional<Interval> hull_chain_trap(const Map& map);

}  // namespace itm
