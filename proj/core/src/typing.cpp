#include "itm/typing.hpp"

#include "itm/errors.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace itm {

bool is_finite(const TypeVerdict& verdict) {
  return std::holds_alternative<FiniteType>(verdict);
}

std::vector<IntervalSet> omega_sequence(const Map& map, long long budget) {
  if (budget < 1) {
    throw PreconditionError("omega_sequence requires budget >= 1");
  }
  std::vector<IntervalSet> chain{IntervalSet::unit()};
  for (long long n = 0; n < budget; ++n) {
    IntervalSet next = map.image(chain.back());
    if (!chain.back().contains(next)) {
      throw std::logic_error("image chain is not nested");
    }
    const bool fixed = next == chain.back();
    chain.push_back(std::move(next));
    if (fixed) {
      break;
    }
  }
  return chain;
}

long long default_type_budget(const Map& map) {
  const Int q = map.grid_denominator();
  const Int budget = 16 * q;
  const Int cap = std::numeric_limits<long long>::max();
  return budget > cap ? std::numeric_limits<long long>::max()
                      : static_cast<long long>(budget);
}

TypeVerdict detect_type(const Map& map, long long budget,
                        std::size_t piece_cap) {
  if (budget < 1) {
    throw PreconditionError("detect_type requires budget >= 1");
  }
  IntervalSet omega = IntervalSet::unit();
  for (long long n = 0; n < budget; ++n) {
    IntervalSet next = map.image(omega);
    if (!omega.contains(next)) {
      throw std::logic_error("image chain is not nested");
    }
    if (next == omega) {
      return FiniteType{n, std::move(omega)};
    }
    if (next.piece_count() > piece_cap) {
      return Undecided{n + 1, std::move(next)};
    }
    omega = std::move(next);
  }
  return Undecided{budget, std::move(omega)};
}

TypeVerdict detect_type(const Map& map) {
  return detect_type(map, default_type_budget(map));
}

std::optional<Interval> hull_chain_trap(const Map& map, long long budget) {
  Interval current(Rational(0), Rational(1));
  for (long long n = 0; n < budget; ++n) {
    Interval next = map.image(IntervalSet(current)).hull();
    if (next == current) {
      return current;
    }
    current = std::move(next);
  }
  return std::nullopt;
}

std::optional<Interval> hull_chain_trap(const Map& map) {
  return hull_chain_trap(map, default_type_budget(map));
}

}  // namespace itm
