#include "itm/return_map.hpp"

#include "itm/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace itm {

std::vector<Rational> pointwise_orbit(const Map& map, const Rational& start,
                                      long long steps) {
  if (steps < 0) {
    throw PreconditionError("pointwise_orbit requires steps >= 0");
  }
  std::vector<Rational> orbit{start};
  orbit.reserve(static_cast<std::size_t>(steps) + 1);
  for (long long n = 0; n < steps; ++n) {
    orbit.push_back(map.eval(orbit.back()));
  }
  return orbit;
}

bool regular_check(const Map& map, const Interval& base,
                   long long max_steps) {
  const IntervalSet target(base);
  IntervalSet pending = IntervalSet::unit();
  for (long long n = 1; n < max_steps; ++n) {
    pending = set_difference(map.image(pending), target);
    if (pending.empty()) {
      return true;
    }
  }
  return false;
}

long long default_return_budget(const Map& map) {
  Rational shortest = map.piece(0).length();
  for (std::size_t j = 1; j < map.piece_count(); ++j) {
    shortest = std::min(shortest, map.piece(j).length());
  }
  const Int bound = 64 * (1 + ceil_int(Rational(1) / shortest));
  const Int cap = std::numeric_limits<long long>::max();
  return bound > cap ? std::numeric_limits<long long>::max()
                     : static_cast<long long>(bound);
}

namespace {

// A block of points tracked by the propagation: the domain subinterval of
// the base it started from, the net displacement applied so far, and how
// many steps it has taken.
struct Block {
  Interval domain;
  Rational shift;
  long long time;
};

}  // namespace

ReturnSystem first_return_map(const Map& map, const Interval& base,
                              long long budget) {
  if (!Interval(Rational(0), Rational(1)).contains(base)) {
    throw PreconditionError("base interval must lie inside [0, 1)");
  }
  std::vector<ReturnPiece> returned;
  std::vector<Block> work{{base, Rational(0), 0}};

  // Splits the block's current position at the map's breakpoints and
  // advances each part by one step.
  const auto advance = [&](const Interval& position, const Rational& shift,
                           long long time) {
    if (time + 1 > budget) {
      throw BudgetExhausted(
          "a piece failed to return within " + std::to_string(budget) +
              " steps; raise the budget to distinguish slow return from "
              "non-regularity",
          budget);
    }
    for (std::size_t j = 0; j < map.piece_count(); ++j) {
      const Rational lo = std::max(position.left(), map.breakpoint(j));
      const Rational hi = std::min(position.right(), map.breakpoint(j + 1));
      if (lo < hi) {
        const Rational g = map.translation(j);
        work.push_back({Interval(lo - shift, hi - shift), shift + g,
                        time + 1});
      }
    }
  };

  while (!work.empty()) {
    const Block block = std::move(work.back());
    work.pop_back();
    const Interval position = block.domain.translated(block.shift);
    if (block.time == 0) {
      advance(position, block.shift, block.time);
      continue;
    }
    const Rational lo = std::max(position.left(), base.left());
    const Rational hi = std::min(position.right(), base.right());
    if (lo < hi) {
      returned.push_back({Interval(lo - block.shift, hi - block.shift),
                          block.shift, block.time});
      if (position.left() < lo) {
        advance(Interval(position.left(), lo), block.shift, block.time);
      }
      if (hi < position.right()) {
        advance(Interval(hi, position.right()), block.shift, block.time);
      }
    } else {
      advance(position, block.shift, block.time);
    }
  }

  std::sort(returned.begin(), returned.end(),
            [](const ReturnPiece& a, const ReturnPiece& b) {
              return a.domain.left() < b.domain.left();
            });
  Rational cursor = base.left();
  for (const ReturnPiece& piece : returned) {
    if (piece.domain.left() != cursor) {
      throw std::logic_error("return pieces do not tile the base");
    }
    cursor = piece.domain.right();
  }
  if (cursor != base.right()) {
    throw std::logic_error("return pieces do not tile the base");
  }
  return ReturnSystem{base, std::move(returned)};
}

ReturnSystem first_return_map(const Map& map, const Interval& base) {
  return first_return_map(map, base, default_return_budget(map));
}

}  // namespace itm
