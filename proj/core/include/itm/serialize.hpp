#pragma once

#include "itm/double_rotation.hpp"
#include "itm/interval.hpp"
#include "itm/map.hpp"
#include "itm/reduction.hpp"
#include "itm/typing.hpp"

#include <string>

namespace itm {

// All serialization is text based. Rationals appear as "p/q" strings with
// the denominator always present, intervals as ["left", "right"] pairs,
// and interval sets as arrays of such pairs. Parsers throw
// std::invalid_argument on malformed input; semantic validation errors
// from the underlying constructors propagate unchanged.

// {"breakpoints": [...], "translations": [...]}
std::string to_json(const Map& map);
Map map_from_json(const std::string& text);

// {"a": ..., "b": ..., "c": ...}
std::string to_json(const DoubleRotation& rotation);
DoubleRotation double_rotation_from_json(const std::string& text);

std::string to_json(const IntervalSet& set);

// {"verdict": "finite", "steps": n, "limit": [...]} or
// {"verdict": "undecided", "budget": n}
std::string to_json(const TypeVerdict& verdict);

// Every pipeline stage appears under a fixed key; stages that did not run
// are null. Terminal objects carry a "kind" discriminator.
std::string to_json(const ReductionTrace& trace);

// Multi-line human-readable rendering of a trace, one stage per line.
std::string pretty_trace(const ReductionTrace& trace);

}  // namespace itm
