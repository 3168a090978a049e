#include "itm/map.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace itm {
namespace {

// Shared validation for piecewise translations of [base_left, base_right).
void validate_pieces(const Rational& base_left, const Rational& base_right,
                     const std::vector<Rational>& interior,
                     const std::vector<Rational>& translations) {
  if (translations.size() != interior.size() + 1) {
    throw ValidationError(MapError::ArityMismatch,
                          "expected one translation per piece: " +
                              std::to_string(interior.size() + 1) +
                              " pieces, " +
                              std::to_string(translations.size()) +
                              " translations");
  }
  Rational prev = base_left;
  for (const Rational& b : interior) {
    if (b < prev || b > base_right) {
      throw ValidationError(MapError::UnsortedBreakpoints,
                            "breakpoint " + format_rational(b) +
                                " out of order");
    }
    if (b == prev || b == base_right) {
      throw ValidationError(MapError::ZeroLengthInterval,
                            "breakpoint " + format_rational(b) +
                                " creates an empty piece");
    }
    prev = b;
  }
  if (translations.size() == 1) {
    if (translations[0] != 0) {
      throw ValidationError(MapError::ImageEscapesDomain,
                            "a single piece can only translate by 0");
    }
    return;
  }
  for (const Rational& g : translations) {
    if (g == 0) {
      throw ValidationError(MapError::ZeroTranslation,
                            "zero translation on a multi-piece map");
    }
  }
  Rational left = base_left;
  for (std::size_t j = 0; j < translations.size(); ++j) {
    const Rational right =
        j + 1 < translations.size() ? interior[j] : base_right;
    if (left + translations[j] < base_left ||
        right + translations[j] > base_right) {
      throw ValidationError(MapError::ImageEscapesDomain,
                            "piece [" + format_rational(left) + ", " +
                                format_rational(right) + ") + " +
                                format_rational(translations[j]) +
                                " leaves the domain");
    }
    left = right;
  }
}

}  // namespace

std::string to_string(MapError kind) {
  switch (kind) {
    case MapError::ArityMismatch:
      return "arity-mismatch";
    case MapError::UnsortedBreakpoints:
      return "unsorted-breakpoints";
    case MapError::ZeroLengthInterval:
      return "zero-length-interval";
    case MapError::ZeroTranslation:
      return "zero-translation";
    case MapError::ImageEscapesDomain:
      return "image-escapes-domain";
  }
  return "unknown";
}

ValidationError::ValidationError(MapError kind, const std::string& detail)
    : std::runtime_error(to_string(kind) + ": " + detail), kind_(kind) {}

PreconditionError::PreconditionError(const std::string& what_arg)
    : std::logic_error(what_arg) {}

BudgetExhausted::BudgetExhausted(const std::string& what_arg,
                                 long long budget_spent)
    : std::runtime_error(what_arg), budget_spent_(budget_spent) {}

InconsistencyError::InconsistencyError(const std::string& what_arg)
    : std::runtime_error(what_arg) {}

Map::Map(std::vector<Rational> interior_breakpoints,
         std::vector<Rational> translations)
    : interior_breakpoints_(std::move(interior_breakpoints)),
      translations_(std::move(translations)) {
  validate_pieces(Rational(0), Rational(1), interior_breakpoints_,
                  translations_);
}

Rational Map::breakpoint(std::size_t i) const {
  if (i == 0) {
    return Rational(0);
  }
  if (i == piece_count()) {
    return Rational(1);
  }
  return interior_breakpoints_[i - 1];
}

Interval Map::piece(std::size_t index) const {
  return Interval(breakpoint(index), breakpoint(index + 1));
}

Rational Map::eval(const Rational& x) const {
  if (x < 0 || x >= 1) {
    throw std::domain_error("point " + format_rational(x) +
                            " outside [0, 1)");
  }
  const auto it = std::upper_bound(interior_breakpoints_.begin(),
                                   interior_breakpoints_.end(), x);
  const auto index =
      static_cast<std::size_t>(it - interior_breakpoints_.begin());
  return x + translations_[index];
}

IntervalSet Map::image(const IntervalSet& set) const {
  if (!IntervalSet::unit().contains(set)) {
    throw std::domain_error("set not contained in [0, 1)");
  }
  std::vector<Interval> out;
  out.reserve(set.piece_count() + piece_count());
  for (const Interval& p : set.pieces()) {
    for (std::size_t j = 0; j < piece_count(); ++j) {
      const Rational lo = std::max(p.left(), breakpoint(j));
      const Rational hi = std::min(p.right(), breakpoint(j + 1));
      if (lo < hi) {
        out.emplace_back(lo + translations_[j], hi + translations_[j]);
      }
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet Map::full_image() const { return image(IntervalSet::unit()); }

Int Map::grid_denominator() const {
  Int q = common_denominator(interior_breakpoints_);
  return lcm(q, common_denominator(translations_));
}

Map mirror(const Map& map) {
  const std::size_t d = map.piece_count();
  std::vector<Rational> breakpoints;
  breakpoints.reserve(d > 0 ? d - 1 : 0);
  for (std::size_t i = d; i-- > 1;) {
    breakpoints.push_back(Rational(1) - map.breakpoint(i));
  }
  std::vector<Rational> translations;
  translations.reserve(d);
  for (std::size_t j = d; j-- > 0;) {
    translations.push_back(-map.translation(j));
  }
  return Map(std::move(breakpoints), std::move(translations));
}

bool is_canonical(const Map& map) {
  for (std::size_t j = 0; j + 1 < map.piece_count(); ++j) {
    if (map.translation(j) == map.translation(j + 1)) {
      return false;
    }
  }
  return true;
}

Map canonicalize(const Map& map) {
  std::vector<Rational> breakpoints;
  std::vector<Rational> translations{map.translation(0)};
  for (std::size_t j = 1; j < map.piece_count(); ++j) {
    if (map.translation(j) != translations.back()) {
      breakpoints.push_back(map.breakpoint(j));
      translations.push_back(map.translation(j));
    }
  }
  return Map(std::move(breakpoints), std::move(translations));
}

bool is_tight(const Map& map) {
  return map.full_image().hull() == Interval(Rational(0), Rational(1));
}

TightMap::TightMap(Map map) : map_(std::move(map)) {
  if (!is_tight(map_)) {
    throw PreconditionError("map is not tight");
  }
  if (!is_canonical(map_)) {
    throw PreconditionError("map is not canonical");
  }
}

SubdomainMap::SubdomainMap(Interval base, std::vector<Rational> interior_cuts,
                           std::vector<Rational> translations)
    : base_(std::move(base)),
      interior_cuts_(std::move(interior_cuts)),
      translations_(std::move(translations)) {
  validate_pieces(base_.left(), base_.right(), interior_cuts_, translations_);
}

Rational SubdomainMap::cut(std::size_t i) const {
  if (i == 0) {
    return base_.left();
  }
  if (i == piece_count()) {
    return base_.right();
  }
  return interior_cuts_[i - 1];
}

Interval SubdomainMap::piece(std::size_t index) const {
  return Interval(cut(index), cut(index + 1));
}

Rational SubdomainMap::eval(const Rational& x) const {
  if (!base_.contains(x)) {
    throw std::domain_error("point " + format_rational(x) +
                            " outside the base interval");
  }
  const auto it =
      std::upper_bound(interior_cuts_.begin(), interior_cuts_.end(), x);
  const auto index = static_cast<std::size_t>(it - interior_cuts_.begin());
  return x + translations_[index];
}

std::pair<Map, AffineConjugacy> SubdomainMap::rescaled() const {
  const AffineConjugacy conj{base_.left(), base_.length()};
  std::vector<Rational> breakpoints;
  breakpoints.reserve(interior_cuts_.size());
  for (const Rational& c : interior_cuts_) {
    breakpoints.push_back((c - conj.offset) / conj.scale);
  }
  std::vector<Rational> translations;
  translations.reserve(translations_.size());
  for (const Rational& g : translations_) {
    translations.push_back(g / conj.scale);
  }
  return {Map(std::move(breakpoints), std::move(translations)), conj};
}

}  // namespace itm
