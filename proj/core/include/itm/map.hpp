#pragma once

#include "itm/errors.hpp"
#include "itm/interval.hpp"
#include "itm/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace itm {

// Piecewise translation of [0, 1): interior breakpoints
// 0 < b_1 < ... < b_{d-1} < 1 cut the domain into d half-open pieces
// [b_{j-1}, b_j), and piece j moves rigidly by translations[j].
// Construction validates that the pieces have positive length, that every
// translated piece stays inside [0, 1), and that no translation is zero
// except for the one-piece identity map.
class Map {
 public:
  Map(std::vector<Rational> interior_breakpoints,
      std::vector<Rational> translations);

  std::size_t piece_count() const { return translations_.size(); }
  const std::vector<Rational>& interior_breakpoints() const {
    return interior_breakpoints_;
  }
  const std::vector<Rational>& translations() const { return translations_; }

  // breakpoint(0) = 0 and breakpoint(piece_count()) = 1.
  Rational breakpoint(std::size_t i) const;
  const Rational& translation(std::size_t index) const {
    return translations_[index];
  }
  // The half-open domain piece [b_{index}, b_{index+1}), zero-based.
  Interval piece(std::size_t index) const;

  // Image of a point: x plus the translation of the piece containing x.
  // Throws std::domain_error when x is outside [0, 1).
  Rational eval(const Rational& x) const;

  // Exact image of a set of points. Throws std::domain_error when the set
  // is not contained in [0, 1).
  IntervalSet image(const IntervalSet& set) const;

  // Image of the whole domain.
  IntervalSet full_image() const;

  // Least common multiple of all breakpoint and translation denominators;
  // every coordinate the map can produce lives on this grid.
  Int grid_denominator() const;

  friend bool operator==(const Map&, const Map&) = default;

 private:
  std::vector<Rational> interior_breakpoints_;
  std::vector<Rational> translations_;
};

// The conjugate of map by the reflection x -> 1 - x, re-anchored to
// half-open pieces: breakpoints reverse around 1/2 and translations
// reverse and flip sign. An involution.
Map mirror(const Map& map);

// True when no two consecutive pieces share a translation.
bool is_canonical(const Map& map);

// Merges consecutive pieces with equal translations; the result acts on
// every point exactly as the input does.
Map canonicalize(const Map& map);

// True when the hull of the image of [0, 1) is all of [0, 1), i.e. the
// map leaves no slack at either end of the domain.
bool is_tight(const Map& map);

// A map checked at construction to be tight and canonical. Throws
// PreconditionError otherwise.
class TightMap {
 public:
  explicit TightMap(Map map);
  const Map& get() const { return map_; }

  friend bool operator==(const TightMap&, const TightMap&) = default;

 private:
  Map map_;
};

// Order-preserving affine change of coordinates between [0, 1) and a
// target interval: unit coordinate u corresponds to offset + scale * u.
struct AffineConjugacy {
  Rational offset;
  Rational scale;

  Rational to_outer(const Rational& u) const { return offset + scale * u; }
  Rational to_unit(const Rational& x) const { return (x - offset) / scale; }

  friend bool operator==(const AffineConjugacy&,
                         const AffineConjugacy&) = default;
};

// Piecewise translation defined on a subinterval of [0, 1), with the same
// validity rules as Map relative to its base interval: interior cuts lie
// strictly inside the base, pieces translate into the base, and no
// translation is zero unless there is a single piece.
class SubdomainMap {
 public:
  SubdomainMap(Interval base, std::vector<Rational> interior_cuts,
               std::vector<Rational> translations);

  const Interval& base() const { return base_; }
  std::size_t piece_count() const { return translations_.size(); }
  const std::vector<Rational>& interior_cuts() const { return interior_cuts_; }
  const std::vector<Rational>& translations() const { return translations_; }

  // cut(0) is the base's left end, cut(piece_count()) its right end.
  Rational cut(std::size_t i) const;
  Interval piece(std::size_t index) const;

  // Throws std::domain_error when x is outside the base.
  Rational eval(const Rational& x) const;

  // Affinely rescales the base onto [0, 1). Returns the unit-domain map
  // and the conjugacy taking unit coordinates back to base coordinates.
  std::pair<Map, AffineConjugacy> rescaled() const;

  friend bool operator==(const SubdomainMap&, const SubdomainMap&) = default;

 private:
  Interval base_;
  std::vector<Rational> interior_cuts_;
  std::vector<Rational> translations_;
};

}  // namespace itm
