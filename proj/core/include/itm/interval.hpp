#pragma once

#include "itm/rational.hpp"

#include <cstddef>
#include <vector>

namespace itm {

// Half-open interval [left, right) with rational endpoints. Empty and
// degenerate intervals are never represented; construction requires
// left < right.
class Interval {
 public:
  Interval(Rational left, Rational right);

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }
  Rational length() const { return right_ - left_; }

  bool contains(const Rational& x) const;
  bool contains(const Interval& other) const;
  // True when the two intervals share at least one point.
  bool overlaps(const Interval& other) const;

  Interval translated(const Rational& shift) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational left_;
  Rational right_;
};

// Finite union of half-open intervals in canonical form: pieces sorted,
// pairwise disjoint, and never touching (touching pieces merge), so two
// sets are pointwise equal exactly when their piece lists are identical.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(const Interval& piece);
  // Accepts pieces in any order, overlapping or touching.
  explicit IntervalSet(std::vector<Interval> pieces);

  // The whole domain [0, 1).
  static IntervalSet unit();

  bool empty() const { return pieces_.empty(); }
  std::size_t piece_count() const { return pieces_.size(); }
  const std::vector<Interval>& pieces() const { return pieces_; }

  Rational total_length() const;
  // Smallest interval containing the set. Throws std::domain_error on the
  // empty set.
  Interval hull() const;

  bool contains(const Rational& x) const;
  bool contains(const IntervalSet& other) const;

  IntervalSet translated(const Rational& shift) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
// Points of a that are not in b.
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

}  // namespace itm
