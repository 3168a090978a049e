#include "itm/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace itm {

Interval::Interval(Rational left, Rational right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_ < right_)) {
    throw std::invalid_argument("interval requires left < right");
  }
}

bool Interval::contains(const Rational& x) const {
  return left_ <= x && x < right_;
}

bool Interval::contains(const Interval& other) const {
  return left_ <= other.left_ && other.right_ <= right_;
}

bool Interval::overlaps(const Interval& other) const {
  return left_ < other.right_ && other.left_ < right_;
}

Interval Interval::translated(const Rational& shift) const {
  return Interval(left_ + shift, right_ + shift);
}

IntervalSet::IntervalSet(const Interval& piece) : pieces_{piece} {}

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) {
              return a.left() < b.left();
            });
  for (const Interval& p : pieces) {
    if (!pieces_.empty() && p.left() <= pieces_.back().right()) {
      if (p.right() > pieces_.back().right()) {
        pieces_.back() = Interval(pieces_.back().left(), p.right());
      }
    } else {
      pieces_.push_back(p);
    }
  }
}

IntervalSet IntervalSet::unit() {
  return IntervalSet(Interval(Rational(0), Rational(1)));
}

Rational IntervalSet::total_length() const {
  Rational sum = 0;
  for (const Interval& p : pieces_) {
    sum += p.length();
  }
  return sum;
}

Interval IntervalSet::hull() const {
  if (pieces_.empty()) {
    throw std::domain_error("hull of an empty interval set");
  }
  return Interval(pieces_.front().left(), pieces_.back().right());
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const Interval& p) {
                               return v < p.left();
                             });
  return it != pieces_.begin() && std::prev(it)->contains(x);
}

bool IntervalSet::contains(const IntervalSet& other) const {
  return set_difference(other, *this).empty();
}

IntervalSet IntervalSet::translated(const Rational& shift) const {
  IntervalSet result;
  result.pieces_.reserve(pieces_.size());
  for (const Interval& p : pieces_) {
    result.pieces_.push_back(p.translated(shift));
  }
  return result;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> pieces = a.pieces();
  pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
  return IntervalSet(std::move(pieces));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> pieces;
  auto ia = a.pieces().begin();
  auto ib = b.pieces().begin();
  while (ia != a.pieces().end() && ib != b.pieces().end()) {
    const Rational lo = std::max(ia->left(), ib->left());
    const Rational hi = std::min(ia->right(), ib->right());
    if (lo < hi) {
      pieces.emplace_back(lo, hi);
    }
    if (ia->right() < ib->right()) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return IntervalSet(std::move(pieces));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> pieces;
  auto ib = b.pieces().begin();
  for (const Interval& p : a.pieces()) {
    Rational cursor = p.left();
    while (ib != b.pieces().end() && ib->right() <= cursor) {
      ++ib;
    }
    auto it = ib;
    while (it != b.pieces().end() && it->left() < p.right()) {
      if (cursor < it->left()) {
        pieces.emplace_back(cursor, it->left());
      }
      cursor = std::max(cursor, it->right());
      ++it;
    }
    if (cursor < p.right()) {
      pieces.emplace_back(cursor, p.right());
    }
  }
  return IntervalSet(std::move(pieces));
}

}  // namespace itm
