#pragma once

#include "itm/map.hpp"
#include "itm/rational.hpp"
#include "itm/typing.hpp"

namespace itm {

// Circle map rotating [0, c) by a and [c, 1) by b, both modulo 1. The
// rotation amounts are stored reduced into [0, 1); c must lie strictly
// between 0 and 1 so both arcs are nonempty.
class DoubleRotation {
 public:
  DoubleRotation(const Rational& a, const Rational& b, const Rational& c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  // True when both arcs rotate by the same amount.
  bool is_plain_rotation() const { return a_ == b_; }

  // Throws std::domain_error when x is outside [0, 1).
  Rational eval(const Rational& x) const;

  friend bool operator==(const DoubleRotation&,
                         const DoubleRotation&) = default;

 private:
  Rational a_;
  Rational b_;
  Rational c_;
};

// Expresses the double rotation as a piecewise translation of [0, 1) by
// splitting each arc at its wrap point, then merging equal neighbors.
// The result has one to four pieces and acts pointwise like eval.
// Throws ValidationError (zero translation) when exactly one of a, b is
// zero; a = b = 0 yields the one-piece identity.
Map to_map(const DoubleRotation& dr);

// Image-chain stabilization test for the associated piecewise
// translation.
TypeVerdict detect_type(const DoubleRotation& dr, long long budget,
                        std::size_t piece_cap = kDefaultPieceCap);
TypeVerdict detect_type(const DoubleRotation& dr);

}  // namespace itm
