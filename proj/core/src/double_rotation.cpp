#include "itm/double_rotation.hpp"

#include "itm/errors.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace itm {

DoubleRotation::DoubleRotation(const Rational& a, const Rational& b,
                               const Rational& c)
    : a_(frac_part(a)), b_(frac_part(b)), c_(c) {
  if (c_ <= 0 || c_ >= 1) {
    throw ValidationError(MapError::ZeroLengthInterval,
                          "arc split " + format_rational(c) +
                              " must lie strictly inside (0, 1)");
  }
}

Rational DoubleRotation::eval(const Rational& x) const {
  if (x < 0 || x >= 1) {
    throw std::domain_error("point " + format_rational(x) +
                            " outside [0, 1)");
  }
  return frac_part(x + (x < c_ ? a_ : b_));
}

Map to_map(const DoubleRotation& dr) {
  const Rational one(1);
  // (cut, translation) per piece, cut being the piece's right end.
  std::vector<std::pair<Rational, Rational>> raw;

  if (dr.a() > 0 && one - dr.a() < dr.c()) {
    // The first arc wraps at 1 - a.
    raw.emplace_back(one - dr.a(), dr.a());
    raw.emplace_back(dr.c(), dr.a() - one);
  } else {
    raw.emplace_back(dr.c(), dr.a());
  }
  if (dr.b() > 0 && one - dr.b() <= dr.c()) {
    // The whole second arc wraps.
    raw.emplace_back(one, dr.b() - one);
  } else if (dr.b() > 0) {
    raw.emplace_back(one - dr.b(), dr.b());
    raw.emplace_back(one, dr.b() - one);
  } else {
    raw.emplace_back(one, dr.b());
  }

  // Merge equal neighbors before validation so a fully static map can
  // collapse to the one-piece identity.
  std::vector<Rational> cuts;
  std::vector<Rational> translations;
  for (const auto& [cut, shift] : raw) {
    if (!translations.empty() && translations.back() == shift) {
      cuts.back() = cut;
    } else {
      cuts.push_back(cut);
      translations.push_back(shift);
    }
  }
  cuts.pop_back();
  return Map(std::move(cuts), std::move(translations));
}

TypeVerdict detect_type(const DoubleRotation& dr, long long budget,
                        std::size_t piece_cap) {
  return detect_type(to_map(dr), budget, piece_cap);
}

TypeVerdict detect_type(const DoubleRotation& dr) {
  const Map map = to_map(dr);
  return detect_type(map, default_type_budget(map));
}

}  // namespace itm
