#pragma once

#include "itm/map.hpp"
#include "itm/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace support {

inline itm::Rational R(long long num, long long den = 1) {
  return itm::make_rational(itm::Int(num), itm::Int(den));
}

// The worked example used across the suite: three pieces, not tight,
// trap [1/12, 5/6), fits to an A-labeled map.
inline itm::Map t0() {
  return itm::Map({R(1, 3), R(2, 3)}, {R(1, 2), R(-1, 4), R(-1, 2)});
}

// Tight, label B without mirroring.
inline itm::Map case_b() {
  return itm::Map({R(1, 2), R(3, 4)}, {R(1, 2), R(-1, 8), R(-3, 4)});
}

// Tight, label B, whose induced map merges to a two-piece rotation.
inline itm::Map case_b_degenerate() {
  return itm::Map({R(1, 2), R(3, 4)}, {R(1, 2), R(-1, 4), R(-3, 4)});
}

// Tight, label B_1; the escaping image lands flush on the breakpoint.
inline itm::Map case_b1() {
  return itm::Map({R(1, 2), R(5, 8)}, {R(1, 2), R(1, 8), R(-5, 8)});
}

// Tight, label C_1.
inline itm::Map case_c1() {
  return itm::Map({R(5, 8), R(11, 16)}, {R(3, 8), R(1, 32), R(-11, 16)});
}

// Two pieces; restriction and rotation examples.
inline itm::Map map2() {
  return itm::Map({R(1, 2)}, {R(1, 3), R(-1, 2)});
}

// Regression input: the first pass of the endpoint formula gives
// [29/64, 48/64); iterating on the restriction settles on [29/64, 47/64).
inline itm::Map tx() {
  return itm::Map({R(26, 64), R(45, 64)}, {R(22, 64), R(2, 64), R(-16, 64)});
}

inline itm::Map identity_map() { return itm::Map({}, {R(0)}); }

// Rotation by t as a map; t = 0 gives the identity.
inline itm::Map rotation_map(const itm::Rational& t) {
  if (t == 0) {
    return identity_map();
  }
  return itm::Map({itm::Rational(1) - t}, {t, t - 1});
}

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      const std::uint64_t r = engine();
      if (r >= threshold) {
        return r % n;
      }
    }
  }

  // Uniform in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Tight canonical three-piece map on the (1/q)-grid. The two endpoint
// attainments are forced by construction; the pattern picks which pieces
// attain them (0: second/first, 1: third/second, 2: third/first).
inline itm::Map sample_tight3(Rng& rng, long long q, int pattern) {
  while (true) {
    const long long b1 = rng.range(1, q - 1);
    const long long b2 = rng.range(1, q - 1);
    if (b1 >= b2) {
      continue;
    }
    long long g1 = 0;
    long long g2 = 0;
    long long g3 = 0;
    if (pattern == 0) {
      g1 = q - b1;
      g2 = -b1;
      g3 = rng.range(-b2, -1);
      if (g3 == g2) {
        continue;
      }
    } else if (pattern == 1) {
      g3 = -b2;
      g2 = q - b2;
      g1 = rng.range(1, q - b1);
      if (g1 == g2) {
        continue;
      }
    } else {
      g3 = -b2;
      g1 = q - b1;
      g2 = rng.range(-b1, q - b2);
      if (g2 == 0) {
        continue;
      }
    }
    return itm::Map({R(b1, q), R(b2, q)}, {R(g1, q), R(g2, q), R(g3, q)});
  }
}

inline itm::Map sample_tight3(Rng& rng, long long q) {
  return sample_tight3(rng, q, static_cast<int>(rng.bounded(3)));
}

// The composite map outer after inner, as a piecewise translation.
inline itm::Map compose(const itm::Map& outer, const itm::Map& inner) {
  std::vector<itm::Rational> cuts;
  for (const itm::Rational& b : inner.interior_breakpoints()) {
    cuts.push_back(b);
  }
  for (std::size_t j = 0; j < inner.piece_count(); ++j) {
    const itm::Interval piece = inner.piece(j);
    const itm::Rational& g = inner.translation(j);
    for (const itm::Rational& b : outer.interior_breakpoints()) {
      const itm::Rational pullback = b - g;
      if (piece.left() < pullback && pullback < piece.right()) {
        cuts.push_back(pullback);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<itm::Rational> translations;
  itm::Rational left(0);
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    translations.push_back(outer.eval(inner.eval(left)) - left);
    if (i < cuts.size()) {
      left = cuts[i];
    }
  }
  return canonicalize(itm::Map(std::move(cuts), std::move(translations)));
}

}  // namespace support
