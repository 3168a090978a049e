#include "itm/map.hpp"

#include "doctest.h"
#include "itm/errors.hpp"
#include "support.hpp"

#include <stdexcept>
#include <vector>

using itm::Interval;
using itm::IntervalSet;
using itm::Map;
using itm::MapError;
using itm::Rational;
using itm::ValidationError;
using support::R;

namespace {

MapError kind_of(const std::vector<Rational>& breakpoints,
                 const std::vector<Rational>& translations) {
  try {
    Map map(breakpoints, translations);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return MapError::ArityMismatch;
}

}  // namespace

TEST_CASE("the worked example is valid and evaluates piecewise") {
  const Map map = support::t0();
  CHECK(map.piece_count() == 3);
  CHECK(map.eval(R(0)) == R(1, 2));
  CHECK(map.eval(R(1, 3)) == R(1, 12));
  CHECK(map.eval(R(5, 6)) == R(1, 3));
  CHECK_THROWS_AS(map.eval(R(1)), std::domain_error);
  CHECK_THROWS_AS(map.eval(R(-1, 10)), std::domain_error);
}

TEST_CASE("breakpoint accessors include the domain edges") {
  const Map map = support::t0();
  CHECK(map.breakpoint(0) == R(0));
  CHECK(map.breakpoint(1) == R(1, 3));
  CHECK(map.breakpoint(3) == R(1));
  CHECK(map.piece(0) == Interval(R(0), R(1, 3)));
  CHECK(map.piece(2) == Interval(R(2, 3), R(1)));
}

TEST_CASE("validation pinpoints the defect") {
  CHECK(kind_of({R(1, 2)}, {R(1, 4)}) == MapError::ArityMismatch);
  CHECK(kind_of({R(2, 3), R(1, 3)}, {R(1, 4), R(1, 4), R(-1, 4)}) ==
        MapError::UnsortedBreakpoints);
  CHECK(kind_of({R(3, 2)}, {R(1, 4), R(-1, 4)}) ==
        MapError::UnsortedBreakpoints);
  CHECK(kind_of({R(1, 3), R(1, 3)}, {R(1, 4), R(1, 4), R(-1, 4)}) ==
        MapError::ZeroLengthInterval);
  CHECK(kind_of({R(0)}, {R(1, 4), R(-1, 4)}) == MapError::ZeroLengthInterval);
  CHECK(kind_of({R(1)}, {R(1, 4), R(-1, 4)}) == MapError::ZeroLengthInterval);
  CHECK(kind_of({R(1, 2)}, {R(1, 2), R(0)}) == MapError::ZeroTranslation);
  CHECK(kind_of({R(1, 2)}, {R(3, 4), R(-1, 4)}) ==
        MapError::ImageEscapesDomain);
  CHECK(kind_of({R(1, 2)}, {R(1, 4), R(1, 4)}) ==
        MapError::ImageEscapesDomain);
  CHECK(kind_of({}, {R(1, 2)}) == MapError::ImageEscapesDomain);
}

TEST_CASE("the one-piece identity is the only one-piece map") {
  const Map identity = support::identity_map();
  CHECK(identity.piece_count() == 1);
  CHECK(identity.eval(R(1, 3)) == R(1, 3));
  CHECK(identity.full_image() == IntervalSet::unit());
}

TEST_CASE("validation error kinds have stable names") {
  CHECK(itm::to_string(MapError::ArityMismatch) == "arity-mismatch");
  CHECK(itm::to_string(MapError::UnsortedBreakpoints) ==
        "unsorted-breakpoints");
  CHECK(itm::to_string(MapError::ZeroLengthInterval) ==
        "zero-length-interval");
  CHECK(itm::to_string(MapError::ZeroTranslation) == "zero-translation");
  CHECK(itm::to_string(MapError::ImageEscapesDomain) ==
        "image-escapes-domain");
}

TEST_CASE("the image of the full domain merges overlapping pieces") {
  const Map map = support::t0();
  const IntervalSet image = map.full_image();
  CHECK(image == IntervalSet(Interval(R(1, 12), R(5, 6))));
  CHECK(map.image(IntervalSet(Interval(R(1, 3), R(2, 3)))) ==
        IntervalSet(Interval(R(1, 12), R(5, 12))));
  CHECK_THROWS_AS(map.image(IntervalSet(Interval(R(1, 2), R(3, 2)))),
                  std::domain_error);
}

TEST_CASE("images are monotone and contain evaluated points") {
  support::Rng rng(31);
  const Map map = support::t0();
  for (int i = 0; i < 100; ++i) {
    const Rational x = R(rng.range(0, 119), 120);
    CHECK(map.full_image().contains(map.eval(x)));
  }
  const IntervalSet small(Interval(R(0), R(1, 4)));
  const IntervalSet large(Interval(R(0), R(1, 2)));
  CHECK(large.contains(small));
  CHECK(map.image(large).contains(map.image(small)));
}

TEST_CASE("mirror reverses and negates, and is an involution") {
  const Map map = support::t0();
  const Map mirrored = itm::mirror(map);
  CHECK(mirrored == Map({R(1, 3), R(2, 3)}, {R(1, 2), R(1, 4), R(-1, 2)}));
  CHECK(itm::mirror(mirrored) == map);
}

TEST_CASE("mirror conjugates evaluation at piece interiors") {
  const Map map = support::case_c1();
  const Map mirrored = itm::mirror(map);
  support::Rng rng(37);
  int checked = 0;
  while (checked < 10) {
    const Rational x = R(rng.range(1, 191), 192);
    bool interior = true;
    for (const Rational& b : map.interior_breakpoints()) {
      if (Rational(1) - x == b) {
        interior = false;
      }
    }
    if (!interior) {
      continue;
    }
    CHECK(mirrored.eval(x) == Rational(1) - map.eval(Rational(1) - x));
    ++checked;
  }
}

TEST_CASE("canonicalize merges equal adjacent translations") {
  const Map redundant({R(1, 4), R(1, 2)}, {R(1, 4), R(1, 4), R(-1, 2)});
  CHECK(!itm::is_canonical(redundant));
  const Map merged = itm::canonicalize(redundant);
  CHECK(merged == Map({R(1, 2)}, {R(1, 4), R(-1, 2)}));
  CHECK(itm::is_canonical(merged));
  CHECK(itm::canonicalize(merged) == merged);
  for (int i = 0; i < 16; ++i) {
    const Rational x = R(i, 16);
    CHECK(redundant.eval(x) == merged.eval(x));
  }
  CHECK(itm::is_canonical(support::t0()));
  CHECK(itm::canonicalize(support::t0()) == support::t0());
}

TEST_CASE("grid_denominator is the lcm over all coordinates") {
  CHECK(support::t0().grid_denominator() == 12);
  CHECK(support::identity_map().grid_denominator() == 1);
  CHECK(support::case_c1().grid_denominator() == 32);
}

TEST_CASE("tightness means the image hull is the whole domain") {
  CHECK(!itm::is_tight(support::t0()));
  CHECK(itm::is_tight(support::case_b()));
  CHECK(itm::is_tight(support::case_b1()));
  CHECK(itm::is_tight(support::identity_map()));
  CHECK_THROWS_AS(itm::TightMap(support::t0()), itm::PreconditionError);
  const itm::TightMap tight(support::case_b());
  CHECK(tight.get() == support::case_b());
}

TEST_CASE("a tight map must also be canonical to wrap") {
  const Map tight_redundant({R(1, 4), R(1, 2)},
                            {R(1, 2), R(1, 2), R(-1, 2)});
  CHECK(itm::is_tight(tight_redundant));
  CHECK_THROWS_AS(itm::TightMap{tight_redundant}, itm::PreconditionError);
}

TEST_CASE("subdomain maps validate against their base") {
  const itm::SubdomainMap sub(Interval(R(0), R(5, 6)), {R(1, 2)},
                              {R(1, 3), R(-1, 2)});
  CHECK(sub.piece_count() == 2);
  CHECK(sub.cut(0) == R(0));
  CHECK(sub.cut(1) == R(1, 2));
  CHECK(sub.cut(2) == R(5, 6));
  CHECK(sub.eval(R(1, 4)) == R(7, 12));
  CHECK(sub.eval(R(1, 2)) == R(0));
  CHECK_THROWS_AS(sub.eval(R(9, 10)), std::domain_error);

  CHECK_THROWS_AS(itm::SubdomainMap(Interval(R(0), R(5, 6)), {R(9, 10)},
                                    {R(1, 3), R(-1, 2)}),
                  ValidationError);
  CHECK_THROWS_AS(itm::SubdomainMap(Interval(R(0), R(5, 6)), {R(1, 2)},
                                    {R(1, 2), R(-1, 2)}),
                  ValidationError);
}

TEST_CASE("rescaling a subdomain map lands on the unit interval") {
  const itm::SubdomainMap sub(Interval(R(0), R(5, 6)), {R(1, 2)},
                              {R(1, 3), R(-1, 2)});
  const auto [unit, conj] = sub.rescaled();
  CHECK(unit == Map({R(3, 5)}, {R(2, 5), R(-3, 5)}));
  CHECK(conj.offset == R(0));
  CHECK(conj.scale == R(5, 6));
  CHECK(conj.to_outer(R(3, 5)) == R(1, 2));
  CHECK(conj.to_unit(R(1, 2)) == R(3, 5));
  for (int i = 0; i < 20; ++i) {
    const Rational u = R(i, 20);
    CHECK(unit.eval(u) == conj.to_unit(sub.eval(conj.to_outer(u))));
  }
}
