#include "itm/reduction.hpp"

#include "itm/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace itm {
namespace {

constexpr const char* kWitnessLeftTie = "left endpoint attained twice";
constexpr const char* kWitnessRightTie = "right endpoint attained twice";
constexpr const char* kWitnessEqualEdges =
    "equal edge pieces with leftward middle piece";
constexpr const char* kWitnessPeriodicEscape =
    "zero net displacement after escape";

// The pieces of the map clipped to a window, in domain order.
std::vector<Fragment> clip_pieces(const Map& map, const Interval& window) {
  std::vector<Fragment> pieces;
  for (std::size_t j = 0; j < map.piece_count(); ++j) {
    const Rational lo = std::max(window.left(), map.breakpoint(j));
    const Rational hi = std::min(window.right(), map.breakpoint(j + 1));
    if (lo < hi) {
      pieces.push_back({Interval(lo, hi), map.translation(j)});
    }
  }
  return pieces;
}

// One application of the endpoint formula to a piece list.
Interval one_pass(const std::vector<Fragment>& pieces) {
  std::optional<Rational> left;
  std::optional<Rational> right;
  for (const Fragment& p : pieces) {
    if (p.translation < 0) {
      const Rational candidate = p.span.left() + p.translation;
      if (!left || candidate < *left) {
        left = candidate;
      }
    } else if (p.translation > 0) {
      const Rational candidate = p.span.right() + p.translation;
      if (!right || candidate > *right) {
        right = candidate;
      }
    }
  }
  if (!left || !right) {
    throw PreconditionError(
        "endpoint formula needs pieces moving in both directions; the map "
        "is reducible or degenerate");
  }
  if (!(*left < *right)) {
    throw std::logic_error("endpoint formula produced an empty interval");
  }
  return Interval(std::move(*left), std::move(*right));
}

long long saturated(const Int& value) {
  const Int cap = std::numeric_limits<long long>::max();
  return value > cap ? std::numeric_limits<long long>::max()
                     : static_cast<long long>(value);
}

}  // namespace

std::string to_string(Reducibility verdict) {
  switch (verdict) {
    case Reducibility::Irreducible:
      return "irreducible";
    case Reducibility::ReducibleLeft:
      return "reducible-left";
    case Reducibility::ReducibleRight:
      return "reducible-right";
  }
  return "unknown";
}

Reducibility reducibility_case(const Map& map) {
  const IntervalSet image = map.full_image();
  const auto misses = [&](const Interval& piece) {
    return set_intersection(image, IntervalSet(piece)).empty();
  };
  if (misses(map.piece(0))) {
    return Reducibility::ReducibleLeft;
  }
  if (misses(map.piece(map.piece_count() - 1))) {
    return Reducibility::ReducibleRight;
  }
  return Reducibility::Irreducible;
}

EdgeDrop drop_edge_interval(const Map& map) {
  const Reducibility side = reducibility_case(map);
  if (side == Reducibility::Irreducible) {
    throw PreconditionError("drop_edge_interval requires a reducible map");
  }
  const std::size_t d = map.piece_count();
  const bool left = side == Reducibility::ReducibleLeft;
  const Interval base = left ? Interval(map.breakpoint(1), Rational(1))
                             : Interval(Rational(0), map.breakpoint(d - 1));
  std::vector<Rational> cuts;
  std::vector<Rational> translations;
  for (std::size_t j = left ? 1 : 0; j < (left ? d : d - 1); ++j) {
    if (!translations.empty()) {
      cuts.push_back(map.breakpoint(j));
    }
    translations.push_back(map.translation(j));
  }
  SubdomainMap sub(base, std::move(cuts), std::move(translations));
  auto [unit, conj] = sub.rescaled();
  return EdgeDrop{std::move(unit), conj, side};
}

Cell cell(const Map& map) {
  if (map.piece_count() < 2) {
    throw PreconditionError("cell requires at least two pieces");
  }
  Cell result;
  std::optional<Rational> best_left;
  std::optional<Rational> best_right;
  for (std::size_t j = 0; j < map.piece_count(); ++j) {
    const Rational& g = map.translation(j);
    if (g < 0) {
      const Rational candidate = map.breakpoint(j) + g;
      if (!best_left || candidate < *best_left) {
        best_left = candidate;
        result.j = static_cast<int>(j) + 1;
      } else if (candidate == *best_left) {
        result.tie = true;
      }
    } else {
      const Rational candidate = map.breakpoint(j + 1) + g;
      if (!best_right || candidate > *best_right) {
        best_right = candidate;
        result.k = static_cast<int>(j) + 1;
      } else if (candidate == *best_right) {
        result.tie = true;
      }
    }
  }
  if (!best_left || !best_right) {
    throw PreconditionError(
        "cell needs pieces moving in both directions; the map is reducible "
        "or degenerate");
  }
  return result;
}

Interval trap(const Map& map) {
  Interval current(Rational(0), Rational(1));
  while (true) {
    Interval next = one_pass(clip_pieces(map, current));
    if (next == current) {
      return current;
    }
    if (!current.contains(next)) {
      throw std::logic_error("endpoint formula escaped its own interval");
    }
    current = std::move(next);
  }
}

Truncation truncate(const Map& map, const Cell& expected) {
  if (cell(map) != expected) {
    throw PreconditionError("cell does not match the map");
  }
  const Interval delta = trap(map);
  std::vector<Fragment> lefts;
  std::vector<Fragment> rights;
  std::vector<Rational> cuts;
  std::vector<Rational> translations;
  bool left_straddle = false;
  bool right_straddle = false;
  for (std::size_t j = 0; j < map.piece_count(); ++j) {
    const Rational l = map.breakpoint(j);
    const Rational r = map.breakpoint(j + 1);
    const Rational& g = map.translation(j);
    if (l < delta.left()) {
      lefts.push_back({Interval(l, std::min(r, delta.left())), g});
      if (r > delta.left()) {
        left_straddle = true;
      }
    }
    const Rational lo = std::max(l, delta.left());
    const Rational hi = std::min(r, delta.right());
    if (lo < hi) {
      if (!translations.empty()) {
        cuts.push_back(lo);
      }
      translations.push_back(g);
    }
    if (r > delta.right()) {
      rights.push_back({Interval(std::max(l, delta.right()), r), g});
      if (l < delta.right()) {
        right_straddle = true;
      }
    }
  }
  return Truncation{
      SubdomainMap(delta, std::move(cuts), std::move(translations)),
      expected,
      std::move(lefts),
      std::move(rights),
      left_straddle,
      right_straddle};
}

Truncation truncate(const Map& map) { return truncate(map, cell(map)); }

Map untruncate(const Truncation& truncation) {
  const auto inconsistent = [](const std::string& what) {
    return InconsistencyError("untruncate: " + what);
  };
  const SubdomainMap& restricted = truncation.restricted;
  const Interval& delta = restricted.base();

  Rational cursor(0);
  for (const Fragment& f : truncation.left_fragments) {
    if (f.span.left() != cursor) {
      throw inconsistent("fragments do not tile the left gap");
    }
    cursor = f.span.right();
  }
  if (cursor != delta.left()) {
    throw inconsistent("fragments do not tile the left gap");
  }
  cursor = delta.right();
  for (const Fragment& f : truncation.right_fragments) {
    if (f.span.left() != cursor) {
      throw inconsistent("fragments do not tile the right gap");
    }
    cursor = f.span.right();
  }
  if (cursor != 1) {
    throw inconsistent("fragments do not tile the right gap");
  }
  if (truncation.left_straddle &&
      (truncation.left_fragments.empty() ||
       truncation.left_fragments.back().translation !=
           restricted.translations().front())) {
    throw inconsistent("left straddle does not continue the edge piece");
  }
  if (truncation.right_straddle &&
      (truncation.right_fragments.empty() ||
       truncation.right_fragments.front().translation !=
           restricted.translations().back())) {
    throw inconsistent("right straddle does not continue the edge piece");
  }

  std::vector<Rational> breakpoints;
  std::vector<Rational> translations;
  const auto& lefts = truncation.left_fragments;
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    translations.push_back(lefts[i].translation);
    if (i + 1 < lefts.size()) {
      breakpoints.push_back(lefts[i].span.right());
    }
  }
  if (!lefts.empty() && !truncation.left_straddle) {
    breakpoints.push_back(delta.left());
  }
  const auto& inner = restricted.translations();
  for (std::size_t j = 0; j < inner.size(); ++j) {
    if (j == 0 && truncation.left_straddle) {
      continue;  // merged with the last left fragment
    }
    translations.push_back(inner[j]);
  }
  for (const Rational& c : restricted.interior_cuts()) {
    breakpoints.push_back(c);
  }
  const auto& rights = truncation.right_fragments;
  if (!rights.empty() && !truncation.right_straddle) {
    breakpoints.push_back(delta.right());
  }
  for (std::size_t i = 0; i < rights.size(); ++i) {
    if (!(i == 0 && truncation.right_straddle)) {
      translations.push_back(rights[i].translation);
    }
    if (i + 1 < rights.size()) {
      breakpoints.push_back(rights[i].span.right());
    }
  }

  try {
    Map rebuilt(std::move(breakpoints), std::move(translations));
    if (truncate(rebuilt) != truncation) {
      throw inconsistent("data does not reproduce under re-truncation");
    }
    return rebuilt;
  } catch (const ValidationError& e) {
    throw inconsistent(std::string("rebuilt map is invalid: ") + e.what());
  } catch (const PreconditionError& e) {
    throw inconsistent(std::string("rebuilt map cannot be re-truncated: ") +
                       e.what());
  }
}

FitResult fit(const Map& map) {
  Truncation truncation = truncate(map);
  auto [unit, conj] = truncation.restricted.rescaled();
  return FitResult{TightMap(canonicalize(unit)), truncation.restricted.base(),
                   conj};
}

std::string to_string(const CaseLabel& label) {
  switch (label.kind) {
    case CaseLabel::Kind::A:
      return "A";
    case CaseLabel::Kind::APrime:
      return "A'";
    case CaseLabel::Kind::B:
      return "B";
    case CaseLabel::Kind::BStep:
      return "B_" + std::to_string(label.step);
    case CaseLabel::Kind::CStep:
      return "C_" + std::to_string(label.step);
    case CaseLabel::Kind::Boundary:
      return "boundary";
  }
  return "unknown";
}

long long escape_index_bound(const TightMap& map) {
  if (map.get().piece_count() != 3) {
    throw PreconditionError("escape_index_bound requires three pieces");
  }
  return saturated(ceil_int(Rational(1) / map.get().translation(0)) + 1);
}

Classification classify_tight3(const TightMap& map) {
  const Map& m = map.get();
  if (m.piece_count() != 3) {
    throw PreconditionError("classify_tight3 requires three pieces");
  }
  if (!(m.translation(0) > 0) || !(m.translation(2) < 0)) {
    throw std::logic_error("tight three-piece map with misdirected edges");
  }

  // Which leftward piece lands on 0, which rightward piece reaches 1.
  int left_index = 0;
  int left_hits = 0;
  int right_index = 0;
  int right_hits = 0;
  for (int i = 1; i <= 3; ++i) {
    const Rational& g = m.translation(static_cast<std::size_t>(i - 1));
    if (g < 0 && m.breakpoint(static_cast<std::size_t>(i - 1)) + g == 0) {
      left_index = left_index == 0 ? i : left_index;
      ++left_hits;
    }
    if (g > 0 && m.breakpoint(static_cast<std::size_t>(i)) + g == 1) {
      right_index = right_index == 0 ? i : right_index;
      ++right_hits;
    }
  }
  if (left_hits == 0 || right_hits == 0) {
    throw std::logic_error("tight map fails endpoint attainment");
  }
  if (left_hits > 1) {
    return {CaseLabel{CaseLabel::Kind::Boundary, 0, kWitnessLeftTie}, false};
  }
  if (right_hits > 1) {
    return {CaseLabel{CaseLabel::Kind::Boundary, 0, kWitnessRightTie}, false};
  }

  if (left_index == 2 && right_index == 1) {
    return {CaseLabel{CaseLabel::Kind::A, 0, ""}, false};
  }
  if (left_index == 3 && right_index == 2) {
    return {CaseLabel{CaseLabel::Kind::APrime, 0, ""}, false};
  }
  if (left_index != 3 || right_index != 1) {
    throw std::logic_error("impossible endpoint attainment pattern");
  }

  // Last piece leftmost, first piece rightmost: mirror so the first piece
  // is at least as long as the last, then split on the middle direction.
  const bool mirrored =
      m.breakpoint(1) < Rational(1) - m.breakpoint(2);
  const Map work = mirrored ? mirror(m) : m;
  const Rational beta1 = work.breakpoint(1);
  const Rational beta2 = work.breakpoint(2);
  const Rational gamma1 = work.translation(0);
  const Rational gamma2 = work.translation(1);
  const Rational gamma3 = work.translation(2);

  if (gamma2 < 0) {
    if (beta1 == Rational(1) - beta2) {
      return {CaseLabel{CaseLabel::Kind::Boundary, 0, kWitnessEqualEdges},
              mirrored};
    }
    return {CaseLabel{CaseLabel::Kind::B, 0, ""}, mirrored};
  }

  // The image of the last piece marches across the first piece by gamma1
  // per step until it clears the breakpoint.
  const long long bound =
      saturated(ceil_int(Rational(1) / gamma1) + 1);
  for (long long m_step = 1;; ++m_step) {
    if (m_step - 1 > bound) {
      throw std::logic_error("escape walk exceeded its forced bound");
    }
    const Rational shift = gamma3 + (m_step - 1) * gamma1;
    const Rational l = beta2 + shift;
    const Rational r = Rational(1) + shift;
    if (r <= beta1) {
      continue;
    }
    const int index = static_cast<int>(m_step) - 1;
    if (l >= beta1) {
      if (shift == 0) {
        return {CaseLabel{CaseLabel::Kind::Boundary, 0,
                          kWitnessPeriodicEscape},
                mirrored};
      }
      return {CaseLabel{CaseLabel::Kind::BStep, index, ""}, mirrored};
    }
    return {CaseLabel{CaseLabel::Kind::CStep, index, ""}, mirrored};
  }
}

DoubleRotation as_double_rotation(const TightMap& map) {
  const Map& m = map.get();
  std::optional<DoubleRotation> dr;
  if (m.piece_count() == 2) {
    dr.emplace(m.translation(0), m.translation(0), m.breakpoint(1));
  } else if (m.piece_count() == 3) {
    const Classification cls = classify_tight3(map);
    if (cls.label.kind == CaseLabel::Kind::A) {
      dr.emplace(Rational(1) - m.breakpoint(1), Rational(1) + m.translation(2),
                 m.breakpoint(2));
    } else if (cls.label.kind == CaseLabel::Kind::APrime) {
      dr.emplace(m.translation(0), Rational(1) - m.breakpoint(2),
                 m.breakpoint(1));
    } else {
      throw PreconditionError("as_double_rotation requires label A or A'");
    }
  } else {
    throw PreconditionError("as_double_rotation requires two or three pieces");
  }
  if (to_map(*dr) != m) {
    throw std::logic_error("double rotation does not reproduce the map");
  }
  return *dr;
}

Rotation rotation_from_itm2(const Map& map) {
  if (map.piece_count() != 2) {
    throw PreconditionError("rotation_from_itm2 requires two pieces");
  }
  const Rational& gamma1 = map.translation(0);
  const Rational& gamma2 = map.translation(1);
  if (!(gamma1 > 0) || !(gamma2 < 0)) {
    throw std::logic_error("two-piece map with misdirected translations");
  }
  return Rotation{Interval(map.breakpoint(1) + gamma2,
                           map.breakpoint(1) + gamma1),
                  gamma1};
}

InductionOutcome induce_type1(const TightMap& map) {
  const Classification cls = classify_tight3(map);
  if (cls.label.kind != CaseLabel::Kind::B || cls.mirrored) {
    throw PreconditionError("induce_type1 requires label B without mirroring");
  }
  const Map& m = map.get();
  const Rational beta1 = m.breakpoint(1);
  const Rational beta2 = m.breakpoint(2);
  const Rational gamma1 = m.translation(0);
  const Rational gamma2 = m.translation(1);
  const Rational gamma3 = m.translation(2);
  const Rational split = beta2 - gamma1;

  const Interval base(Rational(0), beta2);
  ReturnSystem system{base,
                      {{Interval(Rational(0), split), gamma1, 1},
                       {Interval(split, beta1), gamma1 + gamma3, 2},
                       {Interval(beta1, beta2), gamma2, 1}}};
  SubdomainMap sub(base, {split, beta1}, {gamma1, gamma1 + gamma3, gamma2});
  auto [unit, conj] = sub.rescaled();
  Map induced = canonicalize(unit);
  const bool degenerate = induced.piece_count() == 2;
  const TightMap tight_induced(induced);
  if (!degenerate &&
      classify_tight3(tight_induced).label.kind != CaseLabel::Kind::A) {
    throw std::logic_error("first-pieces induction did not produce label A");
  }
  DoubleRotation dr = as_double_rotation(tight_induced);
  return InductionOutcome{std::move(system), std::move(induced), conj,
                          std::move(dr), degenerate};
}

InductionOutcome induce_type2(const TightMap& map) {
  const Classification cls = classify_tight3(map);
  const bool is_b = cls.label.kind == CaseLabel::Kind::BStep;
  const bool is_c = cls.label.kind == CaseLabel::Kind::CStep;
  if ((!is_b && !is_c) || cls.mirrored) {
    throw PreconditionError(
        "induce_type2 requires label B_i or C_i without mirroring");
  }
  const Map& m = map.get();
  const Rational beta1 = m.breakpoint(1);
  const Rational beta2 = m.breakpoint(2);
  const Rational gamma1 = m.translation(0);
  const Rational gamma2 = m.translation(1);
  const Rational gamma3 = m.translation(2);
  const long long i = cls.label.step;
  const Rational net = gamma3 + i * gamma1;
  const Interval base(beta1, Rational(1));

  if (is_b) {
    ReturnSystem system{base,
                        {{Interval(beta1, beta2), gamma2, 1},
                         {Interval(beta2, Rational(1)), net, i + 1}}};
    SubdomainMap sub(base, {beta2}, {gamma2, net});
    auto [unit, conj] = sub.rescaled();
    Rotation rotation = rotation_from_itm2(unit);
    return InductionOutcome{std::move(system), std::move(unit), conj,
                            std::move(rotation), false};
  }

  const Rational split = beta1 - net;
  ReturnSystem system{base,
                      {{Interval(beta1, beta2), gamma2, 1},
                       {Interval(beta2, split), net + gamma1, i + 2},
                       {Interval(split, Rational(1)), net, i + 1}}};
  SubdomainMap sub(base, {beta2, split}, {gamma2, net + gamma1, net});
  auto [unit, conj] = sub.rescaled();
  Map induced = canonicalize(unit);
  const bool degenerate = induced.piece_count() == 2;
  const TightMap tight_induced(induced);
  if (!degenerate &&
      classify_tight3(tight_induced).label.kind != CaseLabel::Kind::APrime) {
    throw std::logic_error("last-pieces induction did not produce label A'");
  }
  DoubleRotation dr = as_double_rotation(tight_induced);
  return InductionOutcome{std::move(system), std::move(induced), conj,
                          std::move(dr), degenerate};
}

namespace {

TypeVerdict terminal_verdict(const Terminal& terminal, const Map& canonical) {
  if (std::holds_alternative<Identity>(terminal)) {
    return detect_type(canonical);
  }
  if (const auto* dr = std::get_if<DoubleRotation>(&terminal)) {
    return detect_type(*dr);
  }
  const auto& rotation = std::get<Rotation>(terminal);
  const Rational ratio = rotation.shift / rotation.length();
  const Map unit_rotation({Rational(1) - ratio}, {ratio, ratio - 1});
  return detect_type(unit_rotation);
}

}  // namespace

ReductionTrace reduce_pipeline(const Map& map) {
  ReductionTrace trace{map, canonicalize(map)};
  if (trace.canonical.piece_count() > 3) {
    throw PreconditionError("reduce_pipeline handles at most three pieces");
  }
  if (trace.canonical.piece_count() == 1) {
    trace.terminal = Identity{};
    trace.terminal_type = terminal_verdict(trace.terminal, trace.canonical);
    return trace;
  }

  trace.reducibility = reducibility_case(trace.canonical);
  const Map* current = &trace.canonical;
  if (trace.reducibility != Reducibility::Irreducible) {
    trace.drop = drop_edge_interval(*current);
    current = &trace.drop->map;
  }

  if (current->piece_count() == 2) {
    Rotation rotation = rotation_from_itm2(*current);
    trace.trap_interval = rotation.trap;
    trace.terminal = std::move(rotation);
  } else {
    trace.first_cell = cell(*current);
    FitResult fitted = fit(*current);
    trace.trap_interval = fitted.trap_interval;
    trace.fitted = fitted.fitted.get();
    trace.fit_conjugacy = fitted.conj;
    if (fitted.fitted.get().piece_count() == 2) {
      trace.terminal = rotation_from_itm2(fitted.fitted.get());
    } else {
      const Classification cls = classify_tight3(fitted.fitted);
      trace.mirrored = cls.mirrored;
      trace.label = cls.label;
      const TightMap work = cls.mirrored ? TightMap(mirror(fitted.fitted.get()))
                                         : fitted.fitted;
      switch (cls.label.kind) {
        case CaseLabel::Kind::A:
        case CaseLabel::Kind::APrime:
          trace.terminal = as_double_rotation(work);
          break;
        case CaseLabel::Kind::B: {
          InductionOutcome outcome = induce_type1(work);
          trace.induction = std::move(outcome.system);
          trace.induced = std::move(outcome.induced);
          trace.induction_conjugacy = outcome.conj;
          trace.degenerate_rotation = outcome.degenerate_rotation;
          std::visit([&](auto&& t) { trace.terminal = std::move(t); },
                     std::move(outcome.terminal));
          break;
        }
        case CaseLabel::Kind::BStep:
        case CaseLabel::Kind::CStep: {
          InductionOutcome outcome = induce_type2(work);
          trace.induction = std::move(outcome.system);
          trace.induced = std::move(outcome.induced);
          trace.induction_conjugacy = outcome.conj;
          trace.degenerate_rotation = outcome.degenerate_rotation;
          std::visit([&](auto&& t) { trace.terminal = std::move(t); },
                     std::move(outcome.terminal));
          break;
        }
        case CaseLabel::Kind::Boundary:
          trace.terminal = BoundaryStop{cls.label.witness};
          break;
      }
    }
  }

  if (!std::holds_alternative<BoundaryStop>(trace.terminal)) {
    trace.terminal_type = terminal_verdict(trace.terminal, trace.canonical);
  }
  return trace;
}

}  // namespace itm
