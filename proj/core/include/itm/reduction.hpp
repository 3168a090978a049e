#pragma once

#include "itm/double_rotation.hpp"
#include "itm/interval.hpp"
#include "itm/map.hpp"
#include "itm/rational.hpp"
#include "itm/return_map.hpp"
#include "itm/typing.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace itm {

enum class Reducibility { Irreducible, ReducibleLeft, ReducibleRight };

std::string to_string(Reducibility verdict);

// Checks whether the image of [0, 1) misses the first or the last piece;
// when it does, the map splits and the missed edge piece can be dropped.
// The left side takes precedence if both are missed.
Reducibility reducibility_case(const Map& map);

// A reducible map with its dead edge piece removed: the surviving pieces
// rescaled onto [0, 1), plus the conjugacy from unit coordinates back to
// the original ones and which side was dropped.
struct EdgeDrop {
  Map map;
  AffineConjugacy conj;
  Reducibility side = Reducibility::Irreducible;

  friend bool operator==(const EdgeDrop&, const EdgeDrop&) = default;
};

// Requires a reducible map; throws PreconditionError otherwise.
EdgeDrop drop_edge_interval(const Map& map);

// Which pieces realize the endpoints of the invariant interval on the
// first pass: piece j (one-based, leftward-moving) attains the smallest
// image left endpoint, piece k (rightward-moving) the largest image right
// endpoint. tie is set when either extremum is attained more than once;
// ties resolve to the smallest index.
struct Cell {
  int j = 0;
  int k = 0;
  bool tie = false;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Requires an irreducible map with at least two pieces.
Cell cell(const Map& map);

// Invariant interval of the map: starting from [0, 1), applies the
// endpoint formula (min over leftward-moving pieces of their image left
// ends, max over rightward-moving pieces of their image right ends) to
// the restriction until the interval is fixed. The result contains its
// own image and coincides with the hull-chain limit. Requires an
// irreducible map.
Interval trap(const Map& map);

// A fragment of an original piece cut away by truncation: its domain span
// and the translation it carried.
struct Fragment {
  Interval span;
  Rational translation;

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// Restriction of a map to its invariant interval together with everything
// needed to rebuild the original exactly: the fragments outside the
// interval in domain order, and whether each edge of the interval falls
// strictly inside an original piece (in which case the adjacent fragment
// and the edge piece of the restriction are two halves of one piece).
struct Truncation {
  SubdomainMap restricted;
  Cell cell;
  std::vector<Fragment> left_fragments;
  std::vector<Fragment> right_fragments;
  bool left_straddle = false;
  bool right_straddle = false;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Restricts the map to its invariant interval. The cell argument must
// match cell(map); it is recorded for reconstruction. Requires an
// irreducible map.
Truncation truncate(const Map& map, const Cell& cell);
Truncation truncate(const Map& map);

// Rebuilds the original map from a truncation, exactly. Throws
// InconsistencyError when the recorded data does not fit together or does
// not reproduce on re-truncation.
Map untruncate(const Truncation& truncation);

// The invariant interval rescaled onto [0, 1): fitted is tight and
// canonical; conj maps unit coordinates back to original coordinates.
struct FitResult {
  TightMap fitted;
  Interval trap_interval;
  AffineConjugacy conj;
};

// Truncates to the invariant interval and rescales once. Requires an
// irreducible map.
FitResult fit(const Map& map);

// Outcome of the three-piece case analysis.
struct CaseLabel {
  enum class Kind { A, APrime, B, BStep, CStep, Boundary };

  Kind kind = Kind::Boundary;
  // The escape index i of B_i / C_i; zero for the other kinds.
  int step = 0;
  // For Boundary: which defining comparison degenerated to an equality.
  std::string witness;

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

// "A", "A'", "B", "B_2", "C_1", or "boundary".
std::string to_string(const CaseLabel& label);

struct Classification {
  CaseLabel label;
  // True when the analysis applied to the mirror image; the label then
  // describes mirror(T).
  bool mirrored = false;

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

// Decides among A, A', B, B_i, C_i by locating which pieces realize the
// domain endpoints and, for the B/C branch, walking the image of the last
// piece across the first. Mirrors first when the last piece is longer
// than the first. Any defining comparison that lands exactly on equality
// yields Boundary. Requires three pieces.
Classification classify_tight3(const TightMap& map);

// Largest escape index the classification walk can reach before a logic
// error must be signaled.
long long escape_index_bound(const TightMap& map);

// Expresses a two-piece tight map or a three-piece map labeled A or A'
// as a double rotation acting identically on [0, 1). Throws
// PreconditionError for any other label.
DoubleRotation as_double_rotation(const TightMap& map);

// A two-piece map acts on its invariant interval as a circle rotation:
// points advance by shift modulo the trap's length.
struct Rotation {
  Interval trap;
  Rational shift;

  Rational length() const { return trap.length(); }

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

// Requires a two-piece map.
Rotation rotation_from_itm2(const Map& map);

// One closed-form first-return step: the return system on the induction
// base in the input's coordinates, its rescaling to [0, 1) (canonical),
// and the terminal object extracted from the rescaled map.
struct InductionOutcome {
  ReturnSystem system;
  Map induced;
  AffineConjugacy conj;
  std::variant<DoubleRotation, Rotation> terminal;
  // Set when the induced map collapsed to two pieces and the terminal
  // double rotation is a plain rotation.
  bool degenerate_rotation = false;
};

// First-return step on the first two pieces, for maps labeled B (without
// mirroring): return times 1 and 2, result classifies A or collapses to
// a plain rotation. Throws PreconditionError on any other label.
InductionOutcome induce_type1(const TightMap& map);

// First-return step on the last two pieces, for maps labeled B_i or C_i
// (without mirroring): return times within {1, i+1, i+2}. A B_i label
// yields a rotation; a C_i label yields a map classifying A' or a plain
// rotation. Throws PreconditionError on any other label.
InductionOutcome induce_type2(const TightMap& map);

// The degenerate one-piece terminal object.
struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};

// The classification stopped on a defining equality.
struct BoundaryStop {
  std::string witness;

  friend bool operator==(const BoundaryStop&, const BoundaryStop&) = default;
};

using Terminal = std::variant<Identity, DoubleRotation, Rotation,
                              BoundaryStop>;

// Full record of one reduction run. Optional stages are absent when the
// run short-circuited before reaching them.
struct ReductionTrace {
  Map input;
  Map canonical;
  Reducibility reducibility = Reducibility::Irreducible;
  std::optional<EdgeDrop> drop;
  std::optional<Interval> trap_interval;
  std::optional<Cell> first_cell;
  std::optional<Map> fitted;
  std::optional<AffineConjugacy> fit_conjugacy;
  bool mirrored = false;
  std::optional<CaseLabel> label;
  std::optional<ReturnSystem> induction;
  std::optional<Map> induced;
  std::optional<AffineConjugacy> induction_conjugacy;
  bool degenerate_rotation = false;
  Terminal terminal;
  std::optional<TypeVerdict> terminal_type;
};

// Runs the whole reduction on a map of at most three pieces: merge equal
// neighbors, drop a dead edge piece if any, shrink to the invariant
// interval and rescale, classify, induce, and extract the terminal
// object, attaching the terminal's own type verdict. Boundary cases stop
// with a BoundaryStop terminal instead of failing.
ReductionTrace reduce_pipeline(const Map& map);

}  // namespace itm
