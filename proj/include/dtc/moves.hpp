#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "dtc/coords.hpp"
#include "dtc/surface.hpp"

namespace dtc {

/// Dehn twist on a pants curve; sign +1 adds m to t, -1 subtracts it.
struct Twist {
  CurveId curve;
  int sign = 1;
  friend bool operator==(const Twist&, const Twist&) = default;
};

/// Elementary move at the site of `curve`. `bottom` selects the bottom pants
/// of a Second site (default: the lower pants index); ignored for First.
struct Move {
  MoveKind kind = MoveKind::First;
  CurveId curve;
  std::optional<int> bottom;
  friend bool operator==(const Move&, const Move&) = default;
};

using Generator = std::variant<Twist, Move>;

/// Generators applied left to right, starting from `base`. The decomposition
/// state is tracked through the word: after a move, later generators refer
/// to the new decomposition.
struct MappingWord {
  std::shared_ptr<const PantsDecomposition> base;
  std::vector<Generator> generators;
};

struct Transformed {
  DTCoords coords;
  PantsDecomposition decomposition;
};

DTCoords twist(const PantsDecomposition& pd, const DTCoords& c, CurveId curve, int sign);
Transformed move_first(const PantsDecomposition& pd, const DTCoords& c, const MoveSite& site);
Transformed move_second(const PantsDecomposition& pd, const DTCoords& c, const MoveSite& site);
/// Dispatches on site.kind.
Transformed apply_move(const PantsDecomposition& pd, const DTCoords& c, const MoveSite& site);

/// Resolves a Move against a decomposition state, checking its kind.
MoveSite resolve_site(const PantsDecomposition& pd, const Move& move);

/// Decomposition states visited by the word; throws ValidationError at the
/// first illegal generator (index reported in the message).
std::vector<PantsDecomposition> check_legal(const MappingWord& w);

/// Coordinates after the whole word, relative to the final decomposition.
Transformed apply_word(const MappingWord& w, const DTCoords& c);

/// Reversed word with twist signs flipped; moves are their own inverses.
MappingWord invert_word(const MappingWord& w);

/// `w` repeated k times.
MappingWord power(const MappingWord& w, int k);
MappingWord concat(const MappingWord& a, const MappingWord& b);

}  // namespace dtc
