#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dtc {

/// Dense identifier of a pants curve; coordinate vectors are indexed by it.
struct CurveId {
  int value = 0;
  constexpr CurveId() = default;
  constexpr explicit CurveId(int v) : value(v) {}
  friend constexpr auto operator<=>(CurveId, CurveId) = default;
};

/// Topological type F_{g,r}^s.
struct SurfaceSpec {
  int genus = 0;
  int boundary_count = 0;
  int puncture_count = 0;

  /// Throws ValidationError unless the counts are non-negative and
  /// 2g - 2 + r + s > 0.
  void validate() const;
  int curve_count() const { return 3 * genus - 3 + 2 * boundary_count + puncture_count; }
  int interior_curve_count() const { return 3 * genus - 3 + boundary_count + puncture_count; }
  int pants_count() const { return 2 * genus - 2 + boundary_count + puncture_count; }
  int euler_characteristic() const { return 2 - 2 * genus - boundary_count - puncture_count; }

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

struct SlotRef {
  int pants = 0;
  int slot = 0;  // 0, 1, 2 in the pants' cyclic order
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

enum class CurveKind { Interior, Boundary };

struct PantsCurve {
  CurveId id;
  CurveKind kind = CurveKind::Interior;
  /// Two slots for an interior curve (possibly on the same pants), one for a
  /// boundary curve of F.
  std::vector<SlotRef> slots;
  /// Bumped each time an elementary move replaces this curve.
  std::uint32_t generation = 0;
};

/// Slot-binding description of a pants decomposition; the JSON gluing
/// document maps onto this one-to-one.
struct GluingDescription {
  struct Interior {
    CurveId curve;
    SlotRef a, b;
  };
  struct Boundary {
    CurveId curve;
    SlotRef slot;
  };
  SurfaceSpec surface;
  int pants_count = 0;
  std::vector<Interior> interior;
  std::vector<Boundary> boundary;
  std::vector<SlotRef> punctures;

  static GluingDescription from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

enum class MoveKind { First, Second };

/// A place where an elementary move applies.
///
/// First: `curve` has both slots on `pants`; `outer_slot` is the third slot.
/// Second: `curve` joins `pants` (bottom) and `top`. Reading each pants in its
/// cyclic order starting at the slot of `curve`, the bottom's next two slots
/// carry roles 3 and 2 and the top's next two slots carry roles 4 and 5.
struct MoveSite {
  MoveKind kind = MoveKind::First;
  CurveId curve;
  int pants = 0;
  int top = -1;
  int outer_slot = -1;
  /// Second sites: roles[k] is the slot carrying role k + 2.
  std::array<SlotRef, 4> roles{};

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// A validated pants decomposition. Immutable after construction; the only
/// way to obtain a changed decomposition is through the elementary moves.
class PantsDecomposition {
 public:
  using Layout = std::vector<std::array<std::optional<CurveId>, 3>>;

  static PantsDecomposition build(const GluingDescription& gluing);

  const SurfaceSpec& surface() const { return spec_; }
  int pants_count() const { return static_cast<int>(layout_.size()); }
  int curve_count() const { return static_cast<int>(curves_.size()); }
  const std::vector<PantsCurve>& curves() const { return curves_; }
  const PantsCurve& curve(CurveId id) const;
  bool has_curve(CurveId id) const { return id.value >= 0 && id.value < curve_count(); }
  bool is_interior(CurveId id) const { return curve(id).kind == CurveKind::Interior; }
  /// Curve bound to a slot, or nullopt for a puncture.
  std::optional<CurveId> slot_curve(SlotRef s) const { return layout_.at(s.pants).at(s.slot); }
  const Layout& layout() const { return layout_; }

  /// Same slot table and curve kinds; generations may differ.
  bool same_layout(const PantsDecomposition& other) const;
  /// Same curves and the same pants up to reordering the pants and rotating
  /// each slot triple. Coordinates mean the same thing on both.
  bool equivalent(const PantsDecomposition& other) const;
  /// Per-curve generation stamps, indexed by curve id.
  std::vector<std::uint32_t> generations() const;

  GluingDescription gluing() const;

  /// Resolves a site from a curve and an optional bottom pants (Second sites
  /// only). Throws ValidationError if no valid site exists.
  MoveSite site_at(CurveId curve, std::optional<int> bottom = std::nullopt) const;
  bool is_valid_site(const MoveSite& site) const;

  /// Decomposition after the elementary move at `site`: the moved curve keeps
  /// its id and gets the next generation.
  PantsDecomposition after_move(const MoveSite& site) const;

 private:
  PantsDecomposition() = default;
  static PantsDecomposition from_layout(const SurfaceSpec& spec, Layout layout,
                                        const std::vector<CurveKind>& kinds,
                                        const std::vector<std::uint32_t>& generations);
  void check_invariants() const;

  SurfaceSpec spec_;
  Layout layout_;
  std::vector<PantsCurve> curves_;
};

/// Every valid site, ordered by curve id; Second sites list the lower pants
/// index as bottom first.
std::vector<MoveSite> enumerate_move_sites(const PantsDecomposition& pd);

struct Preset {
  std::string name;
  PantsDecomposition decomposition;
};

/// Built-in catalog: once-punctured-torus, one-holed-torus,
/// four-holed-sphere, genus-two-closed.
Preset preset(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace dtc
