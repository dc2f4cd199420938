#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "dtc/coords.hpp"
#include "dtc/surface.hpp"

namespace dtc {

/// Strand-level reconstruction of an integral multicurve.
///
/// Each pants carries the standard arc system: lambda_ij parallel arcs
/// between boundaries i and j, and lambda_ii loops from boundary i around
/// the next leg in cyclic order. Every window (slot) lists the strand
/// endpoints crossing it, in order. Across an interior curve the endpoint
/// sequences are matched with a cyclic shift given by the twisting number.
class StrandModel {
 public:
  struct Label {
    enum class Kind : std::uint8_t { Arc, Loop } kind = Kind::Arc;
    int i = 0, j = 0;  // slots; i == j for loops
    int copy = 0;
    friend bool operator==(const Label&, const Label&) = default;
  };
  struct Endpoint {
    int pants = 0, slot = 0, position = 0;
    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
  };
  struct Window {
    std::vector<Label> labels;
    int offset = 0;  // index of the first endpoint in the flat numbering
  };
  struct Crossing {
    CurveId curve;
    SlotRef a, b;
    std::int64_t m = 0, t = 0;
    /// partner[p] is the position in window b matched with position p of a.
    std::vector<int> partner;
  };

  const std::vector<std::array<Window, 3>>& windows() const { return windows_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  /// Closed strands parallel to a curve with m = 0, one entry per curve.
  const std::vector<std::pair<CurveId, std::int64_t>>& annular() const { return annular_; }
  int endpoint_count() const { return endpoints_; }
  int flat(const Endpoint& e) const { return windows_[e.pants][e.slot].offset + e.position; }

  /// Pairs of endpoints joined inside a pants (both ends of one arc/loop).
  std::vector<std::pair<Endpoint, Endpoint>> pants_pairs() const;

  /// Debug dump: windows, in-pants pairs, gluing pairs and annular counts.
  nlohmann::json to_json() const;

 private:
  friend StrandModel build_strand_model(const PantsDecomposition& pd, const IntegralMulticurve& c);
  std::vector<std::array<Window, 3>> windows_;
  std::vector<Crossing> crossings_;
  std::vector<std::pair<CurveId, std::int64_t>> annular_;
  int endpoints_ = 0;
};

StrandModel build_strand_model(const PantsDecomposition& pd, const IntegralMulticurve& c);

/// Number of connected components: traced strand components plus |t| unit
/// annuli for every curve with m = 0. Arcs ending on the boundary of F count
/// as components. 0 for the empty multicurve.
std::int64_t count_components(const PantsDecomposition& pd, const IntegralMulticurve& c);

}  // namespace dtc
