#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtc/formulas.hpp"
#include "dtc/rational.hpp"
#include "dtc/surface.hpp"

namespace dtc {

/// MF carries an entry for every pants curve including the boundary of F;
/// MF0 only for interior curves (boundary entries are identically zero).
enum class Scope { MF, MF0 };

std::string to_string(Scope s);
Scope scope_from_string(std::string_view s);

/// One Dehn-Thurston pair: transverse measure m >= 0 and twisting number t.
struct MTPair {
  Rational m{0};
  Rational t{0};
  friend bool operator==(const MTPair&, const MTPair&) = default;
};

/// Replaces every (0, t) with t < 0 by (0, -t). Throws on negative m.
std::vector<MTPair> normalize(std::span<const MTPair> raw);

/// Coordinates of a measured foliation relative to a particular state of a
/// pants decomposition. Entries are indexed by curve id and stamped with the
/// generation of every curve, so that coordinates taken before an
/// elementary move are rejected afterwards.
class DTCoords {
 public:
  /// Normalizes `pairs` (one per curve id) and checks them against `pd`.
  static DTCoords make(const PantsDecomposition& pd, std::vector<MTPair> pairs, Scope scope);
  static DTCoords zero(const PantsDecomposition& pd, Scope scope);

  Scope scope() const { return scope_; }
  std::size_t size() const { return pairs_.size(); }
  const MTPair& operator[](CurveId c) const { return pairs_.at(c.value); }
  const std::vector<MTPair>& pairs() const { return pairs_; }
  const std::vector<std::uint32_t>& generations() const { return generations_; }

  /// Throws ValidationError if the coordinates do not belong to `pd` (size,
  /// generation stamps, or a non-zero boundary entry in MF0 scope).
  void check_against(const PantsDecomposition& pd) const;
  /// Same values re-stamped for `pd`; requires an identical slot table.
  DTCoords rebased(const PantsDecomposition& pd) const;
  DTCoords scaled(const Rational& c) const;
  bool is_zero() const;

  /// Value equality, ignoring generation stamps.
  bool same_values(const DTCoords& other) const { return scope_ == other.scope_ && pairs_ == other.pairs_; }
  friend bool operator==(const DTCoords&, const DTCoords&) = default;

  /// {"scope": "MF0", "entries": [{"curve": 0, "m": "3", "t": "-1/2"}, ...]}
  nlohmann::json to_json(const PantsDecomposition& pd) const;
  /// Accepts the object form above or a bare entry array. For a bare array
  /// the scope is MF when any boundary curve is listed, MF0 otherwise.
  /// Curves not listed default to (0, 0).
  static DTCoords from_json(const nlohmann::json& doc, const PantsDecomposition& pd);

 private:
  DTCoords() = default;
  Scope scope_ = Scope::MF;
  std::vector<MTPair> pairs_;
  std::vector<std::uint32_t> generations_;
};

using PantsWeights = formulas::ArcWeights<Rational>;

PantsWeights m_to_lambda(const Rational& m1, const Rational& m2, const Rational& m3);
/// Inverse of m_to_lambda on embedded arc systems: rejects negative
/// weights, two positive loop weights, or a loop lambda_ii together with the
/// opposite arc lambda_jk.
std::array<Rational, 3> lambda_to_m(const PantsWeights& w);

/// Intersection numbers seen from the three slots of a pants (0 for a
/// puncture) in cyclic slot order.
std::array<Rational, 3> pants_intersections(const PantsDecomposition& pd, const DTCoords& c, int pants);

/// Coordinates with integer entries and even m-sum around every pants.
class IntegralMulticurve {
 public:
  const DTCoords& coords() const { return coords_; }
  std::int64_t m(CurveId c) const { return m_.at(c.value); }
  std::int64_t t(CurveId c) const { return t_.at(c.value); }
  bool empty() const { return coords_.is_zero(); }

 private:
  friend IntegralMulticurve validate_integral(const DTCoords& c, const PantsDecomposition& pd);
  IntegralMulticurve(DTCoords c, std::vector<std::int64_t> m, std::vector<std::int64_t> t)
      : coords_(std::move(c)), m_(std::move(m)), t_(std::move(t)) {}

  DTCoords coords_;
  std::vector<std::int64_t> m_, t_;
};

IntegralMulticurve validate_integral(const DTCoords& c, const PantsDecomposition& pd);

/// Deterministic pseudo-random multicurve with |entries| <= bound; the pants
/// parity is repaired along a spanning tree of the gluing graph.
IntegralMulticurve sample(const PantsDecomposition& pd, int bound, std::uint64_t seed, Scope scope = Scope::MF);

}  // namespace dtc
