#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "dtc/coords.hpp"
#include "dtc/surface.hpp"

namespace dtc::testing {

inline std::shared_ptr<const PantsDecomposition> surface(const std::string& name) {
  return std::make_shared<const PantsDecomposition>(preset(name).decomposition);
}

/// Coordinates from {m, t} pairs listed by curve id.
inline DTCoords coords(const PantsDecomposition& pd, std::initializer_list<std::pair<Rational, Rational>> mt,
                       Scope scope = Scope::MF) {
  std::vector<MTPair> pairs;
  for (const auto& [m, t] : mt) pairs.push_back({m, t});
  return DTCoords::make(pd, std::move(pairs), scope);
}

inline std::vector<std::pair<long, long>> values(const DTCoords& c) {
  std::vector<std::pair<long, long>> out;
  for (const MTPair& p : c.pairs()) out.emplace_back(*p.m.to_int64(), *p.t.to_int64());
  return out;
}

}  // namespace dtc::testing
