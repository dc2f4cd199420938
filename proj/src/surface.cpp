#include "dtc/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dtc/error.hpp"

namespace dtc {

using nlohmann::json;

void SurfaceSpec::validate() const {
  if (genus < 0 || boundary_count < 0 || puncture_count < 0) {
    throw ValidationError("surface counts must be non-negative");
  }
  if (2 * genus - 2 + boundary_count + puncture_count <= 0) {
    throw ValidationError("surface F_{" + std::to_string(genus) + "," + std::to_string(boundary_count) +
                          "}^" + std::to_string(puncture_count) + " violates 2g-2+r+s>0");
  }
}

// ---------------------------------------------------------------------------
// JSON gluing document

namespace {

SlotRef slot_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ValidationError("slot must be a [pants, slot] integer pair");
  }
  return SlotRef{j[0].get<int>(), j[1].get<int>()};
}

json slot_to_json(SlotRef s) { return json::array({s.pants, s.slot}); }

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ValidationError(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

GluingDescription GluingDescription::from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("gluing document must be a JSON object");
  GluingDescription g;
  if (!doc.contains("surface") || !doc.at("surface").is_object()) {
    throw ValidationError("gluing document needs a 'surface' object");
  }
  const json& s = doc.at("surface");
  g.surface = SurfaceSpec{int_field(s, "genus"), int_field(s, "boundary_count"), int_field(s, "puncture_count")};

  if (!doc.contains("pants") || !doc.at("pants").is_array()) {
    throw ValidationError("gluing document needs a 'pants' array");
  }
  const json& pants = doc.at("pants");
  g.pants_count = static_cast<int>(pants.size());
  for (int p = 0; p < g.pants_count; ++p) {
    const json& entry = pants[p];
    if (!entry.is_object()) throw ValidationError("pants entries must be objects");
    if (entry.contains("punctures")) {
      for (const json& slot : entry.at("punctures")) {
        if (!slot.is_number_integer()) throw ValidationError("puncture slots must be integers");
        g.punctures.push_back(SlotRef{p, slot.get<int>()});
      }
    }
  }
  if (doc.contains("bindings")) {
    for (const json& b : doc.at("bindings")) {
      if (!b.is_object() || !b.contains("slots") || !b.at("slots").is_array() || b.at("slots").size() != 2) {
        throw ValidationError("binding needs 'curve' and a two-element 'slots' array");
      }
      if (b.contains("framing") && b.at("framing") != "standard") {
        throw ValidationError("only the standard framing is supported");
      }
      g.interior.push_back({CurveId(int_field(b, "curve")), slot_from_json(b.at("slots")[0]),
                            slot_from_json(b.at("slots")[1])});
    }
  }
  if (doc.contains("boundary")) {
    for (const json& b : doc.at("boundary")) {
      if (!b.is_object() || !b.contains("slot")) throw ValidationError("boundary entry needs 'curve' and 'slot'");
      g.boundary.push_back({CurveId(int_field(b, "curve")), slot_from_json(b.at("slot"))});
    }
  }
  return g;
}

json GluingDescription::to_json() const {
  json doc;
  doc["surface"] = {{"genus", surface.genus},
                    {"boundary_count", surface.boundary_count},
                    {"puncture_count", surface.puncture_count}};
  json pants = json::array();
  for (int p = 0; p < pants_count; ++p) {
    json entry = json::object();
    json punct = json::array();
    for (const SlotRef& s : punctures) {
      if (s.pants == p) punct.push_back(s.slot);
    }
    if (!punct.empty()) entry["punctures"] = punct;
    pants.push_back(entry);
  }
  doc["pants"] = pants;
  json bindings = json::array();
  for (const auto& b : interior) {
    bindings.push_back({{"curve", b.curve.value}, {"slots", json::array({slot_to_json(b.a), slot_to_json(b.b)})}});
  }
  doc["bindings"] = bindings;
  json boundary_list = json::array();
  for (const auto& b : boundary) {
    boundary_list.push_back({{"curve", b.curve.value}, {"slot", slot_to_json(b.slot)}});
  }
  doc["boundary"] = boundary_list;
  return doc;
}

// ---------------------------------------------------------------------------
// PantsDecomposition

PantsDecomposition PantsDecomposition::build(const GluingDescription& g) {
  g.surface.validate();
  if (g.pants_count != g.surface.pants_count()) {
    throw ValidationError("expected " + std::to_string(g.surface.pants_count()) + " pants for the surface, got " +
                          std::to_string(g.pants_count));
  }

  Layout layout(static_cast<std::size_t>(g.pants_count));
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(g.pants_count), std::vector<bool>(3, false));
  auto claim = [&](SlotRef s) {
    if (s.pants < 0 || s.pants >= g.pants_count || s.slot < 0 || s.slot > 2) {
      throw ValidationError("slot [" + std::to_string(s.pants) + "," + std::to_string(s.slot) + "] out of range");
    }
    if (used[s.pants][s.slot]) {
      throw ValidationError("slot [" + std::to_string(s.pants) + "," + std::to_string(s.slot) + "] bound twice");
    }
    used[s.pants][s.slot] = true;
  };

  const int curve_total = static_cast<int>(g.interior.size() + g.boundary.size());
  std::vector<CurveKind> kinds(static_cast<std::size_t>(std::max(curve_total, 0)), CurveKind::Interior);
  std::vector<bool> seen(kinds.size(), false);
  auto register_curve = [&](CurveId id, CurveKind kind) {
    if (id.value < 0 || id.value >= curve_total) {
      throw ValidationError("curve id " + std::to_string(id.value) + " is not dense in 0.." +
                            std::to_string(curve_total - 1));
    }
    if (seen[id.value]) throw ValidationError("curve id " + std::to_string(id.value) + " declared twice");
    seen[id.value] = true;
    kinds[id.value] = kind;
  };

  for (const auto& b : g.interior) {
    register_curve(b.curve, CurveKind::Interior);
    claim(b.a);
    claim(b.b);
    layout[b.a.pants][b.a.slot] = b.curve;
    layout[b.b.pants][b.b.slot] = b.curve;
  }
  for (const auto& b : g.boundary) {
    register_curve(b.curve, CurveKind::Boundary);
    claim(b.slot);
    layout[b.slot.pants][b.slot.slot] = b.curve;
  }
  for (const SlotRef& s : g.punctures) claim(s);
  for (int p = 0; p < g.pants_count; ++p) {
    for (int s = 0; s < 3; ++s) {
      if (!used[p][s]) {
        throw ValidationError("slot [" + std::to_string(p) + "," + std::to_string(s) + "] is neither bound nor a puncture");
      }
    }
  }

  if (static_cast<int>(g.boundary.size()) != g.surface.boundary_count) {
    throw ValidationError("expected " + std::to_string(g.surface.boundary_count) + " boundary curves, got " +
                          std::to_string(g.boundary.size()));
  }
  if (static_cast<int>(g.punctures.size()) != g.surface.puncture_count) {
    throw ValidationError("expected " + std::to_string(g.surface.puncture_count) + " punctures, got " +
                          std::to_string(g.punctures.size()));
  }
  if (curve_total != g.surface.curve_count()) {
    throw ValidationError("expected " + std::to_string(g.surface.curve_count()) + " curves, got " +
                          std::to_string(curve_total));
  }

  std::vector<std::uint32_t> generations(kinds.size(), 0);
  return from_layout(g.surface, std::move(layout), kinds, generations);
}

PantsDecomposition PantsDecomposition::from_layout(const SurfaceSpec& spec, Layout layout,
                                                   const std::vector<CurveKind>& kinds,
                                                   const std::vector<std::uint32_t>& generations) {
  PantsDecomposition pd;
  pd.spec_ = spec;
  pd.layout_ = std::move(layout);
  pd.curves_.resize(kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    pd.curves_[i].id = CurveId(static_cast<int>(i));
    pd.curves_[i].kind = kinds[i];
    pd.curves_[i].generation = generations[i];
  }
  for (int p = 0; p < pd.pants_count(); ++p) {
    for (int s = 0; s < 3; ++s) {
      if (auto c = pd.layout_[p][s]) pd.curves_.at(c->value).slots.push_back(SlotRef{p, s});
    }
  }
  pd.check_invariants();
  return pd;
}

void PantsDecomposition::check_invariants() const {
  int interior_bindings = 0;
  int boundary_bindings = 0;
  for (const PantsCurve& c : curves_) {
    const std::size_t expected = c.kind == CurveKind::Interior ? 2 : 1;
    if (c.slots.size() != expected) {
      throw ValidationError("curve " + std::to_string(c.id.value) + " binds " + std::to_string(c.slots.size()) +
                            " slots, expected " + std::to_string(expected));
    }
    (c.kind == CurveKind::Interior ? interior_bindings : boundary_bindings) += static_cast<int>(c.slots.size());
  }
  if (3 * pants_count() != interior_bindings + boundary_bindings + spec_.puncture_count) {
    throw ValidationError("slot conservation violated");
  }
  if (-pants_count() != spec_.euler_characteristic()) {
    throw ValidationError("gluing does not realize the declared Euler characteristic");
  }

  // Connectivity of the gluing graph.
  std::vector<int> parent(static_cast<std::size_t>(pants_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const PantsCurve& c : curves_) {
    if (c.kind == CurveKind::Interior) parent[find(c.slots[0].pants)] = find(c.slots[1].pants);
  }
  for (int p = 1; p < pants_count(); ++p) {
    if (find(p) != find(0)) throw ValidationError("gluing graph is disconnected");
  }
}

const PantsCurve& PantsDecomposition::curve(CurveId id) const {
  if (!has_curve(id)) throw ValidationError("unknown curve id " + std::to_string(id.value));
  return curves_[id.value];
}

bool PantsDecomposition::same_layout(const PantsDecomposition& other) const {
  if (spec_ != other.spec_ || layout_ != other.layout_ || curves_.size() != other.curves_.size()) return false;
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].kind != other.curves_[i].kind) return false;
  }
  return true;
}

bool PantsDecomposition::equivalent(const PantsDecomposition& other) const {
  if (spec_ != other.spec_ || curves_.size() != other.curves_.size() || layout_.size() != other.layout_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].kind != other.curves_[i].kind) return false;
  }
  // Rotate every triple to its least rotation, then compare sorted.
  auto canonical = [](const Layout& layout) {
    std::vector<std::array<int, 3>> out;
    for (const auto& p : layout) {
      std::array<int, 3> v{};
      for (int s = 0; s < 3; ++s) v[s] = p[s] ? p[s]->value : -1;
      std::array<int, 3> best = v;
      for (int r = 1; r < 3; ++r) best = std::min(best, std::array<int, 3>{v[r], v[(r + 1) % 3], v[(r + 2) % 3]});
      out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return canonical(layout_) == canonical(other.layout_);
}

std::vector<std::uint32_t> PantsDecomposition::generations() const {
  std::vector<std::uint32_t> out;
  out.reserve(curves_.size());
  for (const PantsCurve& c : curves_) out.push_back(c.generation);
  return out;
}

GluingDescription PantsDecomposition::gluing() const {
  GluingDescription g;
  g.surface = spec_;
  g.pants_count = pants_count();
  for (const PantsCurve& c : curves_) {
    if (c.kind == CurveKind::Interior) {
      g.interior.push_back({c.id, c.slots[0], c.slots[1]});
    } else {
      g.boundary.push_back({c.id, c.slots[0]});
    }
  }
  for (int p = 0; p < pants_count(); ++p) {
    for (int s = 0; s < 3; ++s) {
      if (!layout_[p][s]) g.punctures.push_back(SlotRef{p, s});
    }
  }
  return g;
}

MoveSite PantsDecomposition::site_at(CurveId id, std::optional<int> bottom) const {
  const PantsCurve& c = curve(id);
  if (c.kind != CurveKind::Interior) {
    throw ValidationError("curve " + std::to_string(id.value) + " is a boundary curve; no move site");
  }
  MoveSite site;
  site.curve = id;
  const SlotRef a = c.slots[0];
  const SlotRef b = c.slots[1];
  if (a.pants == b.pants) {
    if (bottom && *bottom != a.pants) {
      throw ValidationError("First site at curve " + std::to_string(id.value) + " lives on pants " +
                            std::to_string(a.pants));
    }
    site.kind = MoveKind::First;
    site.pants = a.pants;
    site.outer_slot = 3 - a.slot - b.slot;
    if (layout_[site.pants][site.outer_slot] == id) {
      throw ValidationError("pants " + std::to_string(site.pants) + " is bound three times to one curve");
    }
    return site;
  }
  site.kind = MoveKind::Second;
  SlotRef lo = a.pants < b.pants ? a : b;
  SlotRef hi = a.pants < b.pants ? b : a;
  if (bottom) {
    if (*bottom == hi.pants) {
      std::swap(lo, hi);
    } else if (*bottom != lo.pants) {
      throw ValidationError("pants " + std::to_string(*bottom) + " does not contain curve " + std::to_string(id.value));
    }
  }
  site.pants = lo.pants;
  site.top = hi.pants;
  site.roles[0] = SlotRef{lo.pants, (lo.slot + 2) % 3};  // role 2
  site.roles[1] = SlotRef{lo.pants, (lo.slot + 1) % 3};  // role 3
  site.roles[2] = SlotRef{hi.pants, (hi.slot + 1) % 3};  // role 4
  site.roles[3] = SlotRef{hi.pants, (hi.slot + 2) % 3};  // role 5
  return site;
}

bool PantsDecomposition::is_valid_site(const MoveSite& site) const {
  try {
    const auto bottom = site.kind == MoveKind::Second ? std::optional<int>(site.pants) : std::nullopt;
    return site_at(site.curve, bottom) == site;
  } catch (const ValidationError&) {
    return false;
  }
}

PantsDecomposition PantsDecomposition::after_move(const MoveSite& site) const {
  if (!is_valid_site(site)) throw ValidationError("invalid move site at curve " + std::to_string(site.curve.value));
  Layout layout = layout_;
  if (site.kind == MoveKind::Second) {
    auto at = [&](int role) { return layout_[site.roles[role - 2].pants][site.roles[role - 2].slot]; };
    layout[site.pants] = {site.curve, at(2), at(4)};
    layout[site.top] = {site.curve, at(5), at(3)};
  }
  std::vector<CurveKind> kinds;
  std::vector<std::uint32_t> gens = generations();
  for (const PantsCurve& c : curves_) kinds.push_back(c.kind);
  ++gens[site.curve.value];
  return from_layout(spec_, std::move(layout), kinds, gens);
}

std::vector<MoveSite> enumerate_move_sites(const PantsDecomposition& pd) {
  std::vector<MoveSite> sites;
  for (const PantsCurve& c : pd.curves()) {
    if (c.kind != CurveKind::Interior) continue;
    const MoveSite first = pd.site_at(c.id);
    sites.push_back(first);
    if (first.kind == MoveKind::Second) sites.push_back(pd.site_at(c.id, first.top));
  }
  return sites;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

using Layout = PantsDecomposition::Layout;

GluingDescription gluing_from_table(SurfaceSpec spec, const std::vector<std::array<int, 3>>& table,
                                    const std::set<int>& boundary_ids) {
  GluingDescription g;
  g.surface = spec;
  g.pants_count = static_cast<int>(table.size());
  std::vector<std::vector<SlotRef>> slots;
  for (int p = 0; p < g.pants_count; ++p) {
    for (int s = 0; s < 3; ++s) {
      const int c = table[p][s];
      if (c < 0) {
        g.punctures.push_back(SlotRef{p, s});
        continue;
      }
      if (static_cast<int>(slots.size()) <= c) slots.resize(c + 1);
      slots[c].push_back(SlotRef{p, s});
    }
  }
  for (int c = 0; c < static_cast<int>(slots.size()); ++c) {
    if (boundary_ids.count(c)) {
      g.boundary.push_back({CurveId(c), slots[c].at(0)});
    } else {
      g.interior.push_back({CurveId(c), slots[c].at(0), slots[c].at(1)});
    }
  }
  return g;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"once-punctured-torus", "one-holed-torus", "four-holed-sphere",
                                                 "genus-two-closed"};
  return names;
}

Preset preset(std::string_view name) {
  // Tables list the curve bound to each slot in cyclic order; -1 is a puncture.
  if (name == "once-punctured-torus") {
    return {std::string(name), PantsDecomposition::build(gluing_from_table({1, 0, 1}, {{-1, 0, 0}}, {}))};
  }
  if (name == "one-holed-torus") {
    return {std::string(name), PantsDecomposition::build(gluing_from_table({1, 1, 0}, {{1, 0, 0}}, {1}))};
  }
  if (name == "four-holed-sphere") {
    return {std::string(name),
            PantsDecomposition::build(gluing_from_table({0, 4, 0}, {{0, 2, 1}, {0, 3, 4}}, {1, 2, 3, 4}))};
  }
  if (name == "genus-two-closed") {
    return {std::string(name), PantsDecomposition::build(gluing_from_table({2, 0, 0}, {{0, 1, 1}, {0, 2, 2}}, {}))};
  }
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace dtc
