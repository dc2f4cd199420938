#include "dtc/multicurve.hpp"

#include <map>
#include <numeric>
#include <tuple>

#include "dtc/error.hpp"

namespace dtc {

namespace {

using Label = StrandModel::Label;

Label arc(int a, int b, int copy) { return Label{Label::Kind::Arc, std::min(a, b), std::max(a, b), copy}; }

int as_int(const Rational& x) {
  const auto v = x.to_int64();
  if (!v || *v > (1 << 24)) throw ValidationError("strand model needs small integral weights");
  return static_cast<int>(*v);
}

// Endpoint order inside the three windows of one pants, slots in cyclic
// order. Arcs are laid out around the corners; a loop based at slot i runs
// around leg i + 1, and the arcs from i to i + 1 follow it.
std::array<std::vector<Label>, 3> window_orders(const PantsWeights& w) {
  const int n[3][3] = {{as_int(w.l11), as_int(w.l12), as_int(w.l13)},
                       {as_int(w.l12), as_int(w.l22), as_int(w.l23)},
                       {as_int(w.l13), as_int(w.l23), as_int(w.l33)}};
  std::array<std::vector<Label>, 3> out;
  int loop = -1;
  for (int i = 0; i < 3; ++i)
    if (n[i][i] > 0) loop = i;

  if (loop < 0) {
    for (int i = 0; i < 3; ++i) {
      const int prev = (i + 2) % 3, next = (i + 1) % 3;
      for (int k = 0; k < n[i][prev]; ++k) out[i].push_back(arc(i, prev, k));
      for (int k = n[i][next] - 1; k >= 0; --k) out[i].push_back(arc(i, next, k));
    }
    return out;
  }

  const int i = loop, prev = (i + 2) % 3, next = (i + 1) % 3;
  const int loops = n[i][i];
  auto& wi = out[i];
  for (int k = 0; k < n[i][prev]; ++k) wi.push_back(arc(i, prev, k));
  for (int k = loops - 1; k >= 0; --k) wi.push_back(Label{Label::Kind::Loop, i, i, k});
  for (int k = n[i][next] - 1; k >= 0; --k) wi.push_back(arc(i, next, k));
  for (int k = 0; k < loops; ++k) wi.push_back(Label{Label::Kind::Loop, i, i, k});
  for (int k = n[i][prev] - 1; k >= 0; --k) out[prev].push_back(arc(i, prev, k));
  for (int k = 0; k < n[i][next]; ++k) out[next].push_back(arc(i, next, k));
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

nlohmann::json endpoint_json(const StrandModel::Endpoint& e) { return {e.pants, e.slot, e.position}; }

}  // namespace

std::vector<std::pair<StrandModel::Endpoint, StrandModel::Endpoint>> StrandModel::pants_pairs() const {
  std::vector<std::pair<Endpoint, Endpoint>> out;
  for (int p = 0; p < static_cast<int>(windows_.size()); ++p) {
    // Both ends of a strand carry the same label.
    std::map<std::tuple<int, int, int, int>, Endpoint> open;
    for (int s = 0; s < 3; ++s) {
      const auto& labels = windows_[p][s].labels;
      for (int pos = 0; pos < static_cast<int>(labels.size()); ++pos) {
        const Label& l = labels[pos];
        const auto key = std::make_tuple(static_cast<int>(l.kind), l.i, l.j, l.copy);
        const Endpoint here{p, s, pos};
        if (auto it = open.find(key); it != open.end()) {
          out.emplace_back(it->second, here);
          open.erase(it);
        } else {
          open.emplace(key, here);
        }
      }
    }
  }
  return out;
}

nlohmann::json StrandModel::to_json() const {
  nlohmann::json doc;
  doc["windows"] = nlohmann::json::array();
  for (int p = 0; p < static_cast<int>(windows_.size()); ++p) {
    for (int s = 0; s < 3; ++s) {
      nlohmann::json labels = nlohmann::json::array();
      for (const Label& l : windows_[p][s].labels) {
        labels.push_back((l.kind == Label::Kind::Loop ? "loop" : "arc") + std::string(":") + std::to_string(l.i) +
                         std::to_string(l.j) + "#" + std::to_string(l.copy));
      }
      doc["windows"].push_back({{"pants", p}, {"slot", s}, {"labels", labels}});
    }
  }
  doc["matching"] = nlohmann::json::array();
  for (const auto& [a, b] : pants_pairs()) doc["matching"].push_back({endpoint_json(a), endpoint_json(b)});
  for (const Crossing& x : crossings_) {
    for (int pos = 0; pos < static_cast<int>(x.partner.size()); ++pos) {
      doc["matching"].push_back({endpoint_json({x.a.pants, x.a.slot, pos}),
                                 endpoint_json({x.b.pants, x.b.slot, x.partner[pos]})});
    }
  }
  doc["annular"] = nlohmann::json::array();
  for (const auto& [curve, k] : annular_) doc["annular"].push_back({{"curve", curve.value}, {"count", k}});
  return doc;
}

StrandModel build_strand_model(const PantsDecomposition& pd, const IntegralMulticurve& c) {
  StrandModel model;
  const DTCoords& coords = c.coords();
  coords.check_against(pd);
  model.windows_.resize(pd.pants_count());
  int offset = 0;
  for (int p = 0; p < pd.pants_count(); ++p) {
    const auto m = pants_intersections(pd, coords, p);
    const auto orders = window_orders(m_to_lambda(m[0], m[1], m[2]));
    for (int s = 0; s < 3; ++s) {
      auto& win = model.windows_[p][s];
      win.labels = orders[s];
      win.offset = offset;
      offset += static_cast<int>(win.labels.size());
    }
  }
  model.endpoints_ = offset;

  for (const PantsCurve& curve : pd.curves()) {
    const std::int64_t m = c.m(curve.id), t = c.t(curve.id);
    if (m == 0) {
      if (t != 0) model.annular_.emplace_back(curve.id, t < 0 ? -t : t);
      continue;
    }
    if (curve.kind != CurveKind::Interior) continue;
    StrandModel::Crossing x{curve.id, curve.slots[0], curve.slots[1], m, t, {}};
    // Both sides list endpoints in their own boundary orientation, so the
    // matching reverses order; the twist shifts it cyclically.
    x.partner.resize(m);
    for (std::int64_t pos = 0; pos < m; ++pos) {
      x.partner[pos] = static_cast<int>((((m - 1 - pos + t) % m) + m) % m);
    }
    model.crossings_.push_back(std::move(x));
  }
  return model;
}

std::int64_t count_components(const PantsDecomposition& pd, const IntegralMulticurve& c) {
  const StrandModel model = build_strand_model(pd, c);
  Dsu dsu(model.endpoint_count());
  for (const auto& [a, b] : model.pants_pairs()) dsu.unite(model.flat(a), model.flat(b));
  for (const auto& x : model.crossings()) {
    for (int pos = 0; pos < static_cast<int>(x.partner.size()); ++pos) {
      dsu.unite(model.flat({x.a.pants, x.a.slot, pos}), model.flat({x.b.pants, x.b.slot, x.partner[pos]}));
    }
  }
  std::int64_t count = 0;
  for (int e = 0; e < model.endpoint_count(); ++e)
    if (dsu.find(e) == e) ++count;
  for (const auto& [curve, k] : model.annular()) count += k;
  return count;
}

}  // namespace dtc
