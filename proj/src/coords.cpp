#include "dtc/coords.hpp"

#include <limits>
#include <queue>
#include <random>

#include "dtc/error.hpp"

namespace dtc {

using nlohmann::json;

std::string to_string(Scope s) { return s == Scope::MF ? "MF" : "MF0"; }

Scope scope_from_string(std::string_view s) {
  if (s == "MF" || s == "mf") return Scope::MF;
  if (s == "MF0" || s == "mf0") return Scope::MF0;
  throw ValidationError("unknown scope '" + std::string(s) + "'");
}

std::vector<MTPair> normalize(std::span<const MTPair> raw) {
  std::vector<MTPair> out(raw.begin(), raw.end());
  for (MTPair& p : out) {
    if (p.m < Rational(0)) throw ValidationError("negative transverse measure m = " + p.m.str());
    if (p.m == Rational(0) && p.t < Rational(0)) p.t = -p.t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DTCoords

DTCoords DTCoords::make(const PantsDecomposition& pd, std::vector<MTPair> pairs, Scope scope) {
  if (static_cast<int>(pairs.size()) != pd.curve_count()) {
    throw ValidationError("expected " + std::to_string(pd.curve_count()) + " coordinate pairs, got " +
                          std::to_string(pairs.size()));
  }
  DTCoords c;
  c.scope_ = scope;
  c.pairs_ = normalize(pairs);
  c.generations_ = pd.generations();
  c.check_against(pd);
  return c;
}

DTCoords DTCoords::zero(const PantsDecomposition& pd, Scope scope) {
  return make(pd, std::vector<MTPair>(static_cast<std::size_t>(pd.curve_count())), scope);
}

void DTCoords::check_against(const PantsDecomposition& pd) const {
  if (static_cast<int>(pairs_.size()) != pd.curve_count()) {
    throw ValidationError("coordinates have " + std::to_string(pairs_.size()) + " entries, decomposition has " +
                          std::to_string(pd.curve_count()) + " curves");
  }
  if (generations_ != pd.generations()) {
    throw ValidationError("stale coordinates: taken relative to an earlier state of the decomposition");
  }
  if (scope_ == Scope::MF0) {
    for (const PantsCurve& curve : pd.curves()) {
      const MTPair& p = pairs_[curve.id.value];
      if (curve.kind == CurveKind::Boundary && (p.m != Rational(0) || p.t != Rational(0))) {
        throw ValidationError("MF0 coordinates carry a non-zero entry on boundary curve " +
                              std::to_string(curve.id.value));
      }
    }
  }
}

DTCoords DTCoords::rebased(const PantsDecomposition& pd) const {
  if (static_cast<int>(pairs_.size()) != pd.curve_count()) {
    throw ValidationError("cannot rebase coordinates onto a decomposition of a different size");
  }
  DTCoords c = *this;
  c.generations_ = pd.generations();
  return c;
}

DTCoords DTCoords::scaled(const Rational& k) const {
  if (k <= Rational(0)) throw ValidationError("scale factor must be positive");
  DTCoords c = *this;
  for (MTPair& p : c.pairs_) {
    p.m *= k;
    p.t *= k;
  }
  return c;
}

bool DTCoords::is_zero() const {
  for (const MTPair& p : pairs_) {
    if (p.m != Rational(0) || p.t != Rational(0)) return false;
  }
  return true;
}

namespace {

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError(std::string("'") + what + "' must be a string rational or an integer");
}

}  // namespace

json DTCoords::to_json(const PantsDecomposition& pd) const {
  json entries = json::array();
  for (const PantsCurve& curve : pd.curves()) {
    if (scope_ == Scope::MF0 && curve.kind == CurveKind::Boundary) continue;
    const MTPair& p = pairs_.at(curve.id.value);
    entries.push_back({{"curve", curve.id.value}, {"m", p.m.str()}, {"t", p.t.str()}});
  }
  return json{{"scope", to_string(scope_)}, {"entries", entries}};
}

DTCoords DTCoords::from_json(const json& doc, const PantsDecomposition& pd) {
  const json* entries = &doc;
  std::optional<Scope> scope;
  if (doc.is_object()) {
    if (!doc.contains("entries") || !doc.at("entries").is_array()) {
      throw ValidationError("coordinate object needs an 'entries' array");
    }
    entries = &doc.at("entries");
    if (doc.contains("scope")) {
      if (!doc.at("scope").is_string()) throw ValidationError("'scope' must be a string");
      scope = scope_from_string(doc.at("scope").get<std::string>());
    }
  } else if (!doc.is_array()) {
    throw ValidationError("coordinates must be a JSON array or object");
  }

  std::vector<MTPair> pairs(static_cast<std::size_t>(pd.curve_count()));
  std::vector<bool> seen(pairs.size(), false);
  bool mentions_boundary = false;
  for (const json& e : *entries) {
    if (!e.is_object() || !e.contains("curve") || !e.at("curve").is_number_integer()) {
      throw ValidationError("coordinate entry needs an integer 'curve'");
    }
    const CurveId id(e.at("curve").get<int>());
    if (!pd.has_curve(id)) throw ValidationError("unknown curve id " + std::to_string(id.value));
    if (seen[id.value]) throw ValidationError("curve " + std::to_string(id.value) + " listed twice");
    seen[id.value] = true;
    mentions_boundary = mentions_boundary || !pd.is_interior(id);
    if (e.contains("m")) pairs[id.value].m = rational_from_json(e.at("m"), "m");
    if (e.contains("t")) pairs[id.value].t = rational_from_json(e.at("t"), "t");
  }
  return make(pd, std::move(pairs), scope.value_or(mentions_boundary ? Scope::MF : Scope::MF0));
}

// ---------------------------------------------------------------------------
// Pants weights

PantsWeights m_to_lambda(const Rational& m1, const Rational& m2, const Rational& m3) {
  if (m1 < Rational(0) || m2 < Rational(0) || m3 < Rational(0)) {
    throw ValidationError("intersection numbers must be non-negative");
  }
  return formulas::arc_weights(m1, m2, m3);
}

std::array<Rational, 3> lambda_to_m(const PantsWeights& w) {
  const Rational zero(0);
  for (const Rational* x : {&w.l11, &w.l22, &w.l33, &w.l12, &w.l13, &w.l23}) {
    if (*x < zero) throw ValidationError("arc weights must be non-negative");
  }
  const int loops = (w.l11 > zero) + (w.l22 > zero) + (w.l33 > zero);
  if (loops > 1) throw ValidationError("at most one loop weight lambda_ii may be positive");
  if ((w.l11 > zero && w.l23 > zero) || (w.l22 > zero && w.l13 > zero) || (w.l33 > zero && w.l12 > zero)) {
    throw ValidationError("loop lambda_ii crosses the opposite arc lambda_jk");
  }
  const auto m = formulas::intersections(w);
  return {m.m1, m.m2, m.m3};
}

std::array<Rational, 3> pants_intersections(const PantsDecomposition& pd, const DTCoords& c, int pants) {
  std::array<Rational, 3> m{};
  for (int s = 0; s < 3; ++s) {
    if (auto curve = pd.slot_curve(SlotRef{pants, s})) m[s] = c[*curve].m;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Integral multicurves

IntegralMulticurve validate_integral(const DTCoords& c, const PantsDecomposition& pd) {
  c.check_against(pd);
  std::vector<std::int64_t> m, t;
  for (const MTPair& p : c.pairs()) {
    auto mi = p.m.to_int64();
    auto ti = p.t.to_int64();
    if (!mi || !ti) throw ValidationError("non-integral coordinate entry (" + p.m.str() + ", " + p.t.str() + ")");
    m.push_back(*mi);
    t.push_back(*ti);
  }
  for (int p = 0; p < pd.pants_count(); ++p) {
    std::int64_t sum = 0;
    for (int s = 0; s < 3; ++s) {
      if (auto curve = pd.slot_curve(SlotRef{p, s})) sum += m[curve->value];
    }
    if (sum % 2 != 0) {
      throw ValidationError("parity violation: pants " + std::to_string(p) + " has odd m-sum " + std::to_string(sum));
    }
  }
  return IntegralMulticurve(c, std::move(m), std::move(t));
}

namespace {

/// Uniform integer in [lo, hi] by rejection; mt19937_64 output is specified
/// by the standard, so the sequence is identical on every platform.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

}  // namespace

IntegralMulticurve sample(const PantsDecomposition& pd, int bound, std::uint64_t seed, Scope scope) {
  if (bound < 1) throw ValidationError("sample bound must be at least 1");
  std::mt19937_64 rng(seed);
  const int n = pd.curve_count();
  std::vector<std::int64_t> m(n, 0), t(n, 0);
  auto active = [&](const PantsCurve& c) { return scope == Scope::MF || c.kind == CurveKind::Interior; };
  for (const PantsCurve& c : pd.curves()) {
    if (!active(c)) continue;
    m[c.id.value] = draw(rng, 0, bound);
    t[c.id.value] = draw(rng, -bound, bound);
  }
  auto toggle = [&](CurveId c) { m[c.value] += m[c.value] < bound ? 1 : -1; };

  // Boundary m-values enter the pants sums once, interior ones twice.
  if (scope == Scope::MF) {
    std::int64_t boundary_sum = 0;
    const PantsCurve* first_boundary = nullptr;
    for (const PantsCurve& c : pd.curves()) {
      if (c.kind != CurveKind::Boundary) continue;
      boundary_sum += m[c.id.value];
      if (!first_boundary) first_boundary = &c;
    }
    if (first_boundary && boundary_sum % 2 != 0) toggle(first_boundary->id);
  }

  // Spanning tree over pants; fix odd pants from the leaves up.
  const int np = pd.pants_count();
  std::vector<int> order, parent(np, -1);
  std::vector<CurveId> parent_edge(np);
  std::vector<bool> visited(np, false);
  std::queue<int> queue;
  queue.push(0);
  visited[0] = true;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop();
    order.push_back(p);
    for (int s = 0; s < 3; ++s) {
      auto c = pd.slot_curve(SlotRef{p, s});
      if (!c || !pd.is_interior(*c)) continue;
      for (const SlotRef& other : pd.curve(*c).slots) {
        if (!visited[other.pants]) {
          visited[other.pants] = true;
          parent[other.pants] = p;
          parent_edge[other.pants] = *c;
          queue.push(other.pants);
        }
      }
    }
  }
  auto pants_sum = [&](int p) {
    std::int64_t sum = 0;
    for (int s = 0; s < 3; ++s) {
      if (auto c = pd.slot_curve(SlotRef{p, s})) sum += m[c->value];
    }
    return sum;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0 && pants_sum(*it) % 2 != 0) toggle(parent_edge[*it]);
  }

  std::vector<MTPair> pairs(n);
  for (int i = 0; i < n; ++i) pairs[i] = MTPair{Rational(m[i]), Rational(t[i])};
  return validate_integral(DTCoords::make(pd, std::move(pairs), scope), pd);
}

}  // namespace dtc
