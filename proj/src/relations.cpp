#include "dtc/relations.hpp"

#include <functional>
#include <memory>

#include "dtc/error.hpp"
#include "dtc/moves.hpp"
#include "dtc/multicurve.hpp"
#include "dtc/word_dsl.hpp"

namespace dtc {

bool SuiteResult::passed() const {
  for (const PropertyResult& p : properties)
    if (!p.passed) return false;
  return true;
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json doc{{"suite", suite}, {"passed", passed()}, {"properties", nlohmann::json::array()}};
  for (const PropertyResult& p : properties) {
    nlohmann::json j{{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}};
    if (p.counterexample) j["counterexample"] = *p.counterexample;
    doc["properties"].push_back(std::move(j));
  }
  return doc;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"involution", "braid", "order-six", "count-invariance"};
  return names;
}

namespace {

// Runs `check` on `samples` random multicurves; `check` returns an empty
// optional on success and a description of the failure otherwise.
PropertyResult sampled(const std::string& name, const PantsDecomposition& pd, const SuiteOptions& opt, Scope scope,
                       const std::function<std::optional<nlohmann::json>(const IntegralMulticurve&)>& check) {
  PropertyResult r{name, true, 0, std::nullopt};
  for (int i = 0; i < opt.samples; ++i) {
    const IntegralMulticurve mc = sample(pd, opt.bound, opt.seed * 1000003ULL + static_cast<std::uint64_t>(i), scope);
    ++r.checked;
    if (auto failure = check(mc)) {
      r.passed = false;
      (*failure)["input"] = mc.coords().to_json(pd);
      r.counterexample = std::move(failure);
      break;
    }
  }
  return r;
}

bool is_torus(const PantsDecomposition& pd) {
  const SurfaceSpec& s = pd.surface();
  return s.genus == 1 && s.boundary_count + s.puncture_count == 1;
}

std::string site_name(const MoveSite& s) {
  std::string n = (s.kind == MoveKind::First ? "M1@" : "M2@") + std::to_string(s.curve.value);
  if (s.kind == MoveKind::Second) n += ":" + std::to_string(s.pants);
  return n;
}

SuiteResult involution(const PantsDecomposition& pd, const SuiteOptions& opt) {
  const Scope scope = opt.scope.value_or(Scope::MF);
  SuiteResult out{"involution", {}};
  for (const MoveSite& site : enumerate_move_sites(pd)) {
    out.properties.push_back(sampled(site_name(site) + " twice is the identity", pd, opt, scope,
                                     [&](const IntegralMulticurve& mc) -> std::optional<nlohmann::json> {
                                       const Transformed once = apply_move(pd, mc.coords(), site);
                                       const Transformed twice = apply_move(once.decomposition, once.coords, site);
                                       if (twice.coords.same_values(mc.coords())) return std::nullopt;
                                       return nlohmann::json{{"output", twice.coords.to_json(twice.decomposition)}};
                                     }));
    if (site.kind != MoveKind::First) continue;
    const auto outer = pd.slot_curve(SlotRef{site.pants, site.outer_slot});
    out.properties.push_back(sampled(
        site_name(site) + " twice is a half twist on the outer curve", pd, opt, scope,
        [&](const IntegralMulticurve& mc) -> std::optional<nlohmann::json> {
          const Transformed once = apply_move(pd, mc.coords(), site);
          const Transformed twice = apply_move(once.decomposition, once.coords, site);
          std::vector<MTPair> expected = mc.coords().pairs();
          if (outer && (scope == Scope::MF || pd.is_interior(*outer))) {
            expected[outer->value].t += expected[outer->value].m * Rational(1, 2);
          }
          if (twice.coords.pairs() == normalize(expected)) return std::nullopt;
          return nlohmann::json{{"output", twice.coords.to_json(twice.decomposition)}};
        }));
  }
  return out;
}

struct TorusWords {
  MappingWord ta, tb;
};

TorusWords torus_words(const PantsDecomposition& pd) {
  if (!is_torus(pd)) throw ValidationError("braid and order-six suites need a torus preset");
  auto base = std::make_shared<const PantsDecomposition>(pd);
  return {parse_word("T+0", base), parse_word("M1@0 T+0 M1@0", base)};
}

std::optional<nlohmann::json> compare_words(const MappingWord& lhs, const MappingWord& rhs,
                                            const IntegralMulticurve& mc) {
  const Transformed a = apply_word(lhs, mc.coords());
  const Transformed b = apply_word(rhs, mc.coords());
  if (a.coords.same_values(b.coords)) return std::nullopt;
  return nlohmann::json{{"lhs", a.coords.to_json(a.decomposition)}, {"rhs", b.coords.to_json(b.decomposition)}};
}

SuiteResult braid(const PantsDecomposition& pd, const SuiteOptions& opt) {
  const TorusWords w = torus_words(pd);
  const MappingWord lhs = concat(concat(w.ta, w.tb), w.ta);
  const MappingWord rhs = concat(concat(w.tb, w.ta), w.tb);
  return {"braid", {sampled("T_a T_b T_a = T_b T_a T_b", pd, opt, opt.scope.value_or(Scope::MF0),
                            [&](const IntegralMulticurve& mc) { return compare_words(lhs, rhs, mc); })}};
}

SuiteResult order_six(const PantsDecomposition& pd, const SuiteOptions& opt) {
  const TorusWords w = torus_words(pd);
  const MappingWord lhs = power(concat(w.ta, w.tb), 6);
  const MappingWord rhs{lhs.base, {}};
  return {"order-six", {sampled("(T_a T_b)^6 = 1", pd, opt, opt.scope.value_or(Scope::MF0),
                                [&](const IntegralMulticurve& mc) { return compare_words(lhs, rhs, mc); })}};
}

SuiteResult count_invariance(const PantsDecomposition& pd, const SuiteOptions& opt) {
  const Scope scope = opt.scope.value_or(Scope::MF);
  SuiteResult out{"count-invariance", {}};
  auto check = [&](const std::string& name, const std::function<Transformed(const DTCoords&)>& g) {
    out.properties.push_back(
        sampled(name + " preserves the component count", pd, opt, scope,
                [&](const IntegralMulticurve& mc) -> std::optional<nlohmann::json> {
                  const std::int64_t before = count_components(pd, mc);
                  const Transformed r = g(mc.coords());
                  const std::int64_t after = count_components(r.decomposition, validate_integral(r.coords, r.decomposition));
                  if (before == after) return std::nullopt;
                  return nlohmann::json{{"output", r.coords.to_json(r.decomposition)}, {"count_before", before},
                                        {"count_after", after}};
                }));
  };
  for (const PantsCurve& c : pd.curves()) {
    if (c.kind != CurveKind::Interior) continue;
    for (int sign : {1, -1}) {
      check(std::string(sign > 0 ? "T+" : "T-") + std::to_string(c.id.value),
            [&, id = c.id, sign](const DTCoords& x) { return Transformed{twist(pd, x, id, sign), pd}; });
    }
  }
  for (const MoveSite& site : enumerate_move_sites(pd)) {
    check(site_name(site), [&, site](const DTCoords& x) { return apply_move(pd, x, site); });
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const PantsDecomposition& pd, const SuiteOptions& options) {
  if (options.samples < 1) throw ValidationError("samples must be at least 1");
  if (name == "involution") return involution(pd, options);
  if (name == "braid") return braid(pd, options);
  if (name == "order-six") return order_six(pd, options);
  if (name == "count-invariance") return count_invariance(pd, options);
  throw ValidationError("unknown relation suite '" + name + "'");
}

}  // namespace dtc
