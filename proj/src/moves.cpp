#include "dtc/moves.hpp"

#include <algorithm>

#include "dtc/error.hpp"
#include "dtc/formulas.hpp"

namespace dtc {

namespace {

Rational entry_t(const DTCoords& c, const PantsDecomposition& pd, std::optional<CurveId> curve) {
  if (!curve) return Rational(0);
  if (c.scope() == Scope::MF0 && !pd.is_interior(*curve)) return Rational(0);
  return c[*curve].t;
}

bool tracked(const DTCoords& c, const PantsDecomposition& pd, std::optional<CurveId> curve) {
  return curve && (c.scope() == Scope::MF || pd.is_interior(*curve));
}

}  // namespace

DTCoords twist(const PantsDecomposition& pd, const DTCoords& c, CurveId curve, int sign) {
  c.check_against(pd);
  if (sign != 1 && sign != -1) throw ValidationError("twist sign must be +1 or -1");
  if (!pd.is_interior(curve)) {
    throw ValidationError("cannot twist along boundary curve " + std::to_string(curve.value));
  }
  std::vector<MTPair> pairs = c.pairs();
  MTPair& p = pairs[curve.value];
  p.t = formulas::twisted(p.m, p.t, sign);
  return DTCoords::make(pd, std::move(pairs), c.scope());
}

Transformed move_first(const PantsDecomposition& pd, const DTCoords& c, const MoveSite& site) {
  c.check_against(pd);
  if (site.kind != MoveKind::First || !pd.is_valid_site(site)) {
    throw ValidationError("invalid First site at curve " + std::to_string(site.curve.value));
  }
  const auto outer = pd.slot_curve(SlotRef{site.pants, site.outer_slot});
  const Rational m_outer = outer ? c[*outer].m : Rational(0);
  const Rational m_curve = c[site.curve].m;
  const PantsWeights w = formulas::arc_weights(m_outer, m_curve, m_curve);

  const auto out = formulas::first_elementary(
      formulas::FirstMoveInput<Rational>{w.l11, w.l23, w.l12, c[site.curve].t, entry_t(c, pd, outer)});

  std::vector<MTPair> pairs = c.pairs();
  pairs[site.curve.value] = MTPair{out.lambda12 + out.lambda23, out.t1};
  if (tracked(c, pd, outer)) pairs[outer->value].t = out.t2;

  PantsDecomposition next = pd.after_move(site);
  DTCoords coords = DTCoords::make(next, std::move(pairs), c.scope());
  return {std::move(coords), std::move(next)};
}

Transformed move_second(const PantsDecomposition& pd, const DTCoords& c, const MoveSite& site) {
  c.check_against(pd);
  if (site.kind != MoveKind::Second || !pd.is_valid_site(site)) {
    throw ValidationError("invalid Second site at curve " + std::to_string(site.curve.value));
  }
  std::optional<CurveId> role[6];
  for (int k = 2; k <= 5; ++k) role[k] = pd.slot_curve(site.roles[k - 2]);
  auto m_of = [&](int k) { return role[k] ? c[*role[k]].m : Rational(0); };

  const Rational m1 = c[site.curve].m;
  formulas::SecondMoveInput<Rational> in;
  in.lambda = formulas::arc_weights(m1, m_of(3), m_of(2));
  in.kappa = formulas::arc_weights(m1, m_of(4), m_of(5));
  in.t[0] = Rational(0);
  in.t[1] = c[site.curve].t;
  for (int k = 2; k <= 5; ++k) in.t[k] = entry_t(c, pd, role[k]);

  const auto out = formulas::second_elementary(in);

  std::vector<MTPair> pairs = c.pairs();
  pairs[site.curve.value] = MTPair{formulas::intersections(out.lambda).m1, out.t[1]};
  // A curve may carry several roles (both sides glued into the same
  // four-holed sphere); its twist collects the change from each role.
  for (int k = 2; k <= 5; ++k) {
    if (tracked(c, pd, role[k])) pairs[role[k]->value].t += out.t[k] - in.t[k];
  }

  PantsDecomposition next = pd.after_move(site);
  DTCoords coords = DTCoords::make(next, std::move(pairs), c.scope());
  return {std::move(coords), std::move(next)};
}

Transformed apply_move(const PantsDecomposition& pd, const DTCoords& c, const MoveSite& site) {
  return site.kind == MoveKind::First ? move_first(pd, c, site) : move_second(pd, c, site);
}

MoveSite resolve_site(const PantsDecomposition& pd, const Move& move) {
  if (!pd.has_curve(move.curve)) throw ValidationError("unknown curve id " + std::to_string(move.curve.value));
  const MoveSite site = pd.site_at(move.curve, move.kind == MoveKind::Second ? move.bottom : std::nullopt);
  if (site.kind != move.kind) {
    throw ValidationError(std::string("curve ") + std::to_string(move.curve.value) + " hosts a " +
                          (site.kind == MoveKind::First ? "First" : "Second") + " site, not a " +
                          (move.kind == MoveKind::First ? "First" : "Second") + " site");
  }
  return site;
}

std::vector<PantsDecomposition> check_legal(const MappingWord& w) {
  if (!w.base) throw ValidationError("word has no base decomposition");
  std::vector<PantsDecomposition> states{*w.base};
  for (std::size_t i = 0; i < w.generators.size(); ++i) {
    const PantsDecomposition& pd = states.back();
    try {
      if (const auto* tw = std::get_if<Twist>(&w.generators[i])) {
        if (!pd.is_interior(tw->curve)) {
          throw ValidationError("cannot twist along boundary curve " + std::to_string(tw->curve.value));
        }
        states.push_back(pd);
      } else {
        states.push_back(pd.after_move(resolve_site(pd, std::get<Move>(w.generators[i]))));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ValidationError("illegal generator " + std::to_string(i) + ": " + e.what());
    }
  }
  return states;
}

Transformed apply_word(const MappingWord& w, const DTCoords& c) {
  if (!w.base) throw ValidationError("word has no base decomposition");
  c.check_against(*w.base);
  Transformed state{c, *w.base};
  for (const Generator& g : w.generators) {
    if (const auto* tw = std::get_if<Twist>(&g)) {
      state.coords = twist(state.decomposition, state.coords, tw->curve, tw->sign);
    } else {
      const MoveSite site = resolve_site(state.decomposition, std::get<Move>(g));
      state = apply_move(state.decomposition, state.coords, site);
    }
  }
  return state;
}

MappingWord invert_word(const MappingWord& w) {
  MappingWord inv{w.base, {}};
  inv.generators.reserve(w.generators.size());
  for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
    if (const auto* tw = std::get_if<Twist>(&*it)) {
      inv.generators.push_back(Twist{tw->curve, -tw->sign});
    } else {
      inv.generators.push_back(*it);
    }
  }
  return inv;
}

MappingWord power(const MappingWord& w, int k) {
  if (k < 0) return power(invert_word(w), -k);
  MappingWord out{w.base, {}};
  for (int i = 0; i < k; ++i) out.generators.insert(out.generators.end(), w.generators.begin(), w.generators.end());
  return out;
}

MappingWord concat(const MappingWord& a, const MappingWord& b) {
  MappingWord out = a;
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

}  // namespace dtc
