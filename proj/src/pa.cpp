#include "dtc/pa.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <thread>

#include "dtc/error.hpp"
#include "dtc/word_dsl.hpp"

namespace dtc {

std::string to_string(HypothesisStatus s) {
  return s == HypothesisStatus::VerifiedPreset ? "verified-preset" : "unverified";
}

namespace {

const std::vector<std::string>& certified_presets() {
  static const std::vector<std::string> names{"once-punctured-torus", "one-holed-torus", "four-holed-sphere"};
  return names;
}

std::vector<Move> reversed(const std::vector<Move>& moves) { return {moves.rbegin(), moves.rend()}; }

Rational max_abs(const DTCoords& c) {
  Rational best(0);
  for (const MTPair& p : c.pairs()) best = pl_max(best, pl_max(abs(p.m), abs(p.t)));
  return best;
}

// Per-curve distance in the quotient where (0, t) ~ (0, -t).
Rational projective_distance(const DTCoords& a, const DTCoords& b) {
  Rational worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const MTPair& x = a.pairs()[i];
    const MTPair& y = b.pairs()[i];
    const Rational direct = abs(x.m - y.m) + abs(x.t - y.t);
    const Rational flipped = abs(x.m + y.m) + abs(x.t + y.t);
    worst = pl_max(worst, pl_min(direct, flipped));
  }
  return worst;
}

std::string letter_name(const RecipeLetter& l, std::size_t c_count) {
  const char base = static_cast<char>('a' + (l.family == Family::C ? l.index : static_cast<int>(c_count) + l.index));
  return std::string(1, l.sign > 0 ? base : static_cast<char>(base - 'a' + 'A'));
}

}  // namespace

std::vector<Generator> expand_twist(const CurveExpr& curve, int sign) {
  std::vector<Generator> out(curve.conjugator.begin(), curve.conjugator.end());
  out.push_back(Twist{curve.curve, sign});
  for (const Move& mv : reversed(curve.conjugator)) out.push_back(mv);
  return out;
}

CurvePair preset_pair(const std::string& preset_name) {
  const CurveExpr a{{}, CurveId(0)};
  if (preset_name == "once-punctured-torus" || preset_name == "one-holed-torus") {
    return {{a}, {CurveExpr{{Move{MoveKind::First, CurveId(0), std::nullopt}}, CurveId(0)}}};
  }
  if (preset_name == "four-holed-sphere") {
    return {{a}, {CurveExpr{{Move{MoveKind::Second, CurveId(0), std::nullopt}}, CurveId(0)}}};
  }
  throw ValidationError("no built-in filling pair for preset '" + preset_name + "'");
}

Recipe build_recipe(std::shared_ptr<const PantsDecomposition> base, std::vector<CurveExpr> C,
                    std::vector<CurveExpr> D, std::vector<RecipeLetter> word) {
  if (!base) throw ValidationError("recipe has no base decomposition");
  if (C.empty() || D.empty()) throw ValidationError("recipe needs non-empty C and D");
  std::vector<int> used_c(C.size(), 0), used_d(D.size(), 0);
  MappingWord w{base, {}};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const RecipeLetter& l = word[i];
    const bool is_c = l.family == Family::C;
    const auto& family = is_c ? C : D;
    if (l.index < 0 || l.index >= static_cast<int>(family.size())) {
      throw ValidationError("recipe letter " + std::to_string(i) + " refers to a missing curve");
    }
    if (is_c && l.sign != 1) {
      throw ValidationError("recipe letter " + std::to_string(i) + ": twists along C must be positive");
    }
    if (!is_c && l.sign != -1) {
      throw ValidationError("recipe letter " + std::to_string(i) + ": twists along D must be negative");
    }
    ++(is_c ? used_c : used_d)[l.index];
    const auto gens = expand_twist(family[l.index], l.sign);
    w.generators.insert(w.generators.end(), gens.begin(), gens.end());
  }
  for (std::size_t i = 0; i < C.size(); ++i)
    if (!used_c[i]) throw ValidationError("curve C[" + std::to_string(i) + "] receives no twist");
  for (std::size_t i = 0; i < D.size(); ++i)
    if (!used_d[i]) throw ValidationError("curve D[" + std::to_string(i) + "] receives no twist");
  check_legal(w);

  RecipeSpec spec{std::move(C), std::move(D), std::move(word), HypothesisStatus::Unverified, {}};
  for (const std::string& name : certified_presets()) {
    const PantsDecomposition pd = preset(name).decomposition;
    if (!pd.same_layout(*base)) continue;
    const CurvePair pair = preset_pair(name);
    if (pair.C == spec.C && pair.D == spec.D) spec.status = HypothesisStatus::VerifiedPreset;
  }
  if (spec.status == HypothesisStatus::Unverified) {
    spec.warning = "filling hypothesis not checked for this curve pair; pseudo-Anosov status is not certified";
  }
  return {std::move(w), std::move(spec)};
}

Recipe build_preset_recipe(const std::string& preset_name, std::vector<RecipeLetter> word) {
  auto base = std::make_shared<const PantsDecomposition>(preset(preset_name).decomposition);
  CurvePair pair = preset_pair(preset_name);
  return build_recipe(std::move(base), std::move(pair.C), std::move(pair.D), std::move(word));
}

DTCoords canonical_seed(const PantsDecomposition& pd) {
  std::vector<MTPair> pairs(pd.curve_count());
  for (const PantsCurve& c : pd.curves()) {
    if (c.kind == CurveKind::Interior) pairs[c.id.value] = MTPair{Rational(2), Rational(1)};
  }
  return DTCoords::make(pd, std::move(pairs), Scope::MF0);
}

DilatationEstimate estimate_dilatation(const MappingWord& w, const DTCoords& seed, int max_iter,
                                       const Rational& tol) {
  if (!w.base) throw ValidationError("word has no base decomposition");
  if (max_iter < 1) throw ValidationError("max_iter must be at least 1");
  if (tol <= Rational(0)) throw ValidationError("tolerance must be positive");
  seed.check_against(*w.base);
  if (seed.is_zero()) throw ValidationError("seed multicurve is empty");

  constexpr int kWindow = 5;
  DTCoords x = seed.scaled(Rational(1) / max_abs(seed));
  std::deque<Rational> ratios;
  DilatationEstimate est;
  Rational residual(0);
  int tail = -1;  // remaining steps after first reaching tol

  for (int k = 1; k <= max_iter; ++k) {
    Transformed step = apply_word(w, x);
    if (!step.decomposition.equivalent(*w.base)) {
      throw ValidationError("word does not return to its base decomposition");
    }
    const Rational norm = max_abs(step.coords);
    if (norm == Rational(0)) throw Error("word collapsed a nonzero multicurve");
    DTCoords next = step.coords.rebased(*w.base).scaled(Rational(1) / norm);
    residual = projective_distance(x, next);
    x = std::move(next);
    ratios.push_back(norm);
    if (static_cast<int>(ratios.size()) > kWindow) ratios.pop_front();
    est.iterations = k;

    if (residual == Rational(0)) {
      // Exact projective fixed point: the last ratio is the growth factor.
      ratios.assign(1, norm);
      break;
    }
    if (tail < 0 && residual <= tol) tail = kWindow - 1;
    if (tail == 0) break;
    if (tail > 0) --tail;
  }

  Rational sum(0);
  for (const Rational& r : ratios) sum += r;
  const double lambda = (sum / Rational(static_cast<long>(ratios.size()))).to_double();
  est.lambda = std::max(1.0, lambda);
  est.log_lambda = std::log(est.lambda);
  est.converged = residual <= tol;
  est.residual = residual.to_double();
  return est;
}

int scan_length_cap(const std::string& preset_name) {
  if (preset_name == "once-punctured-torus" || preset_name == "one-holed-torus") return 8;
  if (preset_name == "four-holed-sphere") return 6;
  preset_pair(preset_name);  // throws for presets without a pair
  return 0;
}

std::vector<ScanEntry> spectrum_scan(const std::string& preset_name, const ScanOptions& options) {
  const int cap = scan_length_cap(preset_name);
  if (options.max_word_length < 0) throw ValidationError("word length must be non-negative");
  if (options.max_word_length > cap) {
    throw ValidationError("word length " + std::to_string(options.max_word_length) + " exceeds the cap of " +
                          std::to_string(cap) + " for " + preset_name);
  }
  const CurvePair pair = preset_pair(preset_name);
  std::vector<RecipeLetter> alphabet;
  for (int i = 0; i < static_cast<int>(pair.C.size()); ++i) alphabet.push_back({Family::C, i, 1});
  for (int i = 0; i < static_cast<int>(pair.D.size()); ++i) alphabet.push_back({Family::D, i, -1});
  const int q = static_cast<int>(alphabet.size());

  // Enumerate by length, then lexicographically in alphabet order.
  std::vector<std::vector<RecipeLetter>> words;
  for (int len = 1; len <= options.max_word_length; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      std::vector<bool> seen(q, false);
      for (int d : digits) seen[d] = true;
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        std::vector<RecipeLetter> word;
        for (int d : digits) word.push_back(alphabet[d]);
        words.push_back(std::move(word));
      }
      int pos = len - 1;
      while (pos >= 0 && ++digits[pos] == q) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }

  const auto base = std::make_shared<const PantsDecomposition>(preset(preset_name).decomposition);
  const DTCoords seed = canonical_seed(*base);
  std::vector<ScanEntry> results(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < words.size(); i = next++) {
      Recipe r = build_recipe(base, pair.C, pair.D, words[i]);
      ScanEntry& e = results[i];
      e.word = format_word(r.word);
      for (const RecipeLetter& l : words[i]) {
        if (!e.letters.empty()) e.letters += ' ';
        e.letters += letter_name(l, pair.C.size());
      }
      e.estimate = estimate_dilatation(r.word, seed, options.max_iter, options.tol);
    }
  };
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, static_cast<int>(words.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return results[a].estimate.log_lambda < results[b].estimate.log_lambda;
  });

  // Merge runs whose values stay within 10 tol of the run's first value.
  const double merge = 10.0 * options.tol.to_double();
  std::vector<ScanEntry> out;
  for (std::size_t k = 0; k < order.size();) {
    const double head = results[order[k]].estimate.log_lambda;
    std::size_t best = order[k];
    std::size_t j = k + 1;
    for (; j < order.size() && results[order[j]].estimate.log_lambda - head <= merge; ++j) {
      best = std::min(best, order[j]);
    }
    out.push_back(results[best]);
    k = j;
  }
  return out;
}

}  // namespace dtc
