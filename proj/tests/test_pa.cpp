#include <doctest.h>

#include <cmath>

#include "dtc/error.hpp"
#include "dtc/pa.hpp"
#include "dtc/word_dsl.hpp"
#include "support.hpp"

using namespace dtc;
using dtc::testing::surface;

namespace {

const Rational kTol(1, 1000000000);
const RecipeLetter a{Family::C, 0, 1};
const RecipeLetter B{Family::D, 0, -1};

double golden() { return (3.0 + std::sqrt(5.0)) / 2.0; }

}  // namespace

TEST_CASE("recipe validation") {
  const Recipe r = build_preset_recipe("once-punctured-torus", {a, B});
  CHECK(r.spec.status == HypothesisStatus::VerifiedPreset);
  CHECK(format_word(r.word) == "T+0 M1@0 T-0 M1@0");
  CHECK(r.spec.warning.empty());

  CHECK_THROWS_AS(build_preset_recipe("once-punctured-torus", {a, a}), ValidationError);
  CHECK_THROWS_AS(build_preset_recipe("once-punctured-torus", {RecipeLetter{Family::C, 0, -1}, B}), ValidationError);
  CHECK_THROWS_AS(build_preset_recipe("once-punctured-torus", {a, RecipeLetter{Family::D, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(build_preset_recipe("genus-two-closed", {a, B}), ValidationError);

  // Same curves given explicitly on a non-preset base are not certified.
  const auto g2 = surface("genus-two-closed");
  const CurveExpr c1{{}, CurveId(1)};
  const CurveExpr d1{{Move{MoveKind::First, CurveId(1), std::nullopt}}, CurveId(1)};
  const Recipe u = build_recipe(g2, {c1}, {d1}, {a, B});
  CHECK(u.spec.status == HypothesisStatus::Unverified);
  CHECK_FALSE(u.spec.warning.empty());
}

TEST_CASE("dilatation of the basic torus word") {
  const Recipe r = build_preset_recipe("once-punctured-torus", {a, B});
  const DilatationEstimate e = estimate_dilatation(r.word, canonical_seed(*r.word.base), 500, kTol);
  CHECK(e.converged);
  CHECK(e.residual <= 1e-9);
  CHECK(std::abs(e.lambda - golden()) < 1e-6);
  CHECK(std::abs(e.log_lambda - std::log(golden())) < 1e-6);
}

TEST_CASE("dilatation on the four-holed sphere") {
  const Recipe r = build_preset_recipe("four-holed-sphere", {a, B});
  const DilatationEstimate e = estimate_dilatation(r.word, canonical_seed(*r.word.base), 500, kTol);
  CHECK(e.converged);
  // Trace-6 integral model: 3 + 2 sqrt 2.
  CHECK(std::abs(e.lambda - (3.0 + 2.0 * std::sqrt(2.0))) < 1e-6);
}

TEST_CASE("identity and reducible words") {
  const auto torus = surface("once-punctured-torus");
  DilatationEstimate e = estimate_dilatation(parse_word("", torus), canonical_seed(*torus), 100, kTol);
  CHECK(e.lambda == 1.0);
  CHECK(e.converged);
  CHECK(e.iterations == 1);
  e = estimate_dilatation(parse_word("T+0", torus), canonical_seed(*torus), 300, kTol);
  CHECK((!e.converged || std::abs(e.lambda - 1.0) < 1e-3));
  CHECK(e.lambda < 1.01);
  CHECK(e.lambda >= 1.0);
}

TEST_CASE("dilatation errors") {
  const auto torus = surface("once-punctured-torus");
  CHECK_THROWS_AS(estimate_dilatation(parse_word("T+0", torus), DTCoords::zero(*torus, Scope::MF0), 10, kTol),
                  ValidationError);
  const auto s04 = surface("four-holed-sphere");
  CHECK_THROWS_AS(estimate_dilatation(parse_word("M2@0 T+0", s04), canonical_seed(*s04), 10, kTol),
                  ValidationError);
}

TEST_CASE("inverse words, powers and seeds") {
  const Recipe r = build_preset_recipe("once-punctured-torus", {a, a, B});
  const DTCoords seed = canonical_seed(*r.word.base);
  const double lam = estimate_dilatation(r.word, seed, 500, kTol).lambda;
  CHECK(std::abs(estimate_dilatation(invert_word(r.word), seed, 500, kTol).lambda - lam) <= 2e-9);
  for (int k : {2, 3}) {
    const double lk = estimate_dilatation(power(r.word, k), seed, 500, kTol).lambda;
    CHECK(std::abs(lk - std::pow(lam, k)) / lk <= 1e-8);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DTCoords random_seed = sample(*r.word.base, 15, s + 1, Scope::MF0).coords();
    if (random_seed.is_zero()) continue;
    CHECK(std::abs(estimate_dilatation(r.word, random_seed, 500, kTol).lambda - lam) <= 1e-8);
  }
}

TEST_CASE("spectrum scans") {
  CHECK(spectrum_scan("once-punctured-torus", {0, kTol, 500, 1}).empty());
  const auto two = spectrum_scan("once-punctured-torus", {2, kTol, 500, 1});
  REQUIRE_FALSE(two.empty());
  CHECK(std::abs(two.front().estimate.log_lambda - std::log(golden())) < 1e-6);
  const auto four = spectrum_scan("once-punctured-torus", {4, kTol, 500, 2});
  for (std::size_t i = 1; i < four.size(); ++i) {
    CHECK(four[i - 1].estimate.log_lambda < four[i].estimate.log_lambda);
  }
  for (const ScanEntry& e : four) {
    CHECK(e.estimate.log_lambda >= two.front().estimate.log_lambda - 1e-9);
    CHECK(e.estimate.converged);
  }
  CHECK_THROWS_AS(spectrum_scan("once-punctured-torus", {9, kTol, 500, 1}), ValidationError);
  CHECK_THROWS_AS(spectrum_scan("four-holed-sphere", {7, kTol, 500, 1}), ValidationError);
  CHECK_THROWS_AS(spectrum_scan("genus-two-closed", {2, kTol, 500, 1}), ValidationError);
}
