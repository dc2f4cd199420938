#include <doctest.h>

#include "dtc/coords.hpp"
#include "dtc/error.hpp"
#include "dtc/moves.hpp"
#include "support.hpp"

using namespace dtc;
using dtc::testing::coords;
using dtc::testing::surface;

TEST_CASE("normalization identifies (0, t) with (0, -t)") {
  const auto pd = surface("once-punctured-torus");
  CHECK(coords(*pd, {{0, -5}})[CurveId(0)].t == 5);
  CHECK(coords(*pd, {{2, -5}})[CurveId(0)].t == -5);
  CHECK_THROWS_AS(coords(*pd, {{-1, 0}}), ValidationError);
}

TEST_CASE("MF0 rejects boundary entries") {
  const auto pd = surface("four-holed-sphere");
  CHECK_NOTHROW(coords(*pd, {{2, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}, Scope::MF0));
  CHECK_THROWS_AS(coords(*pd, {{2, 1}, {2, 0}, {0, 0}, {0, 0}, {0, 0}}, Scope::MF0), ValidationError);
}

TEST_CASE("stale coordinates are rejected after a move") {
  const auto pd = surface("four-holed-sphere");
  const DTCoords c = coords(*pd, {{2, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  const Transformed r = move_second(*pd, c, pd->site_at(CurveId(0)));
  CHECK_THROWS_AS(twist(r.decomposition, c, CurveId(0), 1), ValidationError);
  CHECK_NOTHROW(twist(r.decomposition, r.coords, CurveId(0), 1));
}

TEST_CASE("JSON coordinates") {
  const auto pd = surface("four-holed-sphere");
  const DTCoords c = coords(*pd, {{Rational(3, 2), Rational(-1, 2)}, {1, 0}, {1, 0}, {0, 0}, {0, 0}});
  const auto doc = c.to_json(*pd);
  CHECK(doc["entries"][0]["t"] == "-1/2");
  CHECK(DTCoords::from_json(doc, *pd) == c);

  // A bare array listing only interior curves is read in MF0.
  const auto bare = nlohmann::json::parse(R"([{"curve":0,"m":"2","t":1}])");
  CHECK(DTCoords::from_json(bare, *pd).scope() == Scope::MF0);
  const auto with_boundary = nlohmann::json::parse(R"([{"curve":0,"m":2},{"curve":1,"m":1}])");
  CHECK(DTCoords::from_json(with_boundary, *pd).scope() == Scope::MF);

  CHECK_THROWS_AS(DTCoords::from_json(nlohmann::json::parse(R"([{"curve":9,"m":1}])"), *pd), ValidationError);
  CHECK_THROWS_AS(DTCoords::from_json(nlohmann::json::parse(R"([{"curve":0,"m":"x"}])"), *pd), ValidationError);
}

TEST_CASE("intersection numbers to arc weights") {
  // (4, 2, 2): two strands from 1 to 2 and two from 1 to 3.
  const PantsWeights w = m_to_lambda(4, 2, 2);
  CHECK(w.l12 == 2);
  CHECK(w.l13 == 2);
  CHECK(w.l23 == 0);
  CHECK(w.l11 == 0);
  // Loop case: (6, 1, 1) has two loops at boundary 1.
  const PantsWeights loop = m_to_lambda(6, 1, 1);
  CHECK(loop.l11 == 2);
  CHECK(loop.l12 == 1);
  CHECK(loop.l13 == 1);
  CHECK(loop.l23 == 0);
  const auto m = lambda_to_m(loop);
  CHECK(m[0] == 6);
  CHECK(m[1] == 1);
  CHECK(m[2] == 1);

  PantsWeights bad{};
  bad.l11 = 1;
  bad.l23 = 1;
  CHECK_THROWS_AS(lambda_to_m(bad), ValidationError);
  bad.l23 = 0;
  bad.l22 = 1;
  CHECK_THROWS_AS(lambda_to_m(bad), ValidationError);
}

TEST_CASE("integral multicurves") {
  const auto pd = surface("four-holed-sphere");
  CHECK_NOTHROW(validate_integral(coords(*pd, {{2, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}), *pd));
  CHECK_THROWS_AS(validate_integral(coords(*pd, {{1, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}), *pd), ValidationError);
  CHECK_THROWS_AS(validate_integral(coords(*pd, {{Rational(1, 2), 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}), *pd),
                  ValidationError);
}

TEST_CASE("sampling is deterministic and parity-valid") {
  for (const std::string& name : preset_names()) {
    const auto pd = surface(name);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const IntegralMulticurve a = sample(*pd, 7, seed);
      const IntegralMulticurve b = sample(*pd, 7, seed);
      CHECK(a.coords() == b.coords());
      for (const PantsCurve& c : pd->curves()) {
        CHECK(a.m(c.id) <= 7);
        CHECK(a.t(c.id) <= 7);
        CHECK(a.t(c.id) >= -7);
      }
    }
    const IntegralMulticurve z = sample(*pd, 5, 3, Scope::MF0);
    for (const PantsCurve& c : pd->curves()) {
      if (c.kind == CurveKind::Boundary) CHECK(z.m(c.id) == 0);
    }
  }
}
