#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtc/coords.hpp"
#include "dtc/moves.hpp"

namespace dtc {

/// A curve given as the image of a pants curve: apply `conjugator` to the
/// base decomposition, then take `curve` of the resulting state. Twisting
/// along it expands to conjugator, twist, reversed conjugator.
struct CurveExpr {
  std::vector<Move> conjugator;
  CurveId curve;
  friend bool operator==(const CurveExpr&, const CurveExpr&) = default;
};

enum class Family { C, D };

struct RecipeLetter {
  Family family = Family::C;
  int index = 0;  // into C or D
  int sign = 1;   // +1 on C members, -1 on D members
  friend bool operator==(const RecipeLetter&, const RecipeLetter&) = default;
};

enum class HypothesisStatus { VerifiedPreset, Unverified };
std::string to_string(HypothesisStatus s);

struct RecipeSpec {
  std::vector<CurveExpr> C, D;
  std::vector<RecipeLetter> word;
  HypothesisStatus status = HypothesisStatus::Unverified;
  std::string warning;
};

struct Recipe {
  MappingWord word;
  RecipeSpec spec;
};

struct CurvePair {
  std::vector<CurveExpr> C, D;
};

/// Built-in filling pair for a preset: a pants curve and its image under the
/// site's elementary move. Throws ValidationError for presets without one.
CurvePair preset_pair(const std::string& preset_name);

/// Expands the twist word. Only the built-in pairs on their presets are
/// reported as verified; anything else carries a warning.
Recipe build_recipe(std::shared_ptr<const PantsDecomposition> base, std::vector<CurveExpr> C,
                    std::vector<CurveExpr> D, std::vector<RecipeLetter> word);
Recipe build_preset_recipe(const std::string& preset_name, std::vector<RecipeLetter> word);

/// Twist along a curve expression.
std::vector<Generator> expand_twist(const CurveExpr& curve, int sign);

struct DilatationEstimate {
  double lambda = 1.0;
  double log_lambda = 0.0;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

/// Projective power iteration of the word on exact coordinates, normalized
/// by the largest absolute entry. The word must bring the base decomposition
/// back to itself (up to relabeling pants). The distance between successive
/// normalized vectors is measured curve by curve in the quotient that
/// identifies (0, t) with (0, -t). After the distance first drops to `tol`
/// a few more steps are taken and lambda is the mean of the last five norm
/// ratios (clamped below at 1).
DilatationEstimate estimate_dilatation(const MappingWord& w, const DTCoords& seed, int max_iter,
                                       const Rational& tol);

/// m = 2, t = 1 on every interior curve, in MF0 scope.
DTCoords canonical_seed(const PantsDecomposition& pd);

/// Longest word a scan accepts for a preset.
int scan_length_cap(const std::string& preset_name);

struct ScanEntry {
  std::string word;  // expanded generator tokens
  std::string letters;  // recipe letters, e.g. "a B"
  DilatationEstimate estimate;
};

struct ScanOptions {
  int max_word_length = 4;
  Rational tol = Rational(1, 1000000000);
  int max_iter = 2000;
  int threads = 0;  // 0: hardware concurrency
};

/// All recipe words with 1..max_word_length twist letters, every member of
/// C and D used. Estimates within 10 tol of each other are merged (the
/// earliest word in enumeration order is kept); output ascending by
/// log_lambda. Independent of the thread count.
std::vector<ScanEntry> spectrum_scan(const std::string& preset_name, const ScanOptions& options);

}  // namespace dtc
