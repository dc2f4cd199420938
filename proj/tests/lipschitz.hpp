#pragma once

// Scalar that carries, next to its value, a Lipschitz bound of the value as
// a function of the inputs (each input starts with bound 1 in the max-norm).
// Sums add bounds, constant factors scale them, and max/min/abs keep the
// larger bound, so evaluating a formula on this type yields the sum of
// absolute coefficients along the worst branch.
//
// Every max/min/abs/sign evaluation records its call site, and whether its
// arguments tied there, so a test can tell which corners it actually
// straddled.

#include <map>
#include <source_location>
#include <stdexcept>
#include <utility>

#include "dtc/rational.hpp"

namespace dtc::testing {

struct CornerLog {
  // (line, column) -> {evaluations, ties}
  std::map<std::pair<unsigned, unsigned>, std::pair<long, long>> sites;
  void note(const std::source_location& loc, bool tie) {
    auto& s = sites[{loc.line(), loc.column()}];
    ++s.first;
    if (tie) ++s.second;
  }
};

inline CornerLog*& corner_log() {
  static CornerLog* log = nullptr;
  return log;
}

struct Lip {
  Rational v;
  Rational b;

  Lip() = default;
  Lip(long x) : v(x), b(0) {}  // NOLINT(google-explicit-constructor)
  Lip(long num, long den) : v(num, den), b(0) {}
  Lip(Rational value, Rational bound) : v(std::move(value)), b(std::move(bound)) {}

  static Lip input(const Rational& x) { return {x, Rational(1)}; }

  friend Lip operator+(const Lip& x, const Lip& y) { return {x.v + y.v, x.b + y.b}; }
  friend Lip operator-(const Lip& x, const Lip& y) { return {x.v - y.v, x.b + y.b}; }
  friend Lip operator-(const Lip& x) { return {-x.v, x.b}; }
  friend Lip operator*(const Lip& x, const Lip& y) {
    if (x.b != Rational(0) && y.b != Rational(0)) throw std::logic_error("nonlinear product");
    return {x.v * y.v, x.b == Rational(0) ? abs(x.v) * y.b : abs(y.v) * x.b};
  }
  friend bool operator==(const Lip& x, const Lip& y) { return x.v == y.v; }
  friend auto operator<=>(const Lip& x, const Lip& y) { return x.v <=> y.v; }
};

inline void note(const std::source_location& loc, bool tie) {
  if (corner_log()) corner_log()->note(loc, tie);
}

inline Lip abs(const Lip& x, std::source_location loc = std::source_location::current()) {
  note(loc, x.v == Rational(0));
  return {abs(x.v), x.b};
}
inline Lip pl_max(const Lip& x, const Lip& y, std::source_location loc = std::source_location::current()) {
  note(loc, x.v == y.v);
  return {pl_max(x.v, y.v), pl_max(x.b, y.b)};
}
inline Lip pl_min(const Lip& x, const Lip& y, std::source_location loc = std::source_location::current()) {
  note(loc, x.v == y.v);
  return {pl_min(x.v, y.v), pl_max(x.b, y.b)};
}
inline int sign_or(const Lip& x, int zero, std::source_location loc = std::source_location::current()) {
  note(loc, x.v == Rational(0));
  return sign_or(x.v, zero);
}

}  // namespace dtc::testing
