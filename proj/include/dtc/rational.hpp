#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dtc {

/// Exact rational number. All coordinate arithmetic goes through this type;
/// floating point is only produced on request via to_double().
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// computed with 128-bit intermediates; anything larger moves to a GMP
/// rational, and results that fit again move back.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : n_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Accepts "p", "p/q", decimals ("0.25") and scientific notation ("1e-9").
  static Rational parse(std::string_view text);

  /// Canonical "p" or "p/q" form.
  std::string str() const;
  double to_double() const;
  bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
  /// Integer value when integral and representable.
  std::optional<std::int64_t> to_int64() const;
  int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
  mpq_class to_mpq() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static int compare(const Rational& a, const Rational& b);
  // Stores n / d (reduced, d > 0), or the GMP value if it does not fit.
  void assign(__int128 n, __int128 d);
  void assign(mpq_class v);

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<mpq_class> big_;  // set only when the value does not fit
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline Rational pl_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational pl_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
/// Sign in {+1, -1}; `zero` is returned for x == 0.
inline int sign_or(const Rational& x, int zero) {
  const int s = x.sign();
  return s == 0 ? zero : s;
}

}  // namespace dtc
