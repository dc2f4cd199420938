#include "dtc/rational.hpp"

#include <cctype>
#include <limits>

#include "dtc/error.hpp"

namespace dtc {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = -kMax;  // keep negation safe

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits(i128 x) { return x >= kMin && x <= kMax; }

mpz_class to_mpz(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class out = hi << 64;
  out += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  assign(static_cast<i128>(num), static_cast<i128>(den));
}

Rational::Rational(const mpq_class& v) { assign(v); }

void Rational::assign(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits(n) && fits(d)) {
    n_ = static_cast<std::int64_t>(n);
    d_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    assign(mpq_class(to_mpz(n), to_mpz(d)));
  }
}

void Rational::assign(mpq_class v) {
  v.canonicalize();
  const mpz_class& num = v.get_num();
  const mpz_class& den = v.get_den();
  if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != std::numeric_limits<long>::min()) {
    n_ = num.get_si();
    d_ = den.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(v));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) {
      assign(static_cast<i128>(n_) + o.n_, 1);
    } else {
      assign(static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_, static_cast<i128>(d_) * o.d_);
    }
  } else {
    assign(to_mpq() + o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) {
      assign(static_cast<i128>(n_) - o.n_, 1);
    } else {
      assign(static_cast<i128>(n_) * o.d_ - static_cast<i128>(o.n_) * d_, static_cast<i128>(d_) * o.d_);
    }
  } else {
    assign(to_mpq() - o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    assign(static_cast<i128>(n_) * o.n_, static_cast<i128>(d_) * o.d_);
  } else {
    assign(to_mpq() * o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw ValidationError("division by zero");
  if (!big_ && !o.big_) {
    assign(static_cast<i128>(n_) * o.d_, static_cast<i128>(d_) * o.n_);
  } else {
    assign(to_mpq() / o.to_mpq());
  }
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  if (a.big_) {
    r.assign(mpq_class(-*a.big_));
  } else {
    r.n_ = -a.n_;
    r.d_ = a.d_;
  }
  return r;
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == b.d_) return (a.n_ > b.n_) - (a.n_ < b.n_);
    const i128 l = static_cast<i128>(a.n_) * b.d_;
    const i128 r = static_cast<i128>(b.n_) * a.d_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

double Rational::to_double() const {
  if (!big_) return static_cast<double>(n_) / static_cast<double>(d_);
  return big_->get_d();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational { throw ValidationError("malformed rational '" + original + "'"); };

  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return fail();

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpq_class value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ValidationError("rational with zero denominator '" + original + "'");
    value = mpq_class(n, d);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp = text.substr(e + 1);
      bool exp_neg = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_neg = exp.front() == '-';
        exp.remove_prefix(1);
      }
      if (!all_digits(exp) || exp.size() > 6) return fail();
      exponent = std::stol(std::string(exp));
      if (exp_neg) exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto ip = mantissa.substr(0, dot);
      const auto fp = mantissa.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
          (!fp.empty() && !all_digits(fp))) {
        return fail();
      }
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mantissa)) return fail();
      digits = std::string(mantissa);
    }
    exponent -= frac_len;
    mpz_class n(digits, 10);
    if (exponent >= 0) {
      value = mpq_class(n * pow10(exponent));
    } else {
      value = mpq_class(n, pow10(-exponent));
    }
  }
  if (negative) value = -value;
  return Rational(value);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (big_ || d_ != 1) return std::nullopt;
  return n_;
}

}  // namespace dtc
