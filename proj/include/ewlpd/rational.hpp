// Copyright 2026 The ewlpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EWLPD_RATIONAL_HPP_
#define EWLPD_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ewlpd {

// Exact rational number. Always held in canonical form (gcd(num, den) = 1,
// den > 0); no operation ever rounds.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : q_(static_cast<signed long>(value)) {}  // NOLINT
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    q_ = mpq_class(mpz_class(static_cast<signed long>(num)),
                   mpz_class(static_cast<signed long>(den)));
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Exact binary value of a finite double (every double is a dyadic rational).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
    return Rational(mpq_class(x));
  }

  // Accepts "n", "n/d" and decimal literals such as "-0.25" or "1.5". Decimals
  // are converted exactly (0.1 -> 1/10), never through binary floating point.
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) return fail();

    auto is_integer = [](std::string_view v) {
      std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
      if (i == v.size()) return false;
      for (; i < v.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
      return true;
    };
    auto to_mpz = [](std::string v) {
      if (!v.empty() && v[0] == '+') v.erase(0, 1);
      return mpz_class(v, 10);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') return fail();
      mpz_class d = to_mpz(den);
      if (d == 0) throw std::invalid_argument("malformed rational: '" + s + "' (zero denominator)");
      mpq_class q(to_mpz(num), d);
      q.canonicalize();
      return Rational(q);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      std::string digits = whole;
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
      if (digits.empty() && frac.empty()) return fail();
      for (char c : digits + frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
      mpz_class scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      mpz_class num(digits.empty() ? std::string("0") : digits, 10);
      num = num * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac, 10));
      if (negative) num = -num;
      mpq_class q(num, scale);
      q.canonicalize();
      return Rational(q);
    }
    if (!is_integer(s)) return fail();
    return Rational(mpq_class(to_mpz(s)));
  }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  // "n" for integers, "n/d" otherwise; parse() inverts this exactly.
  std::string str() const { return q_.get_str(10); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline Rational square(const Rational& x) { return x * x; }

// 2^-k as an exact rational.
inline Rational pow2_inverse(unsigned k) {
  mpz_class den = 1;
  den <<= k;
  return Rational(mpq_class(mpz_class(1), den));
}

}  // namespace ewlpd

#endif  // EWLPD_RATIONAL_HPP_
