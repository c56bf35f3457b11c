#include "rooksa/rational.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace rooksa {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational: 64-bit overflow");
  }
  return static_cast<std::int64_t>(x);
}

} // namespace

Rational Rational::make(__int128 num, __int128 den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    return Rational{};
  }
  __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = make(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = make(static_cast<__int128>(num_) * o.den_ +
                   static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = make(static_cast<__int128>(num_) * o.den_ -
                   static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = make(static_cast<__int128>(num_) * o.num_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) {
    throw std::domain_error("Rational: division by zero");
  }
  *this = make(static_cast<__int128>(num_) * o.den_,
               static_cast<__int128>(den_) * o.num_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) {
    scale *= 10;
  }
  __int128 a = abs128(static_cast<__int128>(num_)) * scale;
  __int128 q = a / den_;
  if (2 * (a % den_) >= den_) {
    ++q; // half away from zero
  }
  std::string digits;
  if (q == 0) {
    digits = "0";
  } else {
    for (__int128 v = q; v > 0; v /= 10) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    }
    std::reverse(digits.begin(), digits.end());
  }
  while (static_cast<int>(digits.size()) <= places) {
    digits.insert(digits.begin(), '0');
  }
  if (places > 0) {
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (num_ < 0 && q != 0) {
    digits.insert(digits.begin(), '-');
  }
  return digits;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

} // namespace rooksa
