#include "fewbody/exact.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fewbody {

namespace {

__extension__ typedef __int128 wide;

std::int64_t narrow(wide v) {
  if (v > INT64_MAX || v < -INT64_MAX) throw std::overflow_error("exact arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

wide gcd_wide(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(wide num, wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

// n = k² · s with s square-free; returns {k, s}.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t k = 1;
  std::int64_t s = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int power = 0;
    while (n % p == 0) {
      n /= p;
      ++power;
    }
    for (int i = 0; i < power / 2; ++i) k *= p;
    if (power % 2 == 1) s *= p;
  }
  return {k, s * n};
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("division by zero");
  if (numerator == INT64_MIN || denominator == INT64_MIN) throw std::overflow_error("exact arithmetic overflow");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return make(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  return *this = make(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                      static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = make(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  return *this = make(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<wide>(a.num_) * b.den_ < static_cast<wide>(b.num_) * a.den_;
}

Surd::Surd(const Rational& value) { add_term(1, value); }

Surd Surd::sqrt(const Rational& value) {
  if (value < Rational(0)) throw std::domain_error("square root of a negative rational");
  if (value.is_zero()) return Surd{};
  // √(p/q) = (a/b)√(s1/s2) = (a / (b s2)) √(s1 s2); gcd(s1, s2) = 1 since p/q is reduced.
  const auto [a, s1] = split_square(value.numerator());
  const auto [b, s2] = split_square(value.denominator());
  Surd out;
  out.add_term(narrow(static_cast<wide>(s1) * s2), make(a, static_cast<wide>(b) * s2));
  return out;
}

void Surd::add_term(std::int64_t radicand, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Surd::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Rational Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

double Surd::to_double() const {
  double sum = 0.0;
  for (const auto& [r, q] : terms_) sum += q.to_double() * std::sqrt(static_cast<double>(r));
  return sum;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, q] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (r == 1)
      out << q.str();
    else
      out << "(" << q.str() << ")√" << r;
  }
  return out.str();
}

Surd Surd::operator-() const {
  Surd out;
  for (const auto& [r, q] : terms_) out.terms_.emplace(r, -q);
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [r, q] : o.terms_) add_term(r, q);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [r, q] : o.terms_) add_term(r, -q);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [r1, q1] : terms_) {
    for (const auto& [r2, q2] : o.terms_) {
      // √r1 √r2 = g √(r1 r2 / g²), g = gcd(r1, r2).
      const std::int64_t g = std::gcd(r1, r2);
      out.add_term(narrow(static_cast<wide>(r1 / g) * (r2 / g)), q1 * q2 * Rational(g));
    }
  }
  return *this = out;
}

Surd& Surd::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  for (auto& [r, q] : terms_) q /= o;
  return *this;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace fewbody
