#pragma once

// Exact arithmetic for angular-momentum coefficients: rationals and finite
// sums q_1 √r_1 + q_2 √r_2 + ... with square-free radicands.

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace fewbody {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Invariant: keys square-free and positive, values nonzero.
class Surd {
 public:
  Surd() = default;
  Surd(std::int64_t value) : Surd(Rational(value)) {}
  Surd(const Rational& value);

  static Surd sqrt(const Rational& value);

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  double to_double() const;
  std::string str() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Rational& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Rational& b) { return a /= b; }
  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  void add_term(std::int64_t radicand, const Rational& coefficient);

  std::map<std::int64_t, Rational> terms_;
};

inline Surd conj(const Surd& s) { return s; }
inline bool is_negligible(const Surd& s) { return s.is_zero(); }
inline bool is_negligible(std::complex<double> z) { return std::abs(z) <= 1e-14; }

inline double to_double(const Surd& s) { return s.to_double(); }
inline std::complex<double> to_complex(const Surd& s) { return s.to_double(); }
inline std::complex<double> to_complex(std::complex<double> z) { return z; }

// n! for 0 <= n <= 20.
std::int64_t factorial(int n);

}  // namespace fewbody
