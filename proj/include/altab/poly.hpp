#pragma once

// Polynomials in q, x, y with big integer coefficients.

#include <altab/rational.hpp>

#include <array>
#include <map>
#include <string>

namespace altab {

class Poly3 {
 public:
  using Exponents = std::array<unsigned, 3>;  // powers of q, x, y

  Poly3() = default;
  Poly3(BigInt constant);
  static Poly3 monomial(unsigned q, unsigned x, unsigned y, BigInt coeff = 1);
  static Poly3 q();
  static Poly3 x();
  static Poly3 y();

  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  BigInt coeff(unsigned q, unsigned x, unsigned y) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  bool operator==(const Poly3&) const = default;

  Rational eval(const Rational& q, const Rational& x, const Rational& y) const;
  BigInt total() const;

  /// Terms by decreasing total degree, e.g. `q*x*y + x + y`.
  std::string to_string() const;

 private:
  void add(const Exponents& e, const BigInt& c);
  std::map<Exponents, BigInt> terms_;
};

}  // namespace altab
