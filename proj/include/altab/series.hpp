#pragma once

// Power series in z truncated after z^N, with exact rational coefficients.
// Exponential generating functions are stored by their ordinary
// coefficients: the number counted by z^n/n! is n! times coefficient n.

#include <altab/rational.hpp>

#include <vector>

namespace altab {

class RationalSeries {
 public:
  /// The zero series truncated at order `order`.
  explicit RationalSeries(unsigned order);
  RationalSeries(unsigned order, std::vector<Rational> coeffs);

  static RationalSeries constant(unsigned order, const Rational& c);
  /// The series z.
  static RationalSeries z(unsigned order);
  /// Coefficients a_n / n!.
  static RationalSeries from_egf_counts(unsigned order, const std::vector<BigInt>& counts);

  unsigned order() const noexcept { return order_; }
  const Rational& operator[](unsigned n) const { return c_.at(n); }
  Rational& operator[](unsigned n) { return c_.at(n); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  /// n! times coefficient n.
  Rational egf(unsigned n) const;

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator-=(const RationalSeries& o);
  RationalSeries& operator*=(const Rational& s);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const Rational& s) { return a *= s; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  bool operator==(const RationalSeries&) const = default;

  RationalSeries derivative() const;

 private:
  unsigned order_;
  std::vector<Rational> c_;
};

RationalSeries ser_mul(const RationalSeries& a, const RationalSeries& b);
/// Multiplicative inverse; needs a nonzero constant term.
RationalSeries ser_inv(const RationalSeries& a);
/// Needs a zero constant term.
RationalSeries ser_exp(const RationalSeries& a);
/// Needs constant term 1.
RationalSeries ser_log(const RationalSeries& a);
/// a^r for rational r; needs constant term 1.
RationalSeries ser_pow(const RationalSeries& a, const Rational& r);

}  // namespace altab
