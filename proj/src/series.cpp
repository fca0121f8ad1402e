#include <altab/series.hpp>
#include <altab/error.hpp>

namespace altab {

namespace {

void same_order(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::TruncationTooSmall, "series truncated at different orders");
}

}  // namespace

RationalSeries::RationalSeries(unsigned order) : order_(order), c_(order + 1) {}

RationalSeries::RationalSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

RationalSeries RationalSeries::constant(unsigned order, const Rational& c) {
  RationalSeries s(order);
  s.c_[0] = c;
  return s;
}

RationalSeries RationalSeries::z(unsigned order) {
  RationalSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

RationalSeries RationalSeries::from_egf_counts(unsigned order, const std::vector<BigInt>& counts) {
  if (counts.size() < order + 1)
    throw Error(ErrorCode::TruncationTooSmall, "fewer counts than the truncation order");
  RationalSeries s(order);
  for (unsigned n = 0; n <= order; ++n) s.c_[n] = Rational(counts[n], factorial(n));
  return s;
}

Rational RationalSeries::egf(unsigned n) const { return c_.at(n) * Rational(factorial(n)); }

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  same_order(*this, o);
  for (unsigned n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
  same_order(*this, o);
  for (unsigned n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries RationalSeries::derivative() const {
  RationalSeries out(order_);
  for (unsigned n = 0; n < order_; ++n) out.c_[n] = c_[n + 1] * (n + 1);
  return out;
}

RationalSeries ser_mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }

RationalSeries ser_inv(const RationalSeries& a) {
  if (a[0] == 0) throw Error(ErrorCode::NonUnitLog, "inverse needs a nonzero constant term");
  const unsigned n_max = a.order();
  RationalSeries out(n_max);
  out[0] = 1 / a[0];
  for (unsigned n = 1; n <= n_max; ++n) {
    Rational s = 0;
    for (unsigned k = 1; k <= n; ++k) s += a[k] * out[n - k];
    out[n] = -s / a[0];
  }
  return out;
}

// n f_n = sum_{k=1}^n k g_k f_{n-k}
RationalSeries ser_exp(const RationalSeries& g) {
  if (g[0] != 0) throw Error(ErrorCode::NonZeroExpConstant, "exp needs a zero constant term");
  RationalSeries f(g.order());
  f[0] = 1;
  for (unsigned n = 1; n <= g.order(); ++n) {
    Rational s = 0;
    for (unsigned k = 1; k <= n; ++k) s += Rational(k) * g[k] * f[n - k];
    f[n] = s / n;
  }
  return f;
}

// n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
RationalSeries ser_log(const RationalSeries& f) {
  if (f[0] != 1) throw Error(ErrorCode::NonUnitLog, "log needs constant term 1");
  RationalSeries g(f.order());
  for (unsigned n = 1; n <= f.order(); ++n) {
    Rational s = Rational(n) * f[n];
    for (unsigned k = 1; k < n; ++k) s -= Rational(k) * g[k] * f[n - k];
    g[n] = s / n;
  }
  return g;
}

// f_0 n h_n = sum_{k=1}^n (r k - (n - k)) f_k h_{n-k}
RationalSeries ser_pow(const RationalSeries& f, const Rational& r) {
  if (f[0] != 1) throw Error(ErrorCode::NonUnitLog, "power needs constant term 1");
  RationalSeries h(f.order());
  h[0] = 1;
  for (unsigned n = 1; n <= f.order(); ++n) {
    Rational s = 0;
    for (unsigned k = 1; k <= n; ++k) s += (r * k - Rational(n - k)) * f[k] * h[n - k];
    h[n] = s / n;
  }
  return h;
}

}  // namespace altab
