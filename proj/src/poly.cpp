#include <altab/poly.hpp>

#include <algorithm>
#include <vector>

namespace altab {

Poly3::Poly3(BigInt constant) { add({0, 0, 0}, constant); }

Poly3 Poly3::monomial(unsigned q, unsigned x, unsigned y, BigInt coeff) {
  Poly3 p;
  p.add({q, x, y}, coeff);
  return p;
}

Poly3 Poly3::q() { return monomial(1, 0, 0); }
Poly3 Poly3::x() { return monomial(0, 1, 0); }
Poly3 Poly3::y() { return monomial(0, 0, 1); }

void Poly3::add(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt Poly3::coeff(unsigned q, unsigned x, unsigned y) const {
  auto it = terms_.find({q, x, y});
  return it == terms_.end() ? BigInt(0) : it->second;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Rational Poly3::eval(const Rational& q, const Rational& x, const Rational& y) const {
  auto power = [](const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
  };
  Rational out = 0;
  for (const auto& [e, c] : terms_) out += Rational(c) * power(q, e[0]) * power(x, e[1]) * power(y, e[2]);
  return out;
}

BigInt Poly3::total() const {
  BigInt out = 0;
  for (const auto& [e, c] : terms_) out += c;
  return out;
}

std::string Poly3::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first[0] + a.first[1] + a.first[2];
    const unsigned db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::string mono;
    static const char* names[] = {"q", "x", "y"};
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) out += mag.str();
    else if (mag == 1) out += mono;
    else out += mag.str() + "*" + mono;
  }
  return out;
}

}  // namespace altab
