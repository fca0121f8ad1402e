#include <altab/rational.hpp>
#include <altab/error.hpp>

#include <cctype>

namespace altab {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorCode::SyntaxError, "not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  auto digits = [&](std::string_view s) {
    if (s.empty()) fail();
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    return BigInt(std::string(s));
  };
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt den = digits(text.substr(slash + 1));
    if (den == 0) fail();
    r = Rational(digits(text.substr(0, slash)), den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const auto whole = text.substr(0, dot);
    r = Rational(whole.empty() ? BigInt(0) : digits(whole)) + Rational(digits(frac), scale);
  } else {
    r = Rational(digits(text));
  }
  return negative ? Rational(-r) : r;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace altab
