#include <altab/asep.hpp>
#include <altab/enumeration.hpp>
#include <altab/error.hpp>

#include <cstdio>

namespace altab {

void validate_asep(const AsepParams& p) {
  if (p.q < 0 || p.q > 1) throw Error(ErrorCode::DegenerateParams, "q must lie in [0,1]");
  if (p.alpha <= 0 || p.alpha > 1)
    throw Error(ErrorCode::DegenerateParams, "alpha must lie in (0,1]");
  if (p.beta <= 0 || p.beta > 1) throw Error(ErrorCode::DegenerateParams, "beta must lie in (0,1]");
}

std::vector<std::string> asep_states(unsigned n) {
  std::vector<std::string> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::string s(n, '0');
    for (unsigned k = 0; k < n; ++k)
      if (mask & (1UL << (n - 1 - k))) s[k] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

std::string asep_word(const std::string& state) {
  std::string w;
  for (char c : state) w.push_back(c == '1' ? kRowStep : kColStep);
  return w;
}

std::vector<Rational> asep_distribution(const AsepParams& p) {
  validate_asep(p);
  check_enumeration_limit(p.n);
  const Rational x = 1 / p.alpha;
  const Rational y = 1 / p.beta;
  std::vector<Rational> w;
  Rational z = 0;
  for (const auto& s : asep_states(p.n)) {
    w.push_back(weight_poly(asep_word(s)).eval(p.q, x, y));
    z += w.back();
  }
  for (auto& v : w) v /= z;
  return w;
}

RationalMatrix asep_transition_matrix(const AsepParams& p) {
  validate_asep(p);
  const unsigned n = p.n;
  const auto states = asep_states(n);
  const std::size_t m = states.size();
  const Rational scale = Rational(1, n + 1);
  auto index = [&](const std::string& s) {
    std::size_t v = 0;
    for (char c : s) v = 2 * v + (c == '1');
    return v;
  };
  RationalMatrix out(m, std::vector<Rational>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    const auto& s = states[a];
    auto move = [&](std::string t, const Rational& rate) {
      if (rate == 0) return;
      out[a][index(t)] += rate * scale;
    };
    if (n > 0 && s[0] == '0') {
      auto t = s;
      t[0] = '1';
      move(t, p.alpha);
    }
    if (n > 0 && s[n - 1] == '1') {
      auto t = s;
      t[n - 1] = '0';
      move(t, p.beta);
    }
    for (unsigned k = 0; k + 1 < n; ++k) {
      auto t = s;
      std::swap(t[k], t[k + 1]);
      if (s[k] == '1' && s[k + 1] == '0') move(t, 1);
      else if (s[k] == '0' && s[k + 1] == '1') move(t, p.q);
    }
    Rational stay = 1;
    for (std::size_t b = 0; b < m; ++b)
      if (b != a) stay -= out[a][b];
    out[a][a] = stay;
  }
  return out;
}

std::vector<Rational> chain_stationary(const AsepParams& p, unsigned max_n) {
  if (p.n > max_n)
    throw Error(ErrorCode::ResourceLimit, "chain size " + std::to_string(p.n) +
                                              " exceeds the limit " + std::to_string(max_n));
  return stationary_vector(asep_transition_matrix(p));
}

std::string render_asep(unsigned n, const std::vector<Rational>& probs) {
  const auto states = asep_states(n);
  std::string out;
  for (std::size_t k = 0; k < states.size(); ++k) {
    char approx[64];
    std::snprintf(approx, sizeof approx, "%.6f", probs.at(k).convert_to<double>());
    out += (states[k].empty() ? std::string("-") : states[k]) + " " + to_string(probs[k]) + " [" +
           approx + "]\n";
  }
  return out;
}

}  // namespace altab
