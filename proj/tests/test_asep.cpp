#include <doctest.h>

#include <altab/asep.hpp>
#include <altab/linalg.hpp>

using namespace altab;

namespace {

// Checks global balance for the continuous-time chain directly from the
// rates: the flow into each state equals the flow out of it.
bool balanced(const AsepParams& p, const std::vector<Rational>& pi) {
  const unsigned n = p.n;
  const auto states = asep_states(n);
  auto index = [&](const std::string& s) {
    for (std::size_t k = 0; k < states.size(); ++k)
      if (states[k] == s) return k;
    return states.size();
  };
  std::vector<Rational> in(states.size()), out(states.size());
  auto flow = [&](std::size_t from, std::string to, const Rational& rate) {
    out[from] += pi[from] * rate;
    in[index(to)] += pi[from] * rate;
  };
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::string& s = states[k];
    if (n == 0) continue;
    if (s[0] == '0') {
      std::string t = s;
      t[0] = '1';
      flow(k, t, p.alpha);
    }
    if (s[n - 1] == '1') {
      std::string t = s;
      t[n - 1] = '0';
      flow(k, t, p.beta);
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
      std::string t = s;
      std::swap(t[i], t[i + 1]);
      if (s[i] == '1' && s[i + 1] == '0') flow(k, t, 1);
      if (s[i] == '0' && s[i + 1] == '1') flow(k, t, p.q);
    }
  }
  return in == out;
}

}  // namespace

TEST_CASE("states and words") {
  CHECK(asep_states(2) == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(asep_word("0110") == "EDDE");
  CHECK(asep_states(0) == std::vector<std::string>{""});
}

TEST_CASE("one site") {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(3, 4)}, {1, Rational(1, 5)}}) {
    const AsepParams p{1, Rational(1, 2), a, b};
    const auto d = asep_distribution(p);
    CHECK(d[1] == a / (a + b));
    CHECK(chain_stationary(p) == d);
  }
}

TEST_CASE("tableau weights give the stationary law") {
  const std::vector<std::array<Rational, 3>> params = {
      {1, Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), 1, 1},
      {Rational(1, 3), Rational(2, 3), Rational(1, 2)}, {0, Rational(1, 4), Rational(3, 5)}};
  for (unsigned n = 0; n <= 6; ++n)
    for (const auto& [q, a, b] : params) {
      const AsepParams p{n, q, a, b};
      const auto d = asep_distribution(p);
      Rational sum = 0;
      for (const auto& v : d) sum += v;
      CHECK(sum == 1);
      CHECK(balanced(p, d));
      if (n <= 5) CHECK(chain_stationary(p) == d);
    }
}

TEST_CASE("parameter checks and limits") {
  CHECK_THROWS_AS(validate_asep({2, 2, 1, 1}), Error);
  CHECK_THROWS_AS(validate_asep({2, 1, 0, 1}), Error);
  CHECK_THROWS_AS(validate_asep({2, 1, 1, Rational(3, 2)}), Error);
  CHECK_THROWS_AS(chain_stationary({7, 1, 1, 1}), Error);
  CHECK(render_asep(1, asep_distribution({1, 1, 1, 1})) == "0 1/2 [0.500000]\n1 1/2 [0.500000]\n");
}

TEST_CASE("exact linear algebra") {
  RationalMatrix a = {{2, 1}, {1, 3}};
  CHECK(solve(a, {3, 5}) == std::vector<Rational>{Rational(4, 5), Rational(7, 5)});
  CHECK_THROWS_AS(solve({{1, 2}, {2, 4}}, {1, 2}), Error);
  const RationalMatrix p = {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};
  CHECK(stationary_vector(p) == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("rational text") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == -3);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}
