#pragma once

// Stationary law of the exclusion process with open boundaries (particles
// enter on the left at rate alpha, leave on the right at rate beta, hop
// right at rate 1 and left at rate q), both from tableau weights and from a
// direct solve of the chain.

#include <altab/error.hpp>
#include <altab/linalg.hpp>
#include <altab/rational.hpp>

#include <string>
#include <vector>

namespace altab {

constexpr unsigned kDefaultChainMaxN = 6;

struct AsepParams {
  unsigned n = 0;
  Rational q = 1;
  Rational alpha = 1;
  Rational beta = 1;
};

/// Throws DegenerateParams unless 0 <= q <= 1 and 0 < alpha, beta <= 1.
void validate_asep(const AsepParams& p);

/// States as strings over {0, 1} (1 = occupied site), lexicographic.
std::vector<std::string> asep_states(unsigned n);

/// Shape word of a state: occupied sites are row steps D, empty ones E.
std::string asep_word(const std::string& state);

/// Tableau weights q^fcell alpha^-fcol beta^-frow, normalized; indexed like
/// asep_states(n).
std::vector<Rational> asep_distribution(const AsepParams& p);

/// Transition matrix with every rate divided by n+1.
RationalMatrix asep_transition_matrix(const AsepParams& p);

/// Exact stationary vector of the chain, indexed like asep_states(n).
std::vector<Rational> chain_stationary(const AsepParams& p, unsigned max_n = kDefaultChainMaxN);

/// Lines `state fraction [decimal]`.
std::string render_asep(unsigned n, const std::vector<Rational>& probs);

}  // namespace altab
