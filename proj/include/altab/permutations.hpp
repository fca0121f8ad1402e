#pragma once

// Bijections between alternative tableaux and permutations: postorder words
// of plane alternative trees, the forest-to-permutation map, the composite
// tableau-to-permutation bijection, the column insertion algorithm, and
// signed permutations for symmetric tableaux.

#include <altab/tableau.hpp>
#include <altab/trees.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace altab {

/// Repeat-free word of nonnegative integers.
using PermWord = std::vector<int>;

/// Throws RepeatedLetter (or SyntaxError for a negative letter).
void validate_perm_word(const PermWord& w);

/// Statistics as ascending letter sets.
struct PermStats {
  std::vector<int> ascents;   // a_i < a_{i+1}, and the last letter
  std::vector<int> descents;
  std::vector<int> rl_minima;  // smaller than every letter to the right
  std::vector<int> rl_maxima;  // greater than every letter to the right
  std::vector<int> shifted_rl_maxima;  // RL-maxima of the prefix before the minimum

  /// The same sets restricted to letters > `x`.
  PermStats above(int x) const;
  auto operator<=>(const PermStats&) const = default;
};

PermStats perm_stats(const PermWord& w);

/// Postorder traversal.
PermWord psi(const PlaneAltTree& t);
/// Word ending in its maximum (Black) or minimum (White) back to a tree.
PlaneAltTree psi_inv(const PermWord& w, Color root);

/// Black-rooted trees by decreasing root, then `x`, then white-rooted trees
/// by increasing root.
PermWord big_psi(const PlaneAltForest& f, int x);
/// The forest and the separator (the minimum letter).
std::pair<PlaneAltForest, int> big_psi_inv(const PermWord& w);

PermWord phi_n(const AltTableau& t, int x = 0);
/// Tableau labeled by the support of `w` minus its minimum.
AltTableau phi_n_inv(const PermWord& w);

/// Column insertion algorithm on a standard tableau. With `trace`, receives
/// the initial word and the word after each column.
PermWord phi_c(const AltTableau& t, std::vector<PermWord>* trace = nullptr);

struct SignedPerm {
  std::vector<int> letters;  // a permutation of 1..n
  std::vector<bool> barred;
  std::size_t size() const noexcept { return letters.size(); }
  auto operator<=>(const SignedPerm&) const = default;
};

void validate_signed_perm(const SignedPerm& s);

/// Symmetric standard tableau of size 2n to a signed permutation of size n.
SignedPerm signed_of(const AltTableau& t);
AltTableau signed_inv(const SignedPerm& s);

/// Space-separated letters.
std::string render_perm(const PermWord& w);
PermWord parse_perm(std::string_view text);
/// `(10,12,0,4,11,13)`
std::string render_perm_tuple(const PermWord& w);

/// Barred letters carry a trailing `'`, e.g. `3 1' 2`.
std::string render_signed(const SignedPerm& s);
SignedPerm parse_signed(std::string_view text);

}  // namespace altab
