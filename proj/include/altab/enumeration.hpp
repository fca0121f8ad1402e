#pragma once

// Exhaustive generation of alternative tableaux and the counts built on it:
// statistic tables, weight polynomials, decorated and symmetric tableaux.

#include <altab/poly.hpp>
#include <altab/rational.hpp>
#include <altab/tableau.hpp>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace altab {

constexpr unsigned kDefaultMaxN = 9;

/// The enumeration cap: ALTAB_MAX_N from the environment, else kDefaultMaxN.
unsigned max_enumeration_n();

/// Throws ResourceLimit when n exceeds `cap` (default: max_enumeration_n()).
void check_enumeration_limit(unsigned n, std::optional<unsigned> cap = std::nullopt);

using TableauVisitor = std::function<void(const AltTableau&)>;

/// Every filling of the standard-labeled shape `word`, by backtracking over
/// the columns from left to right and each column from top to bottom, each
/// cell trying empty, then Left, then Up.
void for_each_filling(const std::string& word, const TableauVisitor& visit);

/// The 2^n words over {D, E} in lexicographic order.
std::vector<std::string> all_words(unsigned n);

/// All tableaux of size n: shapes in lexicographic order, then fillings.
void for_each_tableau(unsigned n, const TableauVisitor& visit);
std::vector<AltTableau> all_tableaux(unsigned n);

/// Inverse images of all permutations of {0..n} under the permutation
/// bijection, in lexicographic order of the permutations.
void for_each_via_perm(unsigned n, const TableauVisitor& visit);
std::vector<AltTableau> all_via_perm(unsigned n);

/// Byte string identifying a tableau; cheap to hash and compare.
std::string tableau_key(const AltTableau& t);

struct CountKey {
  unsigned frow = 0;
  unsigned fcol = 0;
  unsigned rows = 0;
  auto operator<=>(const CountKey&) const = default;
};

struct CountTable {
  unsigned n = 0;
  std::map<CountKey, BigInt> counts;

  BigInt total() const;
  /// Number of tableaux with `i` free rows and `j` free columns.
  BigInt free_count(unsigned i, unsigned j) const;
  /// Sum of A_{i,j}(n) x^i y^j: x marks free rows, y free columns (as a
  /// Poly3 in its x and y variables).
  Poly3 free_poly() const;
  /// Sum of A_{i,j}(n,k) x^i y^j u^k.
  Rational eval(const Rational& u, const Rational& x, const Rational& y) const;

  /// Lines `n i j k count`, tab separated, then marginal lines
  /// `# total`, `# frow i count`, `# fcol j count`, `# rows k count`.
  std::string render() const;
};

/// Shapes are dealt round-robin to `jobs` worker threads and the partial
/// tables summed.
CountTable count_table(unsigned n, unsigned jobs = 1);

/// Sum over the fillings of `word` of q^fcell x^fcol y^frow.
Poly3 weight_poly(const std::string& word);

/// Sum over tableaux of size n of 2^(number of arrows).
BigInt decorated_count(unsigned n);

/// Tableaux of size n with no free cell.
BigInt no_free_cell_count(unsigned n);

/// The tableaux of size 2n fixed by transposition, built from a tableau U
/// without free columns of size n and a choice of one label in each pair
/// {i, 2n+1-i}.
std::vector<AltTableau> symmetric_tableaux(unsigned n);

/// Symmetric tableaux of the given size counted by filtering all tableaux.
BigInt symmetric_count_by_filter(unsigned size);

/// A tableau with a set of marked line labels. A decorated tableau marks the
/// lines of some of its arrows (the row of a Left arrow, the column of an Up
/// arrow), so only non-free lines.
struct MarkedTableau {
  AltTableau tableau;
  std::vector<int> marks;  // ascending
  auto operator<=>(const MarkedTableau&) const = default;
};

/// Decorated tableau of size n to a tableau without free rows with any
/// marking of its n lines.
MarkedTableau decorated_bijection(const MarkedTableau& decorated);
MarkedTableau decorated_inv(const MarkedTableau& marked);

/// Every decorated tableau of size n.
std::vector<MarkedTableau> all_decorated(unsigned n);

}  // namespace altab
