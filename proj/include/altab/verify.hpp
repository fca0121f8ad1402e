#pragma once

// Exhaustive verification batteries behind `altab verify`.

#include <string>
#include <string_view>
#include <vector>

namespace altab {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, when failing
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, std::string detail = {});
  void append(const Report& other);
  /// `<name> PASS` or `<name> FAIL: <detail>`, one per line.
  std::string render() const;
};

/// Round trips and statistic transports for every tableau of size <= n_max.
Report verify_bijections(unsigned n_max);

/// Cardinalities against closed forms, and the two generators against each
/// other.
Report verify_counts(unsigned n_max);

/// Generating function identities, coefficientwise up to n_max.
Report formula_report(unsigned n_max);

/// Tableau weights against the chain for sizes up to min(n_max, 6), and the
/// weight relation DE = qED + D + E on all words of length <= n_max.
Report verify_asep(unsigned n_max);

/// suite: bijections, counts, series, asep or all.
Report verify_suite(std::string_view suite, unsigned n_max);

}  // namespace altab
