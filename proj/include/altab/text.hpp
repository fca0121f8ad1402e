#pragma once

// Text forms of tableaux.
//
//   compact:  [labels=l1,...,ln|]<word>|<arrow>;<arrow>;...   arrow = L<i>,<j> | U<i>,<j>
//   record:   one JSON object per line: labels, word, arrows ([i,j,"L"|"U"]),
//             statistics (written, ignored on input)
//   grid:     ASCII drawing, rows top to bottom by increasing label, columns
//             left to right by decreasing label
//
// Permutation tableaux use `[labels=...|]<word>|<i,j>;<i,j>;...` listing the
// 1-cells; without a prefix the labels are 0..n-1 (top row 0), matching the
// image of a standard alternative tableau.

#include <altab/perm_tableau.hpp>
#include <altab/tableau.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace altab {

enum class TableauFormat { Compact, Record, Grid };

AltTableau parse_tableau(std::string_view text);
std::string render_tableau(const AltTableau& t, TableauFormat format = TableauFormat::Compact);

PermTableau parse_perm_tableau(std::string_view text);
std::string render_perm_tableau(const PermTableau& p);

/// `{1,2,5}`
std::string format_label_set(const std::vector<int>& labels);

std::string format_cell(Cell c);

}  // namespace altab
