#pragma once

// Recursive structure of alternative tableaux: packed tableaux, cutting and
// blocking lines, closures of free labels, restriction, split/merge and
// divide.

#include <altab/tableau.hpp>

#include <string>
#include <utility>
#include <vector>

namespace altab {

enum class PackedClass { RowPacked, ColPacked, NotPacked };

std::string_view packed_class_name(PackedClass c);

/// RowPacked: one free row and no free column. ColPacked: the reverse.
PackedClass packed_class(const AltTableau& t);

enum class Axis { Row, Col };

/// Row: delete the topmost row (smallest row label); needs no empty column.
/// Col: delete the leftmost column (largest column label); needs no empty row.
/// A line is empty when it has no cells at all.
AltTableau cut(const AltTableau& t, Axis axis);

/// Col: add a top row labeled `label` (< every label) with an Up arrow above
/// each free column. Row: add a leftmost column labeled `label` (> every
/// label) with a Left arrow in each free row.
AltTableau block(const AltTableau& t, Axis axis, int label);

/// `block` on the standardized tableau, the result labeled 1..n+1.
AltTableau block_standard(const AltTableau& t, Axis axis);

/// Smallest label set containing the free label `k` such that both ends of
/// every arrow are in it or out of it together. Ascending.
std::vector<int> closure(const AltTableau& t, int k);

/// Sub-tableau on the labels `labels`, keeping arrows with both ends inside.
AltTableau restrict_to(const AltTableau& t, std::vector<int> labels);

struct Component {
  int root = 0;             // the free label the component was grown from
  std::vector<int> labels;  // ascending
  AltTableau tableau;
  auto operator<=>(const Component&) const = default;
};

/// Components ordered by ascending minimum label.
using LabeledPartition = std::vector<Component>;

LabeledPartition split(const AltTableau& t);

/// Union of two tableaux on disjoint label sets.
AltTableau merge(const AltTableau& a, const AltTableau& b);
AltTableau merge_all(const std::vector<AltTableau>& parts);
AltTableau merge_all(const LabeledPartition& parts);

/// (rows side, columns side): the restrictions to the union of the closures
/// of the free rows, and of the free columns.
std::pair<AltTableau, AltTableau> divide(const AltTableau& t);

/// One line per component: `<label-set> :: <compact tableau>`.
std::string render_partition(const LabeledPartition& parts);

}  // namespace altab
