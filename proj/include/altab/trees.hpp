#pragma once

// Tree encodings of alternative tableaux: plane alternative trees and
// forests, alternative arc diagrams, and binary alternative trees.

#include <altab/decomposition.hpp>
#include <altab/tableau.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace altab {

/// Recursion guard for the tree constructions.
constexpr int kMaxTreeDepth = 10000;

enum class Color { White, Black };

/// White vertices are minimal in their subtree with Black children in
/// decreasing order; Black vertices are maximal with White children in
/// increasing order.
struct PlaneAltTree {
  Color color = Color::White;
  int label = 0;
  std::vector<PlaneAltTree> children;
  auto operator<=>(const PlaneAltTree&) const = default;
};

/// Trees sorted by root label.
using PlaneAltForest = std::vector<PlaneAltTree>;

std::vector<Violation> check_tree(const PlaneAltTree& t);
std::vector<Violation> check_forest(const PlaneAltForest& f);
void validate_forest(const PlaneAltForest& f);

std::vector<int> tree_labels(const PlaneAltTree& t);
std::vector<int> forest_labels(const PlaneAltForest& f);

PlaneAltTree tree_of(const AltTableau& packed);
AltTableau tree_inv(const PlaneAltTree& t);

PlaneAltForest forest_of(const AltTableau& t);
AltTableau forest_inv(const PlaneAltForest& f);

/// `(W 4 (B 9 (W 6 (B 8)) (W 7)))`
std::string render_tree(const PlaneAltTree& t);
/// Trees separated by single spaces; the empty forest is the empty string.
std::string render_forest(const PlaneAltForest& f);
PlaneAltForest parse_forest(std::string_view text);

using Arc = std::pair<int, int>;

struct ArcDiagram {
  std::vector<int> points;  // ascending
  std::vector<Arc> arcs;    // i < j, sorted
  auto operator<=>(const ArcDiagram&) const = default;
};

bool topmost_left(const ArcDiagram& d, Arc a);
bool topmost_right(const ArcDiagram& d, Arc a);

std::vector<Violation> check_arc_diagram(const ArcDiagram& d);
void validate_arc_diagram(const ArcDiagram& d);

/// Points 0..n+1 of the standardized tableau: an arc per arrow, (0, j) per
/// free column, (i, n+1) per free row, and (0, n+1).
ArcDiagram arc_of(const AltTableau& t);

/// Forest on labels 1..n to its arc diagram on 0..n+1.
ArcDiagram phi(const PlaneAltForest& f);
PlaneAltForest phi_inv(const ArcDiagram& d);

/// Cells (i, j) of the crossings (i', j), (i, j') with i' < i < j < j',
/// the first arc topmost at j and the second topmost at i.
std::vector<Cell> out_crossings(const ArcDiagram& d);

/// Number of pairs of crossing arcs.
std::size_t crossing_count(const ArcDiagram& d);

/// `points=0..14 arcs=(0,1)(0,2)...`
std::string render_arcs(const ArcDiagram& d);
ArcDiagram parse_arcs(std::string_view text);

enum class BinKind { Min, Max };

struct BinNode;
/// Null is the empty tree.
using BinTree = std::shared_ptr<const BinNode>;

/// Left children are maximal in their subtree, right children minimal.
struct BinNode {
  int label = 0;
  BinTree left;
  BinTree right;
};

bool bin_equal(const BinTree& a, const BinTree& b);
std::size_t bin_size(const BinTree& t);
std::vector<Violation> check_bin(const BinTree& t, BinKind kind);

/// Min: tableaux without free columns, rooted at the smallest label.
/// Max: tableaux without free rows, rooted at the largest label.
BinTree bin_of(const AltTableau& t, BinKind kind);
AltTableau bin_inv(const BinTree& t, BinKind kind);

/// (Min-tree of the rows side, Max-tree of the columns side) of divide(t).
std::pair<BinTree, BinTree> couple_bin(const AltTableau& t);
AltTableau couple_bin_inv(const BinTree& min_tree, const BinTree& max_tree);

/// `(m L:<subtree|-> R:<subtree|->)`, or `-` for the empty tree.
std::string render_bin(const BinTree& t);
BinTree parse_bin(std::string_view text);
/// `<min-tree> <max-tree>`
std::string render_bin_pair(const std::pair<BinTree, BinTree>& p);
std::pair<BinTree, BinTree> parse_bin_pair(std::string_view text);

}  // namespace altab
