#pragma once

#include <memory>
#include <string>
#include <vector>

namespace lpg {

enum class TreeKind { binary, unary, ordered, ternary };

struct TreeNode;
// nullptr is the empty tree (the box in binary/ternary slots).
using Tree = std::shared_ptr<const TreeNode>;

struct Edge {
  Tree child;
  int weight = 1;       // multi-edge multiplicity
  bool marked = false;  // marked ordered trees

  friend bool operator==(const Edge& a, const Edge& b);
};

// Binary: two slots. Unary: one slot, label = color (hex: 0,1,2 = left,
// middle, right). Ordered: child list. Ternary: three slots.
// Hex leaves are binary nodes with two empty slots.
struct TreeNode {
  TreeKind kind = TreeKind::ordered;
  int label = 0;
  std::vector<Edge> edges;
};

bool tree_equal(const Tree& a, const Tree& b);

Tree make_binary(Tree left, Tree right);
Tree make_unary(int label, Tree child);
Tree make_ternary(Tree left, Tree middle, Tree right);
// Multi-edge nodes are ordered nodes with label kWeighted.
inline constexpr int kWeighted = 1;
Tree make_ordered(std::vector<Edge> edges, bool weighted = false);

// Sizes: internal nodes for binary / unary-binary / ternary, nodes for
// hex / ordered / marked, total edge weight for multi-edge.
std::vector<Tree> gen_binary(int n);
std::vector<Tree> gen_unary_binary(int n, int a);
std::vector<Tree> gen_hex(int n);
std::vector<Tree> gen_ordered(int n);
std::vector<Tree> gen_marked(int n);
std::vector<Tree> gen_multiedge(int total_weight);
std::vector<Tree> gen_ternary(int n);

// Horton-Strahler number; unary nodes pass through.
int reg(const Tree& t);

struct TreeStats {
  int nodes = 0;
  int leaves = 0;
  int height_nodes = 0;
  int height_edges = 0;
  int middle_edges = 0;
  int mark_count = 0;
  int total_weight = 0;
  int heavy_edge_excess = 0;  // sum of (weight - 1)
};

TreeStats tree_stats(const Tree& t);

// Ordered kinds: list of root edges, "(" or "[" (marked) followed by the
// weight (multi-edge only) and the child's edges; a lone root is ".".
// Slot kinds: "(L,R)", "(L,M,R)", "[k:C]", "." for the empty tree.
std::string tree_str(const Tree& t);

}  // namespace lpg
