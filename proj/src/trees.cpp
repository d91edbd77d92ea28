#include "lpg/trees.hpp"

#include <algorithm>

#include "lpg/errors.hpp"

namespace lpg {

bool operator==(const Edge& a, const Edge& b) {
  return a.weight == b.weight && a.marked == b.marked && tree_equal(a.child, b.child);
}

bool tree_equal(const Tree& a, const Tree& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->label == b->label && a->edges == b->edges;
}

Tree make_binary(Tree left, Tree right) {
  return std::make_shared<TreeNode>(
      TreeNode{TreeKind::binary, 0, {Edge{std::move(left)}, Edge{std::move(right)}}});
}

Tree make_unary(int label, Tree child) {
  return std::make_shared<TreeNode>(TreeNode{TreeKind::unary, label, {Edge{std::move(child)}}});
}

Tree make_ternary(Tree left, Tree middle, Tree right) {
  return std::make_shared<TreeNode>(TreeNode{
      TreeKind::ternary, 0, {Edge{std::move(left)}, Edge{std::move(middle)}, Edge{std::move(right)}}});
}

Tree make_ordered(std::vector<Edge> edges, bool weighted) {
  return std::make_shared<TreeNode>(
      TreeNode{TreeKind::ordered, weighted ? kWeighted : 0, std::move(edges)});
}

namespace {

// Builds families size by size; table[m] lists all trees of size m.
template <class Step>
std::vector<Tree> by_size(int n, Step step) {
  if (n < 0) return {};
  std::vector<std::vector<Tree>> table;
  for (int m = 0; m <= n; ++m) table.push_back(step(m, table));
  return table[n];
}

// Ordered forests whose subtrees have the given total size.
std::vector<std::vector<Edge>> forests(int size, const std::vector<std::vector<Tree>>& trees) {
  std::vector<std::vector<std::vector<Edge>>> f(static_cast<std::size_t>(size + 1));
  f[0] = {{}};
  for (int m = 1; m <= size; ++m)
    for (int first = 1; first <= m; ++first)
      for (const Tree& t : trees[first])
        for (const auto& rest : f[m - first]) {
          std::vector<Edge> e{Edge{t}};
          e.insert(e.end(), rest.begin(), rest.end());
          f[m].push_back(std::move(e));
        }
  return f[size];
}

}  // namespace

std::vector<Tree> gen_binary(int n) { return gen_unary_binary(n, 0); }

std::vector<Tree> gen_unary_binary(int n, int a) {
  return by_size(n, [a](int m, const std::vector<std::vector<Tree>>& t) {
    std::vector<Tree> out;
    if (m == 0) return std::vector<Tree>{nullptr};
    for (int l = 0; l <= m - 1; ++l)
      for (const Tree& L : t[l])
        for (const Tree& R : t[m - 1 - l]) out.push_back(make_binary(L, R));
    for (int c = 0; c < a; ++c)
      for (const Tree& C : t[m - 1])
        if (C) out.push_back(make_unary(c, C));
    return out;
  });
}

std::vector<Tree> gen_hex(int n) {
  return by_size(n, [](int m, const std::vector<std::vector<Tree>>& t) {
    std::vector<Tree> out;
    if (m == 0) return std::vector<Tree>{nullptr};
    if (m == 1) return std::vector<Tree>{make_binary(nullptr, nullptr)};
    for (int l = 1; l <= m - 2; ++l)
      for (const Tree& L : t[l])
        for (const Tree& R : t[m - 1 - l]) out.push_back(make_binary(L, R));
    for (int c = 0; c < 3; ++c)
      for (const Tree& C : t[m - 1]) out.push_back(make_unary(c, C));
    return out;
  });
}

std::vector<Tree> gen_ordered(int n) {
  if (n < 1) return {};
  return by_size(n, [](int m, const std::vector<std::vector<Tree>>& t) {
    std::vector<Tree> out;
    if (m == 0) return out;
    for (auto& f : forests(m - 1, t)) out.push_back(make_ordered(std::move(f)));
    return out;
  });
}

std::vector<Tree> gen_marked(int n) {
  if (n < 1) return {};
  return by_size(n, [](int m, const std::vector<std::vector<Tree>>& t) {
    std::vector<Tree> out;
    if (m == 0) return out;
    for (auto& f : forests(m - 1, t)) {
      out.push_back(make_ordered(f));
      // the rightmost edge may carry a mark unless it leads to a leaf
      if (!f.empty() && !f.back().child->edges.empty()) {
        f.back().marked = true;
        out.push_back(make_ordered(std::move(f)));
      }
    }
    return out;
  });
}

std::vector<Tree> gen_multiedge(int total_weight) {
  if (total_weight < 0) return {};
  // f[m]: edge sequences of total weight m (edge weight plus subtree weight)
  std::vector<std::vector<Tree>> trees;
  std::vector<std::vector<std::vector<Edge>>> f;
  for (int m = 0; m <= total_weight; ++m) {
    std::vector<std::vector<Edge>> fm;
    if (m == 0) fm.push_back({});
    for (int first = 1; first <= m; ++first)
      for (int w = 1; w <= first; ++w)
        for (const Tree& t : trees[first - w])
          for (const auto& rest : f[m - first]) {
            std::vector<Edge> e{Edge{t, w}};
            e.insert(e.end(), rest.begin(), rest.end());
            fm.push_back(std::move(e));
          }
    std::vector<Tree> tm;
    for (const auto& e : fm) tm.push_back(make_ordered(e, true));
    f.push_back(std::move(fm));
    trees.push_back(std::move(tm));
  }
  return trees[total_weight];
}

std::vector<Tree> gen_ternary(int n) {
  return by_size(n, [](int m, const std::vector<std::vector<Tree>>& t) {
    std::vector<Tree> out;
    if (m == 0) return std::vector<Tree>{nullptr};
    for (int l = 0; l <= m - 1; ++l)
      for (int c = 0; l + c <= m - 1; ++c)
        for (const Tree& L : t[l])
          for (const Tree& C : t[c])
            for (const Tree& R : t[m - 1 - l - c]) out.push_back(make_ternary(L, C, R));
    return out;
  });
}

int reg(const Tree& t) {
  if (!t) return 0;
  switch (t->kind) {
    case TreeKind::unary: return reg(t->edges[0].child);
    case TreeKind::binary: {
      int a = reg(t->edges[0].child);
      int b = reg(t->edges[1].child);
      return a == b ? a + 1 : std::max(a, b);
    }
    default: throw UsageError("reg: only binary and unary-binary trees");
  }
}

namespace {

void stats_rec(const Tree& t, int depth, TreeStats& st) {
  ++st.nodes;
  st.height_nodes = std::max(st.height_nodes, depth);
  bool any = false;
  for (std::size_t i = 0; i < t->edges.size(); ++i) {
    const Edge& e = t->edges[i];
    if (!e.child) continue;
    any = true;
    if (e.marked) ++st.mark_count;
    if (t->kind == TreeKind::ordered) {
      st.total_weight += e.weight;
      st.heavy_edge_excess += e.weight - 1;
    }
    if (t->kind == TreeKind::ternary && i == 1) ++st.middle_edges;
    stats_rec(e.child, depth + 1, st);
  }
  if (!any) ++st.leaves;
}

void str_rec(const Tree& t, std::string& out);

void edges_str(const TreeNode& node, std::string& out) {
  for (const Edge& e : node.edges) {
    out += e.marked ? "[" : "(";
    if (node.label == kWeighted) out += std::to_string(e.weight);
    edges_str(*e.child, out);
    out += e.marked ? "]" : ")";
  }
}

void str_rec(const Tree& t, std::string& out) {
  if (!t) {
    out += ".";
    return;
  }
  switch (t->kind) {
    case TreeKind::ordered:
      if (t->edges.empty())
        out += ".";
      else
        edges_str(*t, out);
      return;
    case TreeKind::unary:
      out += "[" + std::to_string(t->label) + ":";
      str_rec(t->edges[0].child, out);
      out += "]";
      return;
    case TreeKind::binary:
    case TreeKind::ternary:
      out += "(";
      for (std::size_t i = 0; i < t->edges.size(); ++i) {
        if (i) out += ",";
        str_rec(t->edges[i].child, out);
      }
      out += ")";
      return;
  }
}

}  // namespace

TreeStats tree_stats(const Tree& t) {
  TreeStats st;
  if (!t) return st;
  stats_rec(t, 1, st);
  st.height_edges = st.height_nodes - 1;
  return st;
}

std::string tree_str(const Tree& t) {
  std::string out;
  str_rec(t, out);
  return out;
}

}  // namespace lpg
