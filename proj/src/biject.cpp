#include "lpg/biject.hpp"

#include "lpg/errors.hpp"

namespace lpg {

namespace {

void dyck_walk(const TreeNode& node, std::vector<bool>& ups, std::vector<int>& weights) {
  for (const Edge& e : node.edges) {
    ups.push_back(true);
    weights.push_back(e.weight);
    dyck_walk(*e.child, ups, weights);
    ups.push_back(false);
  }
}

// Rebuilds an ordered tree from a Dyck word; edges get weights in pre-order.
Tree from_dyck(const std::vector<bool>& ups, const std::vector<int>& weights, bool weighted) {
  struct Frame {
    std::vector<Edge> edges;
    int weight = 1;
  };
  std::vector<Frame> stack(1);
  std::size_t next_weight = 0;
  for (bool up : ups) {
    if (up) {
      Frame f;
      f.weight = next_weight < weights.size() ? weights[next_weight] : 1;
      ++next_weight;
      stack.push_back(std::move(f));
    } else {
      if (stack.size() < 2) throw DomainError("unbalanced Dyck word");
      Frame f = std::move(stack.back());
      stack.pop_back();
      stack.back().edges.push_back(Edge{make_ordered(std::move(f.edges), weighted), f.weight});
    }
  }
  if (stack.size() != 1) throw DomainError("unbalanced Dyck word");
  return make_ordered(std::move(stack[0].edges), weighted);
}

}  // namespace

LatticePath multiedge_to_3motzkin(const Tree& t) {
  if (!t || t->kind != TreeKind::ordered) throw UsageError("multiedge_to_3motzkin: ordered tree expected");
  std::vector<bool> ups;
  std::vector<int> weights;
  dyck_walk(*t, ups, weights);
  const std::size_t n = weights.size();
  if (n == 0) throw DomainError("multiedge_to_3motzkin: tree of weight 0");
  std::vector<Step> pairs;
  for (std::size_t i = 1; i + 2 < ups.size(); i += 2) {
    bool a = ups[i], b = ups[i + 1];
    if (a && b)
      pairs.push_back(up_step());
    else if (!a && !b)
      pairs.push_back(down_step());
    else
      pairs.push_back(horizontal_step(a ? 0 : 1));
  }
  LatticePath p{Family::motzkin, 0, {}};
  for (std::size_t gap = 0; gap < n; ++gap) {
    for (int k = 1; k < weights[gap]; ++k) p.steps.push_back(horizontal_step(2));
    if (gap < pairs.size()) p.steps.push_back(pairs[gap]);
  }
  return p;
}

Tree motzkin3_to_multiedge(const LatticePath& p) {
  std::vector<int> weights{1};
  std::vector<bool> ups{true};
  int level = 0;
  for (const Step& s : p.steps) {
    if (s.kind == StepKind::horizontal && horizontal_index(s) == 2) {
      ++weights.back();
      continue;
    }
    weights.push_back(1);
    switch (s.kind) {
      case StepKind::up: ups.insert(ups.end(), {true, true}); ++level; break;
      case StepKind::down: ups.insert(ups.end(), {false, false}); --level; break;
      case StepKind::horizontal:
        if (horizontal_index(s) == 0)
          ups.insert(ups.end(), {true, false});
        else
          ups.insert(ups.end(), {false, true});
        break;
    }
    if (level < 0 || s.size > 1) throw DomainError("motzkin3_to_multiedge: illegal path");
  }
  if (level != 0) throw DomainError("motzkin3_to_multiedge: path does not return to 0");
  ups.push_back(false);
  return from_dyck(ups, weights, true);
}

namespace {

void skew_walk(const TreeNode& node, std::vector<Step>& out) {
  for (const Edge& e : node.edges) {
    out.push_back(up_step());
    skew_walk(*e.child, out);
    out.push_back(down_step(1, e.marked ? Color::red : Color::black));
  }
}

}  // namespace

LatticePath marked_to_skew(const Tree& t) {
  if (!t || t->kind != TreeKind::ordered) throw UsageError("marked_to_skew: ordered tree expected");
  LatticePath p{Family::skew, 0, {}};
  skew_walk(*t, p.steps);
  return p;
}

Tree skew_to_marked(const LatticePath& p) {
  std::vector<std::vector<Edge>> stack(1);
  for (const Step& s : p.steps) {
    if (s.kind == StepKind::up) {
      if (!stack.back().empty() && stack.back().back().marked)
        throw DomainError("skew_to_marked: up-step after red step");
      stack.emplace_back();
    } else if (s.kind == StepKind::down) {
      if (stack.size() < 2) throw DomainError("skew_to_marked: path goes below 0");
      auto edges = std::move(stack.back());
      stack.pop_back();
      bool marked = s.color == Color::red;
      if (marked && edges.empty()) throw DomainError("skew_to_marked: red step after up-step");
      stack.back().push_back(Edge{make_ordered(std::move(edges)), 1, marked});
    } else {
      throw DomainError("skew_to_marked: horizontal step");
    }
  }
  if (stack.size() != 1) throw DomainError("skew_to_marked: path does not return to 0");
  return make_ordered(std::move(stack[0]));
}

namespace {

// Binary image of the edge list starting at index i (siblings chain right).
Tree rotate_siblings(const std::vector<Edge>& edges, std::size_t i) {
  if (i >= edges.size()) return nullptr;
  const Edge& e = edges[i];
  Tree node = make_binary(rotate_siblings(e.child->edges, 0), rotate_siblings(edges, i + 1));
  for (int k = 1; k < e.weight; ++k) node = make_unary(0, node);
  return node;
}

std::vector<Edge> unrotate(const Tree& b) {
  std::vector<Edge> out;
  Tree cur = b;
  while (cur) {
    int weight = 1;
    while (cur->kind == TreeKind::unary) {
      ++weight;
      cur = cur->edges[0].child;
    }
    if (cur->kind != TreeKind::binary) throw UsageError("rotation: unary-binary tree expected");
    out.push_back(Edge{make_ordered(unrotate(cur->edges[0].child), true), weight});
    cur = cur->edges[1].child;
  }
  return out;
}

}  // namespace

Tree rotation_multiedge_to_unarybinary(const Tree& t) {
  if (!t || t->kind != TreeKind::ordered) throw UsageError("rotation: multi-edge tree expected");
  return rotate_siblings(t->edges, 0);
}

Tree rotation_unarybinary_to_multiedge(const Tree& t) { return make_ordered(unrotate(t), true); }

}  // namespace lpg
