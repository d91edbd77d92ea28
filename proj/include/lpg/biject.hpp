#pragma once

#include "lpg/paths.hpp"
#include "lpg/trees.hpp"

namespace lpg {

// Multi-edge tree of total weight N >= 1 -> 3-colored Motzkin path of length
// N - 1 (H0 red, H1 green, H2 blue). Steps: forget weights, walk the tree to a
// Dyck path, drop its first and last step, code pairs UU->U, DD->d, UD->H0,
// DU->H1, then put weight-1 blue steps for the i-th pre-order edge into gap i.
LatticePath multiedge_to_3motzkin(const Tree& t);
Tree motzkin3_to_multiedge(const LatticePath& p);

// Marked ordered tree with n nodes -> decorated skew path with 2n - 2 steps;
// a marked edge is traversed upwards as a red down-step.
LatticePath marked_to_skew(const Tree& t);
Tree skew_to_marked(const LatticePath& p);

// Rotation correspondence: first child -> left, next sibling -> right, root
// dropped; an edge of weight a puts a - 1 unary nodes on top of its node.
Tree rotation_multiedge_to_unarybinary(const Tree& t);
Tree rotation_unarybinary_to_multiedge(const Tree& t);

}  // namespace lpg
