#pragma once

#include "dubrovnik/laurent.hpp"
#include "dubrovnik/tangle.hpp"

#include <vector>

namespace dubrovnik {

// One edge of a root-to-leaf path in the layered computational tree.  A node
// at level f spawns an l-child and a p-child at level f-1 and an r-child at
// level f-2; p-edges mark their child as decremented (one fewer twist).
struct PathStep {
    enum class Branch { l, r, p };
    Branch branch;
    int level;         // level of the node the edge leaves, n..1
    bool decremented;  // that node was reached through a p-edge
};

bool operator==(const PathStep& lhs, const PathStep& rhs);

// A complete root-to-leaf path.  Leaves sit at level 0 (value 1, or a^-1
// when decremented) or level -1 (the two-component unlink value).
struct TreePath {
    std::vector<PathStep> steps;
    int leaf_level;         // 0 or -1
    bool leaf_decremented;  // leaf reached through a p-edge
};

// All root-to-leaf paths of the n-level tree in l, r, p branch order.  The
// shape depends only on n; counts obey |F(n)| = 2|F(n-1)| + |F(n-2)| with
// |F(0)| = 1 and |F(1)| = 3.
std::vector<TreePath> enumerate_paths(int n);

// Polynomial value of one path for a tuple of positive entries: the product
// of its level_coeffs edge weights times the leaf closure value.
LaurentPoly2 path_term(const TreePath& path, const BraidTuple& tuple);

// Dubrovnik polynomial as the closed-form sum of all path products of the
// tree, streamed by depth-first traversal with no reuse of subtree values.
// Parity normalization and mirror handling match the other engines.
LaurentPoly2 dubrovnik_closed(const BraidTuple& tuple);

// The individual path products summed by dubrovnik_closed, in
// enumerate_paths order, for a tuple of positive entries (odd length).
// Branches whose edge weight is zero still contribute their (zero) product.
std::vector<LaurentPoly2> dubrovnik_closed_terms(const BraidTuple& tuple);

}  // namespace dubrovnik
