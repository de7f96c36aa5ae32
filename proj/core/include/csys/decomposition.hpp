#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "csys/connectivity.hpp"
#include "csys/instance_io.hpp"

namespace csys {

inline constexpr int kMinEnumSize = 3; // tree enumeration range
inline constexpr int kMaxEnumSize = 7;

// Unrooted tree with a leaf bijection onto the ground set. Every internal
// node has degree exactly 3 when |X| >= 3; |X| <= 2 uses the degenerate
// conventions (no internal nodes, and no edges at all for |X| <= 1).
struct DecompositionTree {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges; // unordered node pairs
    std::vector<int> leaf_element;          // node -> element index, -1 for internal

    int leaf_count() const;
    int degree(int node) const;
    // Throws InputError when the tree is not a valid branch decomposition
    // over a ground set of the given size.
    void validate(int ground_size) const;
};

struct EdgeCutRecord {
    int edge = 0;   // index into DecompositionTree::edges
    Mask side = 0;  // elements under the component of the smaller endpoint
    Value width = 0;
};

struct WidthReport {
    std::vector<EdgeCutRecord> records;
    Value width = 0; // max record width; f(X) for an edgeless tree
};

// Elements mapped from the leaves of the component containing the smaller
// endpoint of edge e, after removing e.
Mask edge_side_set(const DecompositionTree& tree, int edge, const GroundSet& ground);

Value width_of_edge(const DecompositionTree& tree, const ConnectivitySystem& system, int edge);
WidthReport width_of_tree(const DecompositionTree& tree, const ConnectivitySystem& system);

struct BranchwidthResult {
    Value width = 0;
    DecompositionTree witness;
};

// Exact branch-width by DP over subsets:
//   W(S) = f(S) for |S| = 1
//   W(S) = max(f(S), min over partitions S = A + B of max(W(A), W(B)))
//   bw(X) = min over partitions X = A + B of max(W(A), W(B))
// Witness reconstructed from the argmin choices, ties broken by the first
// minimizing partition in canonical subset order.
BranchwidthResult exact_branchwidth(const ConnectivitySystem& system);

// Every unrooted tree with n labeled leaves and internal degree 3, exactly
// once, by sequential leaf insertion into each edge. Count is (2n-5)!!.
void enumerate_all_trees(int n, const std::function<void(const DecompositionTree&)>& visit);
std::vector<DecompositionTree> all_trees(int n);

Value brute_force_branchwidth(const ConnectivitySystem& system);

// {"width": ..., "edge_widths": [{"side": [...], "width": ...}], "tree": <node>}
// with leaf nodes {"leaf": label} and internal nodes {"children": [a, b]},
// rooted at an arbitrary edge midpoint.
Json decomposition_to_json(const DecompositionTree& tree, const ConnectivitySystem& system);
DecompositionTree decomposition_from_json(const Json& doc, const GroundSet& ground);

// Re-verifies a serialized decomposition against the system: the tree must be
// valid, every reported edge width must match a recomputed cut, and the
// overall width must be the exact maximum.
struct DecompositionCheck {
    bool pass = true;
    std::vector<std::string> problems;
};
DecompositionCheck check_decomposition(const Json& doc, const ConnectivitySystem& system);

} // namespace csys
