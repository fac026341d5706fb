#pragma once

#include "psdt/graph.hpp"

#include <string>
#include <vector>

namespace psdt {

/* One component of T - anchor, rooted at the anchor's neighbor inside it.
 * Branches with equal codes are symmetric: a weight-preserving automorphism
 * of T fixes everything outside them and swaps them. */
struct Branch {
    int root;
    std::vector<int> vertices;  // sorted
    std::string code;           // weight-annotated rooted canonical code
};

struct BranchDecomposition {
    int anchor;
    std::vector<Branch> branches;
};

BranchDecomposition branches_at(const Graph& t, const WeightMap& w, int v);

/* Result of concentrating a weighted tree. fibers[i] lists, for vertex i of
 * the concentrated tree, the vertices of the input tree it stands for; the
 * weight of i equals the input weight of its fiber. Subsets of the
 * concentrated tree correspond one-to-one to symmetric subsets of the input
 * through these fibers. */
struct ConcentrationResult {
    Graph tree;
    WeightMap weights{WeightMap::ones(0)};
    bool changed = false;
    std::vector<std::vector<int>> fibers;
};

/* Single concentration at v: every maximal class of >= 2 pairwise symmetric
 * branches keeps one representative whose weights are multiplied by the
 * class size, the rest are deleted. Requires w(v) = 1; when no class of
 * size >= 2 exists the input is returned unchanged with changed = false. */
ConcentrationResult concentrate_at(const Graph& t, const WeightMap& w, int v);

/* Iterates concentrate_at until fixpoint. Anchors are visited leaf-inward
 * (decreasing BFS distance from vertex 0, ties by index) and the scan
 * restarts after every successful step, so the outcome is deterministic. */
ConcentrationResult full_concentration(const Graph& t, const WeightMap& w);

/* Expands a subset of the concentrated tree into the corresponding
 * symmetric subset of the tree the record was computed from. Costs and
 * propagation times agree across the correspondence. */
std::vector<int> lift_set(const ConcentrationResult& record, const std::vector<int>& b_conc);

}  // namespace psdt
