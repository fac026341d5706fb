#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace psdt {

using Edge = std::pair<int, int>;  // stored normalized, first < second

/* Finite simple graph over dense vertex indices 0..n-1. Immutable after
 * construction; the forcing engine accepts any graph, the tree-only
 * operations check is_tree() up front. */
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool is_connected() const;
    bool is_tree() const;  // connected and |E| = n - 1

    // Optional per-vertex labels; empty when unused.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string label);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // sorted
    std::vector<std::string> labels_;
};

// Per-vertex positive integer weights; domain matches the companion graph.
class WeightMap {
public:
    explicit WeightMap(std::vector<long long> weights);
    static WeightMap ones(int n);

    int size() const { return static_cast<int>(w_.size()); }
    long long of(int v) const { return w_.at(v); }
    long long sum(std::span<const int> vertices) const;
    const std::vector<long long>& values() const { return w_; }

private:
    std::vector<long long> w_;
};

/* Multiset of spider leg lengths, kept sorted nonincreasing. A partition of
 * n-1 with at least three parts identifies the spider on n vertices. */
class SpiderPartition {
public:
    explicit SpiderPartition(std::vector<int> legs);

    const std::vector<int>& legs() const { return legs_; }
    int leg_count() const { return static_cast<int>(legs_.size()); }
    int order() const;  // 1 + sum of legs

    std::string to_string() const;  // "S(4,3,2)"

    bool operator==(const SpiderPartition& o) const { return legs_ == o.legs_; }
    bool operator<(const SpiderPartition& o) const { return legs_ < o.legs_; }

private:
    std::vector<int> legs_;
};

Graph make_path(int n);
Graph make_spider(const SpiderPartition& p);
Graph make_balanced_spider(int alpha, int beta);  // alpha >= 3 legs of length beta >= 1
Graph make_full_binary_tree(int height);          // 2^(h+1)-1 vertices, root = 0

/* Contract edge {u,v}: the merged vertex takes index min(u,v), the slot
 * max(u,v) is removed and higher indices shift down by one. */
Graph contract_edge(const Graph& g, int u, int v);

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);
int eccentricity(const Graph& g, int src);

/* Canonical form of a free tree (rooted at its center, AHU-style codes with
 * children sorted). Equal codes <=> isomorphic; the weighted variant also
 * requires matching weights. */
std::string tree_canonical_code(const Graph& t);
std::string tree_canonical_code(const Graph& t, const WeightMap& w);

namespace detail {
// make_spider without the >= 3 legs check, for internal/test use.
Graph make_spider_raw(std::span<const int> legs);
}  // namespace detail

}  // namespace psdt
