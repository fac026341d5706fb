#include "psdt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace psdt {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n_);
    std::set<Edge> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw std::invalid_argument("Graph: duplicate edge");
    }
    edges_ = std::move(edges);
    std::sort(edges_.begin(), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adj_.at(v);
}

int Graph::degree(int v) const {
    return static_cast<int>(adj_.at(v).size());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

bool Graph::is_tree() const {
    return edge_count() == n_ - 1 && is_connected();
}

void Graph::set_label(int v, std::string label) {
    if (v < 0 || v >= n_) throw std::invalid_argument("set_label: vertex out of range");
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(label);
}

WeightMap::WeightMap(std::vector<long long> weights) : w_(std::move(weights)) {
    for (long long x : w_)
        if (x < 1) throw std::invalid_argument("WeightMap: weights must be >= 1");
}

WeightMap WeightMap::ones(int n) {
    return WeightMap(std::vector<long long>(n, 1));
}

long long WeightMap::sum(std::span<const int> vertices) const {
    long long s = 0;
    for (int v : vertices) s += of(v);
    return s;
}

SpiderPartition::SpiderPartition(std::vector<int> legs) : legs_(std::move(legs)) {
    if (legs_.size() < 3)
        throw std::invalid_argument("SpiderPartition: fewer than 3 legs");
    for (int l : legs_)
        if (l < 1) throw std::invalid_argument("SpiderPartition: leg length must be >= 1");
    std::sort(legs_.begin(), legs_.end(), std::greater<int>());
}

int SpiderPartition::order() const {
    return 1 + std::accumulate(legs_.begin(), legs_.end(), 0);
}

std::string SpiderPartition::to_string() const {
    std::string s = "S(";
    for (size_t i = 0; i < legs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(legs_[i]);
    }
    return s + ")";
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

namespace detail {

Graph make_spider_raw(std::span<const int> legs) {
    int n = 1;
    for (int l : legs) {
        if (l < 1) throw std::invalid_argument("make_spider: leg length must be >= 1");
        n += l;
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int next = 1;
    for (int l : legs) {
        edges.push_back({0, next});
        for (int i = 1; i < l; ++i) {
            edges.push_back({next + i - 1, next + i});
        }
        next += l;
    }
    return Graph(n, std::move(edges));
}

}  // namespace detail

Graph make_spider(const SpiderPartition& p) {
    return detail::make_spider_raw(p.legs());
}

Graph make_balanced_spider(int alpha, int beta) {
    if (alpha < 3) throw std::invalid_argument("make_balanced_spider: alpha must be >= 3");
    if (beta < 1) throw std::invalid_argument("make_balanced_spider: beta must be >= 1");
    return detail::make_spider_raw(std::vector<int>(alpha, beta));
}

Graph make_full_binary_tree(int height) {
    if (height < 0) throw std::invalid_argument("make_full_binary_tree: height must be >= 0");
    if (height > 24) throw std::invalid_argument("make_full_binary_tree: height too large");
    int n = (1 << (height + 1)) - 1;
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
    Graph g(n, std::move(edges));
    g.set_label(0, "root");
    return g;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: {u,v} is not an edge");
    int keep = std::min(u, v);
    int gone = std::max(u, v);
    auto remap = [&](int x) {
        if (x == gone) return keep;
        return x > gone ? x - 1 : x;
    };
    std::set<Edge> out;
    for (auto [a, b] : g.edges()) {
        int x = remap(a), y = remap(b);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        out.insert({x, y});
    }
    return Graph(g.vertex_count() - 1, std::vector<Edge>(out.begin(), out.end()));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> idx(g.vertex_count(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        idx[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (idx[a] >= 0 && idx[b] >= 0) edges.push_back({idx[a], idx[b]});
    return Graph(static_cast<int>(vs.size()), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist.at(src) = 0;
    std::vector<int> frontier{src};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    return dist;
}

int eccentricity(const Graph& g, int src) {
    auto d = bfs_distances(g, src);
    int e = 0;
    for (int x : d) {
        if (x < 0) throw std::invalid_argument("eccentricity: graph is disconnected");
        e = std::max(e, x);
    }
    return e;
}

namespace {

std::string rooted_code(const Graph& t, const WeightMap* w, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int c : t.neighbors(v))
        if (c != parent) child_codes.push_back(rooted_code(t, w, c, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    if (w) code += std::to_string(w->of(v)) + ":";
    for (auto& c : child_codes) code += c;
    return code + ")";
}

// Tree centers via repeated leaf stripping; one or two vertices.
std::vector<int> tree_centers(const Graph& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            deg[v] = 0;
            for (int u : t.neighbors(v))
                if (deg[u] > 0 && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    return layer;
}

std::string canonical_impl(const Graph& t, const WeightMap* w) {
    if (!t.is_tree()) throw std::invalid_argument("tree_canonical_code: not a tree");
    if (t.vertex_count() == 0) return "()";
    auto centers = tree_centers(t);
    std::string best;
    for (int c : centers) {
        std::string code = rooted_code(t, w, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

std::string tree_canonical_code(const Graph& t) {
    return canonical_impl(t, nullptr);
}

std::string tree_canonical_code(const Graph& t, const WeightMap& w) {
    if (w.size() != t.vertex_count())
        throw std::invalid_argument("tree_canonical_code: weight domain mismatch");
    return canonical_impl(t, &w);
}

}  // namespace psdt
