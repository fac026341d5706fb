#include "psdt/concentration.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace psdt {

namespace {

// Weight-annotated rooted code of the subtree at x, entered from parent.
std::string branch_code(const Graph& t, const WeightMap& w, int x, int parent) {
    std::vector<std::string> kids;
    for (int y : t.neighbors(x))
        if (y != parent) kids.push_back(branch_code(t, w, y, x));
    std::sort(kids.begin(), kids.end());
    std::string code = "(" + std::to_string(w.of(x)) + ":";
    for (const auto& k : kids) code += k;
    code += ")";
    return code;
}

/* Pre-order traversal of the branch at root (parent = anchor), children
 * visited in (code, index) order. Two branches with equal codes yield
 * position-wise corresponding traversals, which realizes the symmetry. */
void canonical_order(const Graph& t, const WeightMap& w, int x, int parent,
                     std::vector<int>& out) {
    out.push_back(x);
    std::vector<std::pair<std::string, int>> kids;
    for (int y : t.neighbors(x))
        if (y != parent) kids.emplace_back(branch_code(t, w, y, x), y);
    std::sort(kids.begin(), kids.end());
    for (const auto& [code, y] : kids) canonical_order(t, w, y, x, out);
}

ConcentrationResult identity_result(const Graph& t, const WeightMap& w) {
    ConcentrationResult r{t, w, false, {}};
    r.fibers.resize(t.vertex_count());
    for (int i = 0; i < t.vertex_count(); ++i) r.fibers[i] = {i};
    return r;
}

}  // namespace

BranchDecomposition branches_at(const Graph& t, const WeightMap& w, int v) {
    if (!t.is_tree()) throw std::invalid_argument("branches_at: not a tree");
    if (v < 0 || v >= t.vertex_count()) throw std::invalid_argument("branches_at: vertex out of range");
    if (w.size() != t.vertex_count()) throw std::invalid_argument("branches_at: weight/graph size mismatch");

    BranchDecomposition bd;
    bd.anchor = v;
    for (int r : t.neighbors(v)) {
        Branch b;
        b.root = r;
        canonical_order(t, w, r, v, b.vertices);
        std::sort(b.vertices.begin(), b.vertices.end());
        b.code = branch_code(t, w, r, v);
        bd.branches.push_back(std::move(b));
    }
    return bd;
}

ConcentrationResult concentrate_at(const Graph& t, const WeightMap& w, int v) {
    BranchDecomposition bd = branches_at(t, w, v);  // validates inputs
    if (w.of(v) != 1)
        throw std::invalid_argument("concentrate_at: anchor weight must be 1");

    std::map<std::string, std::vector<int>> classes;  // code -> branch indices
    for (int i = 0; i < static_cast<int>(bd.branches.size()); ++i)
        classes[bd.branches[i].code].push_back(i);

    int n = t.vertex_count();
    std::vector<bool> removed(n, false);
    std::vector<long long> factor(n, 1);
    // partners[x]: removed vertices x stands for (x in a kept branch)
    std::vector<std::vector<int>> partners(n);
    bool any = false;

    for (const auto& [code, members] : classes) {
        int m = static_cast<int>(members.size());
        if (m < 2) continue;
        any = true;
        int keep = members[0];
        for (int i : members)
            if (bd.branches[i].vertices[0] < bd.branches[keep].vertices[0]) keep = i;

        std::vector<int> keep_ord;
        canonical_order(t, w, bd.branches[keep].root, v, keep_ord);
        for (int i : members) {
            if (i == keep) continue;
            std::vector<int> ord;
            canonical_order(t, w, bd.branches[i].root, v, ord);
            for (std::size_t j = 0; j < ord.size(); ++j) {
                removed[ord[j]] = true;
                partners[keep_ord[j]].push_back(ord[j]);
            }
        }
        for (int x : keep_ord) factor[x] = m;
    }

    if (!any) return identity_result(t, w);

    std::vector<int> new_index(n, -1);
    std::vector<int> survivors;
    for (int x = 0; x < n; ++x)
        if (!removed[x]) {
            new_index[x] = static_cast<int>(survivors.size());
            survivors.push_back(x);
        }

    std::vector<Edge> edges;
    for (const auto& [a, b] : t.edges())
        if (!removed[a] && !removed[b])
            edges.emplace_back(new_index[a], new_index[b]);

    Graph nt(static_cast<int>(survivors.size()), std::move(edges));
    std::vector<long long> nw;
    std::vector<std::vector<int>> fibers;
    for (int x : survivors) {
        nw.push_back(w.of(x) * factor[x]);
        std::vector<int> fib = partners[x];
        fib.push_back(x);
        std::sort(fib.begin(), fib.end());
        fibers.push_back(std::move(fib));
        if (!t.labels().empty() && !t.labels()[x].empty())
            nt.set_label(new_index[x], t.labels()[x]);
    }
    return ConcentrationResult{std::move(nt), WeightMap(std::move(nw)), true, std::move(fibers)};
}

ConcentrationResult full_concentration(const Graph& t, const WeightMap& w) {
    ConcentrationResult acc = identity_result(t, w);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        const Graph& cur = acc.tree;
        std::vector<int> dist = bfs_distances(cur, 0);
        std::vector<int> order(cur.vertex_count());
        for (int i = 0; i < cur.vertex_count(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return dist[a] > dist[b]; });
        for (int v : order) {
            if (acc.weights.of(v) != 1) continue;
            ConcentrationResult step = concentrate_at(cur, acc.weights, v);
            if (!step.changed) continue;
            // compose fibers: step indices reference acc.tree, expand to originals
            std::vector<std::vector<int>> composed;
            for (const auto& fib : step.fibers) {
                std::vector<int> merged;
                for (int mid : fib)
                    merged.insert(merged.end(), acc.fibers[mid].begin(), acc.fibers[mid].end());
                std::sort(merged.begin(), merged.end());
                composed.push_back(std::move(merged));
            }
            acc.tree = std::move(step.tree);
            acc.weights = std::move(step.weights);
            acc.fibers = std::move(composed);
            acc.changed = true;
            progressed = true;
            break;  // geometry changed; restart the scan
        }
    }
    return acc;
}

std::vector<int> lift_set(const ConcentrationResult& record, const std::vector<int>& b_conc) {
    std::vector<int> out;
    for (int v : b_conc) {
        if (v < 0 || v >= static_cast<int>(record.fibers.size()))
            throw std::invalid_argument("lift_set: vertex out of range");
        out.insert(out.end(), record.fibers[v].begin(), record.fibers[v].end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace psdt
