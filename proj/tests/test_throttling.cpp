#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psdt/errors.hpp"
#include "psdt/forcing.hpp"
#include "psdt/graph.hpp"
#include "psdt/spider_formulas.hpp"
#include "psdt/throttling.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

using namespace psdt;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.4) {
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

/* Enumerates subsets in the same canonical order the search promises
 * (cardinality, then lexicographic) and keeps the first minimizer. */
template <typename CostFn>
std::pair<long long, std::vector<int>> naive_best(const Graph& g, CostFn cost_of) {
    int n = g.vertex_count();
    long long best = -1;
    std::vector<int> witness;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            auto t = propagation_time(g, idx);
            if (t) {
                long long value = cost_of(idx) + *t;
                if (best < 0 || value < best) {
                    best = value;
                    witness = idx;
                }
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {best, witness};
}

}  // namespace

TEST_CASE("fixed values") {
    CHECK(th_plus(make_path(1)).value == 1);
    CHECK(th_plus(make_path(2)).value == 2);
    CHECK(th_plus(make_path(10)).value == 4);
    CHECK(th_plus(make_spider(SpiderPartition({4, 3, 2}))).value == 5);
    CHECK(th_plus(make_spider(SpiderPartition({1, 1, 1}))).value == 2);
    CHECK(th_plus(make_balanced_spider(3, 7)).value == 6);
}

TEST_CASE("canonical witness on the ten-vertex path") {
    ThrottleResult r = th_plus(make_path(10));
    CHECK(r.value == 4);
    CHECK(r.propagation_time == 2);
    CHECK(r.witness == std::vector<int>{2, 7});
}

TEST_CASE("closed form on paths") {
    for (int n = 1; n <= 13; ++n)
        CHECK(th_plus(make_path(n)).value == path_throttle(n));
}

TEST_CASE("value of a fixed set") {
    Graph p5 = make_path(5);
    CHECK(th_plus_of_set(p5, {0}) == 5);
    CHECK(th_plus_of_set(p5, {2}) == 3);
    CHECK(th_plus_of_set(p5, {0, 1, 2, 3, 4}) == 5);
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(th_plus_of_set(c4, {0}).has_value());

    WeightMap w({2, 1, 1, 1, 3});
    CHECK(th_plus_weighted_of_set(p5, w, {2}) == 3);
    CHECK(th_plus_weighted_of_set(p5, w, {0}) == 6);
    CHECK_THROWS_AS(th_plus_weighted_of_set(p5, WeightMap({1, 1}), {0}),
                    std::invalid_argument);
}

TEST_CASE("search equals naive enumeration, unweighted, with canonical witness") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, rng);
        auto [value, witness] =
            naive_best(g, [](const std::vector<int>& b) { return static_cast<long long>(b.size()); });
        ThrottleResult r = th_plus(g);
        CHECK(r.value == value);
        CHECK(r.witness == witness);
        CHECK(r.value == static_cast<long long>(r.witness.size()) + r.propagation_time);
    }
}

TEST_CASE("search equals naive enumeration, weighted") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, rng);
        std::vector<long long> weights(n);
        for (auto& x : weights) x = 1 + static_cast<long long>(rng() % 4);
        WeightMap w(weights);
        auto [value, witness] = naive_best(g, [&](const std::vector<int>& b) { return w.sum(b); });
        ThrottleResult r = th_plus_weighted(g, w);
        CHECK(r.value == value);
        CHECK(r.witness == witness);
        CHECK(r.value == w.sum(r.witness) + r.propagation_time);
    }
}

TEST_CASE("scalar omega weighting equals the constant weight map") {
    std::mt19937 rng(333);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, rng);
        for (long long omega = 1; omega <= 3; ++omega) {
            ThrottleResult a = th_plus_omega(g, omega);
            ThrottleResult b =
                th_plus_weighted(g, WeightMap(std::vector<long long>(n, omega)));
            CHECK(a.value == b.value);
            CHECK(a.witness == b.witness);
        }
    }
    CHECK_THROWS_AS(th_plus_omega(make_path(3), 0), std::invalid_argument);
}

TEST_CASE("required vertices restrict the search") {
    Graph t = make_balanced_spider(3, 4);
    SearchOptions with_center;
    with_center.required = {0};
    ThrottleResult r = th_plus(t, with_center);
    CHECK(std::find(r.witness.begin(), r.witness.end(), 0) != r.witness.end());
    // an optimal set containing the center exists for balanced spiders
    CHECK(r.value == th_plus(t).value);

    SearchOptions bad;
    bad.required = {99};
    CHECK_THROWS_AS(th_plus(t, bad), std::invalid_argument);

    // forcing a poor vertex can only raise the value
    Graph p7 = make_path(7);
    SearchOptions end;
    end.required = {0};
    CHECK(th_plus(p7, end).value >= th_plus(p7).value);
}

TEST_CASE("weighted example on the three-legged spider with long legs") {
    // legs of length 7; distance-1 and distance-5 vertices cheap, others 10
    Graph t = make_balanced_spider(3, 7);
    std::vector<long long> weights(t.vertex_count(), 10);
    auto dist = bfs_distances(t, 0);
    for (int v = 1; v < t.vertex_count(); ++v)
        if (dist[v] == 1 || dist[v] == 5) weights[v] = 1;
    ThrottleResult r = th_plus_weighted(t, WeightMap(weights));
    CHECK(r.value == 7);
}

TEST_CASE("budget errors") {
    CHECK_THROWS_AS(th_plus(make_path(35)), BudgetError);
    SearchOptions tight;
    tight.cap = 8;
    CHECK_THROWS_AS(th_plus(make_path(9), tight), BudgetError);
    CHECK_THROWS_AS(th_plus_weighted(make_path(3), WeightMap({1, 1})),
                    std::invalid_argument);
}
