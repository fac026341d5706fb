#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psdt/census.hpp"
#include "psdt/graph.hpp"
#include "psdt/spider_formulas.hpp"
#include "psdt/throttling.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace psdt;

namespace {

// number of partitions of m into at least `min_parts` parts, by DP over part sizes
long long partition_count_oracle(int m, int min_parts) {
    // p(m, k) = partitions of m into exactly k parts: p(m, k) = p(m-1, k-1) + p(m-k, k)
    std::vector<std::vector<long long>> p(m + 1, std::vector<long long>(m + 1, 0));
    p[0][0] = 1;
    for (int mm = 1; mm <= m; ++mm)
        for (int k = 1; k <= mm; ++k) p[mm][k] = p[mm - 1][k - 1] + p[mm - k][k];
    long long total = 0;
    for (int k = min_parts; k <= m; ++k) total += p[m][k];
    return total;
}

std::vector<int> random_partition_at_least_3(std::mt19937& rng, int order) {
    // split order-1 into >=3 parts by repeatedly carving off random chunks
    while (true) {
        int rest = order - 1;
        std::vector<int> legs;
        while (rest > 0) {
            std::uniform_int_distribution<int> d(1, rest);
            int take = d(rng);
            legs.push_back(take);
            rest -= take;
        }
        if (legs.size() >= 3) return legs;
    }
}

}  // namespace

TEST_CASE("spidthrot base cases and validation") {
    CHECK(spidthrot({}, true, 0, 0));
    CHECK(spidthrot({}, false, 1, 0));
    CHECK_FALSE(spidthrot({}, false, 0, 3));
    CHECK(spidthrot({1, 1, 1}, false, 1, 1));
    CHECK_FALSE(spidthrot({4, 3, 2}, false, 1, 2));
    CHECK(spidthrot({4, 3, 2}, false, 2, 3));
    CHECK_THROWS_AS(spidthrot({0, 1}, false, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(spidthrot({1, 1}, false, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(spidthrot({1, 1}, false, 1, -1), std::invalid_argument);
}

TEST_CASE("spider_throttle fixed values") {
    CHECK(spider_throttle(SpiderPartition({4, 3, 2})) == 5);
    CHECK(spider_throttle(SpiderPartition({5, 4, 3, 2})) == 6);
    CHECK(spider_throttle(SpiderPartition({1, 1, 1})) == 2);
}

TEST_CASE("descending staircase spiders take one extra step over the matching path") {
    for (int t = 4; t <= 12; ++t) {
        std::vector<int> legs;
        for (int l = t; l >= 2; --l) legs.push_back(l);
        SpiderPartition sp(legs);
        CHECK(static_cast<long long>(sp.order()) == triangle_number(t));
        CHECK(spider_throttle(sp) == t + 1);
    }
}

TEST_CASE("spider_throttle equals the subset search on small orders") {
    for (int n = 4; n <= 12; ++n)
        for (const SpiderPartition& sp : enumerate_spiders(n)) {
            Graph g = make_spider(sp);
            CHECK(spider_throttle(sp) == th_plus(g).value);
        }

    std::mt19937 rng(24601);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> size_d(6, 18);
        SpiderPartition sp(random_partition_at_least_3(rng, size_d(rng)));
        Graph g = make_spider(sp);
        CHECK(spider_throttle(sp) == th_plus(g).value);
    }
}

TEST_CASE("enumerate_spiders smallest cases") {
    CHECK_THROWS_AS(enumerate_spiders(3), std::invalid_argument);

    auto n4 = enumerate_spiders(4);
    REQUIRE(n4.size() == 1);
    CHECK(n4[0] == SpiderPartition({1, 1, 1}));

    auto n5 = enumerate_spiders(5);
    REQUIRE(n5.size() == 2);
    CHECK(n5[0] == SpiderPartition({2, 1, 1}));
    CHECK(n5[1] == SpiderPartition({1, 1, 1, 1}));
}

TEST_CASE("enumeration is complete, duplicate-free and reverse-lex ordered") {
    for (int n = 4; n <= 30; ++n) {
        auto sps = enumerate_spiders(n);
        CHECK(static_cast<long long>(sps.size()) == partition_count_oracle(n - 1, 3));
        CHECK(sps.front() == SpiderPartition(std::vector<int>{n - 3, 1, 1}));
        for (std::size_t i = 0; i < sps.size(); ++i) {
            CHECK(sps[i].order() == n);
            // reverse lexicographic on the descending leg vectors
            if (i + 1 < sps.size()) CHECK(sps[i + 1].legs() < sps[i].legs());
        }
    }
    CHECK(partition_count_oracle(9, 3) == 25);
    CHECK(enumerate_spiders(10).size() == 25);
}

TEST_CASE("census single rows") {
    CensusRow r10 = census(10);
    CHECK(r10.n == 10);
    CHECK(r10.path_value == 4);
    CHECK(r10.super_count == 1);
    REQUIRE(r10.examples.size() == 1);
    CHECK(r10.examples[0] == SpiderPartition({4, 3, 2}));
    CHECK_FALSE(r10.truncated);
    CHECK_FALSE(r10.budget_exceeded);

    CensusRow r11 = census(11);
    CHECK(r11.super_count == 0);
    CHECK(r11.examples.empty());

    CHECK_THROWS_AS(census(3), std::invalid_argument);
}

TEST_CASE("census range matches the known table through 30") {
    auto rows = census_range(1, 30);
    std::vector<int> ns, counts;
    for (const auto& r : rows) {
        ns.push_back(r.n);
        counts.push_back(r.super_count);
    }
    CHECK(ns == std::vector<int>{10, 15, 20, 21, 26, 27, 28});
    CHECK(counts == std::vector<int>{1, 4, 2, 17, 3, 17, 62});

    const CensusRow& r15 = rows[1];
    REQUIRE(r15.examples.size() == 4);
    CHECK(r15.examples[0] == SpiderPartition({5, 4, 3, 2}));
    CHECK(r15.examples[1] == SpiderPartition({5, 4, 4, 1}));
    CHECK(r15.examples[2] == SpiderPartition({6, 4, 4}));
    CHECK(r15.examples[3] == SpiderPartition({7, 4, 3}));
}

TEST_CASE("every reported super-spider really beats the path bound") {
    for (const auto& row : census_range(1, 30))
        for (const auto& sp : row.examples) {
            CHECK(spider_throttle(sp) > row.path_value);
            CHECK(sp.order() == row.n);
        }
}

TEST_CASE("example truncation and the full-examples switch") {
    CensusOptions capped;
    capped.example_cap = 5;
    CensusRow r28 = census(28, capped);
    CHECK(r28.super_count == 62);
    CHECK(r28.examples.size() == 5);
    CHECK(r28.truncated);

    CensusOptions full;
    full.full_examples = true;
    CensusRow r28f = census(28, full);
    CHECK(r28f.examples.size() == 62);
    CHECK_FALSE(r28f.truncated);
    CHECK(std::is_sorted(r28f.examples.begin(), r28f.examples.end()));
}

TEST_CASE("budget flag fires when the re-scored value is not pinned down") {
    CensusOptions tight;
    tight.extra_budget = 0;
    CensusRow r10 = census(10, tight);
    CHECK(r10.super_count == 1);
    CHECK(r10.budget_exceeded);

    CensusOptions roomy;
    roomy.extra_budget = 3;
    CHECK_FALSE(census(10, roomy).budget_exceeded);
}

TEST_CASE("census csv shape") {
    CensusOptions capped;
    capped.example_cap = 2;
    auto rows = census_range(1, 21, capped);
    std::string csv = census_csv(rows);
    CHECK(csv.find("n,path_throttle,super_count,examples") == 0);
    CHECK(csv.find("10,4,1,S(4,3,2)") != std::string::npos);
    CHECK(csv.find("15,5,4,S(5,4,3,2)|S(5,4,4,1)|...") != std::string::npos);
    CHECK(csv.find("21,6,17,") != std::string::npos);
}

TEST_CASE("census is deterministic") {
    auto a = census_range(1, 28);
    auto b = census_range(1, 28);
    CHECK(census_csv(a) == census_csv(b));
}
