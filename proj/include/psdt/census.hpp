#pragma once

#include "psdt/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psdt {

/* Decides whether a spider with the given remaining leg lengths can be
 * fully forced within p rounds using at most s further chosen vertices
 * (plus the center when center_colored). Greedy longest-leg-first
 * recursion; its agreement with the exhaustive search is a tested
 * property, not an assumption. */
bool spidthrot(std::vector<int> legs, bool center_colored, int s, int p);

// Least t admitting a split s + p = t (1 <= s <= t) that spidthrot accepts.
int spider_throttle(const SpiderPartition& part);

/* Streams the spiders on n vertices: partitions of n-1 with >= 3 parts in
 * reverse-lexicographic order, largest first part first. */
class SpiderEnumerator {
public:
    explicit SpiderEnumerator(int n);  // n >= 4
    std::optional<SpiderPartition> next();

private:
    void advance();
    std::vector<int> parts_;  // nonincreasing; empty once exhausted
};

std::vector<SpiderPartition> enumerate_spiders(int n);

/* One row of the super-spider table. examples lists the partitions whose
 * spider throttling exceeds the path value, sorted ascending; truncated
 * marks a capped list and budget_exceeded marks a spider whose value was
 * not pinned down within path value + extra budget (reported, never
 * silently dropped). */
struct CensusRow {
    int n = 0;
    int path_value = 0;
    long long super_count = 0;
    std::vector<SpiderPartition> examples;
    bool truncated = false;
    bool budget_exceeded = false;
};

struct CensusOptions {
    int extra_budget = 1;  // re-score super-spiders up to path value + this
    int example_cap = 8;
    bool full_examples = false;
};

CensusRow census(int n, const CensusOptions& opts = {});

// Rows with super_count > 0 only, ascending n (orders below 4 have no spiders).
std::vector<CensusRow> census_range(int n_lo, int n_hi, const CensusOptions& opts = {});

// "n,path_throttle,super_count,examples" with examples "S(a,b,c)|S(...)";
// "|..." marks truncation, "|budget-exceeded" the unpinned case.
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace psdt
