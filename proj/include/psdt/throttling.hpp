#pragma once

#include "psdt/forcing.hpp"
#include "psdt/graph.hpp"

#include <optional>
#include <vector>

namespace psdt {

/* Outcome of an exact throttling search. value = cost(witness) +
 * propagation_time, where cost is |B| for the unweighted search, w(B) for
 * the weighted one and omega*|B| for the scalar-weighted one. The witness is
 * the first optimum met when enumerating subsets by increasing cardinality,
 * lexicographic within a cardinality class. */
struct ThrottleResult {
    long long value = 0;
    std::vector<int> witness;
    int propagation_time = 0;
};

// |B| + pt_+(g;B); empty when B is not a PSD-forcing set.
std::optional<long long> th_plus_of_set(const Graph& g, const std::vector<int>& blue);

// w(B) + pt_+(g;B); empty when B is not a PSD-forcing set.
std::optional<long long> th_plus_weighted_of_set(const Graph& g, const WeightMap& w,
                                                 const std::vector<int>& blue);

ThrottleResult th_plus(const Graph& g, const SearchOptions& opts = {});
ThrottleResult th_plus_weighted(const Graph& g, const WeightMap& w,
                                const SearchOptions& opts = {});
ThrottleResult th_plus_omega(const Graph& g, long long omega, const SearchOptions& opts = {});

}  // namespace psdt
