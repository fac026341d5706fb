#pragma once

#include "psdt/graph.hpp"

#include <optional>
#include <vector>

namespace psdt {

struct Force {
    int forcer;
    int forced;
    bool operator==(const Force& o) const { return forcer == o.forcer && forced == o.forced; }
};

/* Record of a full propagation run. rounds[k] holds the forces of time-step
 * k+1, all simultaneously valid against the blue set after round k. An empty
 * total_time means the initial set never forces the whole graph. */
struct ForcingSchedule {
    std::vector<std::vector<Force>> rounds;
    std::optional<int> total_time;
    bool forced_all() const { return total_time.has_value(); }
};

/* One application of the PSD color change rule: split the white vertices
 * into the components W_1..W_k of g - blue; a white w in W_i is forced when
 * some blue v has w as its only white neighbor within g[W_i + blue]. Every
 * force valid in this time-step is returned (smallest forcer wins when a
 * vertex could be forced from several). */
std::vector<Force> step_ccr_zplus(const Graph& g, const std::vector<bool>& blue);

ForcingSchedule propagate(const Graph& g, const std::vector<int>& blue);

// Just the time: number of rounds until all blue, empty if never.
std::optional<int> propagation_time(const Graph& g, const std::vector<int>& blue);

bool is_psd_forcing_set(const Graph& g, const std::vector<int>& blue);

struct SearchOptions {
    int cap = 31;                     // brute-force vertex-count cap
    bool cap_override = false;        // permit cap > 31 (hard ceiling 62)
    std::vector<int> required = {};   // restrict the search to supersets of these
};

// Minimum size of a PSD-forcing set, by subset enumeration in increasing
// cardinality. Throws BudgetError when the graph exceeds the cap.
int z_plus(const Graph& g, const SearchOptions& opts = {});

namespace detail {
// Validates blue (range, dedupe) and returns it as a membership vector.
std::vector<bool> to_membership(const Graph& g, const std::vector<int>& blue);
int effective_cap(const Graph& g, const SearchOptions& opts);  // throws BudgetError
}  // namespace detail

}  // namespace psdt
