#pragma once

#include "psdt/errors.hpp"
#include "psdt/graph.hpp"

#include <iosfwd>
#include <string>

namespace psdt {

/* Edge-list text format: first line n, then one "u v" pair per line,
 * 0-indexed. Blank lines and lines starting with '#' are skipped.
 * Weighted trees append one "w i k" line per vertex (i = vertex, k =
 * positive integer weight; non-integer weights are rejected). Parse errors
 * carry 1-based line numbers. */

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

struct WeightedTree {
    Graph tree;
    WeightMap weights{WeightMap::ones(0)};
};

// Requires the underlying graph to be a tree and a weight line for every
// vertex when any is present; omitting all weight lines defaults to 1s.
WeightedTree parse_weighted_tree(std::istream& in);
WeightedTree parse_weighted_tree(const std::string& text);
std::string format_weighted_tree(const Graph& t, const WeightMap& w);

// "S(4,3,2)" or a bare comma list "4,3,2".
SpiderPartition parse_spider_notation(const std::string& text);

/* Inline graph specs accepted anywhere the CLI takes a graph:
 *   path:N        spider:A,B,C        S(A,B,C)  or  A,B,C
 *   balanced:ALPHA,BETA        bintree:H        file:PATH
 * File inputs auto-detect the weighted format; generated graphs get unit
 * weights. */
struct GraphSpec {
    Graph graph;
    WeightMap weights{WeightMap::ones(0)};
    std::string description;
};
GraphSpec parse_graph_spec(const std::string& spec);

}  // namespace psdt
