#include "psdt/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace psdt {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& token, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected an integer, got '" + token + "'", line);
    return value;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::vector<long long> parse_int_list(const std::string& body, int line) {
    std::vector<long long> out;
    std::string token;
    std::istringstream iss(body);
    while (std::getline(iss, token, ',')) out.push_back(parse_int(strip(token), line));
    if (out.empty()) throw ParseError("expected a comma-separated integer list", line);
    return out;
}

struct RawFile {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::pair<int, long long>> weight_lines;  // (vertex, weight)
    std::vector<int> weight_line_numbers;
};

RawFile read_lines(std::istream& in) {
    RawFile raw;
    std::string line;
    int line_no = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        auto tokens = split_ws(s);
        if (!have_n) {
            if (tokens.size() != 1)
                throw ParseError("first line must be the vertex count", line_no);
            long long n = parse_int(tokens[0], line_no);
            if (n < 0 || n > 10'000'000) throw ParseError("bad vertex count", line_no);
            raw.n = static_cast<int>(n);
            have_n = true;
            continue;
        }
        if (tokens[0] == "w") {
            if (tokens.size() != 3)
                throw ParseError("weight line must be 'w <vertex> <weight>'", line_no);
            int v = static_cast<int>(parse_int(tokens[1], line_no));
            long long k = parse_int(tokens[2], line_no);
            raw.weight_lines.emplace_back(v, k);
            raw.weight_line_numbers.push_back(line_no);
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("edge line must be '<u> <v>'", line_no);
        int u = static_cast<int>(parse_int(tokens[0], line_no));
        int v = static_cast<int>(parse_int(tokens[1], line_no));
        raw.edges.emplace_back(u, v);
    }
    if (!have_n) throw ParseError("empty input: expected a vertex count line");
    return raw;
}

Graph build_graph(const RawFile& raw) {
    try {
        return Graph(raw.n, raw.edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

WeightedTree finish_weighted(const RawFile& raw) {
    Graph g = build_graph(raw);
    if (!g.is_tree()) throw ParseError("input is not a tree");

    std::vector<long long> weights(raw.n, 0);
    if (raw.weight_lines.empty()) {
        std::fill(weights.begin(), weights.end(), 1);
    } else {
        for (std::size_t i = 0; i < raw.weight_lines.size(); ++i) {
            auto [v, k] = raw.weight_lines[i];
            int line = raw.weight_line_numbers[i];
            if (v < 0 || v >= raw.n) throw ParseError("weight for unknown vertex", line);
            if (weights[v] != 0) throw ParseError("duplicate weight for vertex " + std::to_string(v), line);
            if (k < 1) throw ParseError("weights must be positive integers", line);
            weights[v] = k;
        }
        for (int v = 0; v < raw.n; ++v)
            if (weights[v] == 0)
                throw ParseError("missing weight line for vertex " + std::to_string(v));
    }
    return WeightedTree{std::move(g), WeightMap(std::move(weights))};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    RawFile raw = read_lines(in);
    if (!raw.weight_lines.empty())
        throw ParseError("unexpected weight line in an unweighted edge list",
                         raw.weight_line_numbers.front());
    return build_graph(raw);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

WeightedTree parse_weighted_tree(std::istream& in) {
    return finish_weighted(read_lines(in));
}

WeightedTree parse_weighted_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_weighted_tree(in);
}

std::string format_weighted_tree(const Graph& t, const WeightMap& w) {
    std::string out = format_edge_list(t);
    for (int v = 0; v < t.vertex_count(); ++v)
        out += "w " + std::to_string(v) + " " + std::to_string(w.of(v)) + "\n";
    return out;
}

SpiderPartition parse_spider_notation(const std::string& text) {
    std::string s = strip(text);
    if (s.size() >= 3 && (s[0] == 'S' || s[0] == 's') && s[1] == '(' && s.back() == ')')
        s = s.substr(2, s.size() - 3);
    auto values = parse_int_list(s, 0);
    std::vector<int> legs;
    for (long long v : values) {
        if (v < 1 || v > 1'000'000) throw ParseError("leg lengths must be positive integers");
        legs.push_back(static_cast<int>(v));
    }
    try {
        return SpiderPartition(std::move(legs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

GraphSpec parse_graph_spec(const std::string& spec) {
    std::string s = strip(spec);
    if (s.empty()) throw ParseError("empty graph spec");

    auto colon = s.find(':');
    std::string kind = colon == std::string::npos ? "" : s.substr(0, colon);
    std::string body = colon == std::string::npos ? s : s.substr(colon + 1);

    auto wrap = [](Graph g, std::string desc) {
        int n = g.vertex_count();
        return GraphSpec{std::move(g), WeightMap::ones(n), std::move(desc)};
    };

    try {
        if (kind == "path") {
            long long n = parse_int(strip(body), 0);
            if (n < 1) throw ParseError("path:n requires n >= 1");
            return wrap(make_path(static_cast<int>(n)), "path(" + std::to_string(n) + ")");
        }
        if (kind == "spider") {
            SpiderPartition p = parse_spider_notation(body);
            return wrap(make_spider(p), p.to_string());
        }
        if (kind == "balanced") {
            auto values = parse_int_list(strip(body), 0);
            if (values.size() != 2) throw ParseError("balanced:alpha,beta takes two integers");
            return wrap(make_balanced_spider(static_cast<int>(values[0]), static_cast<int>(values[1])),
                        "balanced(" + std::to_string(values[0]) + "," + std::to_string(values[1]) + ")");
        }
        if (kind == "bintree") {
            long long h = parse_int(strip(body), 0);
            return wrap(make_full_binary_tree(static_cast<int>(h)),
                        "bintree(" + std::to_string(h) + ")");
        }
        if (kind == "file") {
            std::ifstream in(body);
            if (!in) throw ParseError("cannot open file '" + body + "'");
            RawFile raw = read_lines(in);
            if (!raw.weight_lines.empty()) {
                WeightedTree wt = finish_weighted(raw);
                return GraphSpec{std::move(wt.tree), std::move(wt.weights), body};
            }
            Graph g = build_graph(raw);
            int n = g.vertex_count();
            return GraphSpec{std::move(g), WeightMap::ones(n), body};
        }
        if (kind.empty()) {  // bare spider notation: S(4,3,2) or 4,3,2
            SpiderPartition p = parse_spider_notation(s);
            return wrap(make_spider(p), p.to_string());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown graph spec '" + s + "' (use path:N, spider:A,B,C, S(A,B,C), "
                     "balanced:ALPHA,BETA, bintree:H, or file:PATH)");
}

}  // namespace psdt
