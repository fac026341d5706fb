#include "psdt/census.hpp"
#include "psdt/concentration.hpp"
#include "psdt/errors.hpp"
#include "psdt/forcing.hpp"
#include "psdt/graph_io.hpp"
#include "psdt/rational.hpp"
#include "psdt/spider_formulas.hpp"
#include "psdt/throttling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitParse = 2;   // unreadable input or bad arguments
constexpr int kExitBudget = 3;  // exact search refused by the size cap
constexpr int kExitVerify = 4;  // --verify equivalence check failed

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(xs[i]);
    }
    return out;
}

// %.9f with trailing zeros (and a bare point) trimmed; used for t_P.
std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", x);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

struct ThrottleCmd {
    std::string spec;
    int cap = 31;
    bool cap_override = false;
    std::string format = "text";
};

int run_throttle(const ThrottleCmd& cmd) {
    psdt::GraphSpec gs = psdt::parse_graph_spec(cmd.spec);
    psdt::SearchOptions opts;
    opts.cap = cmd.cap;
    opts.cap_override = cmd.cap_override;
    psdt::ThrottleResult res = psdt::th_plus_weighted(gs.graph, gs.weights, opts);

    if (cmd.format == "csv") {
        std::cout << "graph,n,value,propagation_time,witness\n"
                  << gs.description << "," << gs.graph.vertex_count() << "," << res.value << ","
                  << res.propagation_time << "," << join_ints(res.witness) << "\n";
    } else if (cmd.format == "json") {
        ordered_json j;
        j["graph"] = gs.description;
        j["n"] = gs.graph.vertex_count();
        j["value"] = res.value;
        j["propagation_time"] = res.propagation_time;
        j["witness"] = res.witness;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "graph: " << gs.description << "\n"
                  << "n: " << gs.graph.vertex_count() << "\n"
                  << "value: " << res.value << "\n"
                  << "witness: " << join_ints(res.witness) << "\n"
                  << "propagation_time: " << res.propagation_time << "\n";
        psdt::ForcingSchedule sched = psdt::propagate(gs.graph, res.witness);
        for (std::size_t k = 0; k < sched.rounds.size(); ++k) {
            std::cout << "round " << k + 1 << ":";
            for (const auto& f : sched.rounds[k])
                std::cout << " " << f.forcer << "->" << f.forced;
            std::cout << "\n";
        }
    }
    return 0;
}

struct CensusCmd {
    int n_lo = 0;
    int n_hi = 0;
    int budget_k = 1;
    bool full_examples = false;
    std::string format = "text";
};

int run_census(const CensusCmd& cmd) {
    psdt::CensusOptions opts;
    opts.extra_budget = cmd.budget_k;
    opts.full_examples = cmd.full_examples;
    std::vector<psdt::CensusRow> rows = psdt::census_range(cmd.n_lo, cmd.n_hi, opts);

    if (cmd.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["n"] = row.n;
            j["path_throttle"] = row.path_value;
            j["super_count"] = row.super_count;
            ordered_json ex = ordered_json::array();
            for (const auto& p : row.examples) ex.push_back(p.to_string());
            if (row.truncated) ex.push_back("...");
            if (row.budget_exceeded) ex.push_back("budget-exceeded");
            j["examples"] = std::move(ex);
            out.push_back(std::move(j));
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << psdt::census_csv(rows);
    }
    return 0;
}

struct ConcentrateCmd {
    std::string spec;
    int cap = 31;
    bool cap_override = false;
    bool verify = false;
    std::string format = "text";
};

int run_concentrate(const ConcentrateCmd& cmd) {
    psdt::GraphSpec gs = psdt::parse_graph_spec(cmd.spec);
    if (!gs.graph.is_tree()) throw psdt::ParseError("concentrate requires a tree input");
    psdt::ConcentrationResult res = psdt::full_concentration(gs.graph, gs.weights);
    if (!res.changed)
        std::cerr << "warning: no symmetric branches; tree unchanged\n";

    long long original_value = 0, concentrated_value = 0, lifted_value = 0;
    if (cmd.verify) {
        psdt::SearchOptions opts;
        opts.cap = cmd.cap;
        opts.cap_override = cmd.cap_override;
        psdt::ThrottleResult before = psdt::th_plus_weighted(gs.graph, gs.weights, opts);
        psdt::ThrottleResult after = psdt::th_plus_weighted(res.tree, res.weights, opts);
        std::vector<int> lifted = psdt::lift_set(res, after.witness);
        auto lifted_score = psdt::th_plus_weighted_of_set(gs.graph, gs.weights, lifted);
        original_value = before.value;
        concentrated_value = after.value;
        lifted_value = lifted_score.value_or(-1);
        std::cerr << "verify: original=" << original_value
                  << " concentrated=" << concentrated_value
                  << " lifted=" << lifted_value << "\n";
        if (original_value != concentrated_value || lifted_value != concentrated_value)
            throw VerifyFailure("throttling values diverge after concentration");
    }

    if (cmd.format == "json") {
        ordered_json j;
        j["n"] = res.tree.vertex_count();
        ordered_json edges = ordered_json::array();
        auto sorted_edges = res.tree.edges();
        std::sort(sorted_edges.begin(), sorted_edges.end());
        for (const auto& [u, v] : sorted_edges) edges.push_back({u, v});
        j["edges"] = std::move(edges);
        j["weights"] = res.weights.values();
        j["changed"] = res.changed;
        if (cmd.verify) {
            j["verify"] = ordered_json{{"original", original_value},
                                       {"concentrated", concentrated_value},
                                       {"lifted", lifted_value}};
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << psdt::format_weighted_tree(res.tree, res.weights);
    }
    return 0;
}

struct PlotCmd {
    int alpha = 3;
    int beta_max = 30;
    std::string format = "csv";
};

int run_plot_data(const PlotCmd& cmd) {
    if (cmd.alpha < 3) throw psdt::ParseError("plot-data requires alpha >= 3");
    if (cmd.beta_max < 1) throw psdt::ParseError("plot-data requires beta-max >= 1");

    // integer grid plus the exact breakpoints, merged and sorted
    std::vector<std::pair<psdt::Rational, int>> rows;  // (beta, breakpoint s or 0)
    for (int b = 0; b <= cmd.beta_max; ++b) rows.emplace_back(psdt::Rational(b), 0);
    for (int s = 1;; ++s) {
        psdt::Rational bs = psdt::beta_breakpoint(cmd.alpha, s);
        if (bs > psdt::Rational(cmd.beta_max)) break;
        bool merged = false;
        for (auto& [beta, mark] : rows)
            if (beta == bs) {
                mark = s;
                merged = true;
                break;
            }
        if (!merged) rows.emplace_back(bs, s);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    auto marker = [](int s) { return s > 0 ? std::to_string(s) : std::string(); };
    if (cmd.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& [beta, s] : rows) {
            ordered_json j;
            j["beta"] = psdt::to_decimal_string(beta);
            j["t_S"] = psdt::to_decimal_string(psdt::t_s(cmd.alpha, beta));
            j["t_P"] = format_double(psdt::t_p(cmd.alpha, beta));
            j["breakpoint_s"] = marker(s);
            out.push_back(std::move(j));
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "beta,t_S,t_P,breakpoint_s\n";
        for (const auto& [beta, s] : rows)
            std::cout << psdt::to_decimal_string(beta) << ","
                      << psdt::to_decimal_string(psdt::t_s(cmd.alpha, beta)) << ","
                      << format_double(psdt::t_p(cmd.alpha, beta)) << "," << marker(s) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PSD zero-forcing throttling toolkit: exact searches, closed forms,\n"
                 "tree concentration, and the super-spider census."};
    app.require_subcommand(1);

    ThrottleCmd tc;
    auto* throttle = app.add_subcommand(
        "throttle", "Minimum of cost(B) + propagation time over initial sets B");
    throttle->add_option("spec", tc.spec,
                         "Graph: path:N, spider:A,B,C, S(A,B,C), balanced:ALPHA,BETA, "
                         "bintree:H, or file:PATH")
        ->required();
    throttle->add_option("--cap", tc.cap, "Exact-search vertex-count cap")
        ->envname("PSDTHROT_CAP")
        ->capture_default_str();
    throttle->add_flag("--cap-override", tc.cap_override, "Allow caps above 31 (hard limit 62)");
    throttle->add_option("--format", tc.format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    CensusCmd cc;
    auto* census = app.add_subcommand("census", "Super-spider counts per order, CSV");
    census->add_option("n_lo", cc.n_lo, "Smallest order")->required();
    census->add_option("n_hi", cc.n_hi, "Largest order")->required();
    census->add_option("--budget-k", cc.budget_k, "Re-score super-spiders up to path value + k")
        ->capture_default_str();
    census->add_flag("--full-examples", cc.full_examples, "Do not truncate the examples column");
    census->add_option("--format", cc.format, "text (= csv), csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    ConcentrateCmd oc;
    auto* concentrate = app.add_subcommand(
        "concentrate", "Collapse symmetric branches of a weighted tree (weights multiply)");
    concentrate->add_option("spec", oc.spec, "Tree input; file:PATH may carry 'w i k' weight lines")
        ->required();
    concentrate->add_flag("--verify", oc.verify,
                          "Exact-search the original and concentrated trees and compare");
    concentrate->add_option("--cap", oc.cap, "Exact-search vertex-count cap (with --verify)")
        ->envname("PSDTHROT_CAP")
        ->capture_default_str();
    concentrate->add_flag("--cap-override", oc.cap_override, "Allow caps above 31 (hard limit 62)");
    concentrate->add_option("--format", oc.format, "text (weighted-tree file) or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    PlotCmd pc;
    auto* plot = app.add_subcommand(
        "plot-data", "CSV of t_S and t_P against beta for a fixed leg count");
    plot->add_option("alpha", pc.alpha, "Number of legs (>= 3)")->required();
    plot->add_option("--beta-max", pc.beta_max, "Largest integer beta on the grid")
        ->capture_default_str();
    plot->add_option("--format", pc.format, "csv (= text) or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (throttle->parsed()) return run_throttle(tc);
        if (census->parsed()) return run_census(cc);
        if (concentrate->parsed()) return run_concentrate(oc);
        if (plot->parsed()) return run_plot_data(pc);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    } catch (const psdt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const psdt::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
