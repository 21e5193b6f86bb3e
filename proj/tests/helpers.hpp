#pragma once

// Shared fixtures: random graph/document generators and small brute-force
// oracles the suites compare the real implementations against.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "keypartx/community.hpp"
#include "keypartx/graph.hpp"

namespace testhelp {

using keypartx::PerceptionGraph;

// Random mixed graph: a few adjective/verb nodes pointing at nouns plus
// undirected noun-noun edges. Node count stays <= max_nodes.
inline PerceptionGraph random_graph(std::mt19937_64& rng, int max_nodes) {
    std::uniform_int_distribution<int> wdist(1, 3);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    int nouns = 2 + static_cast<int>(rng() % std::max(1, max_nodes - 2));
    nouns = std::min(nouns, max_nodes - 1);
    int mods = 1 + static_cast<int>(rng() % std::max(1, max_nodes - nouns));
    mods = std::min(mods, max_nodes - nouns);

    std::vector<std::string> noun_labels, mod_labels;
    for (int i = 0; i < nouns; ++i) noun_labels.push_back("n" + std::to_string(i) + "2n");
    for (int i = 0; i < mods; ++i)
        mod_labels.push_back(i % 2 == 0 ? "a" + std::to_string(i) + "2a" : "v" + std::to_string(i) + "2v");

    PerceptionGraph g;
    for (const auto& m : mod_labels)
        for (const auto& n : noun_labels)
            if (coin(rng) < 0.35) g.add_directed(m, n, wdist(rng));
    for (std::size_t i = 0; i < noun_labels.size(); ++i)
        for (std::size_t j = i + 1; j < noun_labels.size(); ++j)
            if (coin(rng) < 0.45) g.add_undirected(noun_labels[i], noun_labels[j], wdist(rng));
    return g;
}

// Enumerates every partition of n items as restricted growth strings and
// reports the best directed modularity found.
inline double brute_force_best_q(const keypartx::DirectedView& view, double gamma,
                                 std::vector<int>* best_out = nullptr) {
    const int n = static_cast<int>(view.labels.size());
    std::vector<int> comm(n, 0);
    double best = -1e300;

    auto consider = [&]() {
        double q = keypartx::directed_modularity(view, comm, gamma);
        if (q > best) {
            best = q;
            if (best_out) *best_out = comm;
        }
    };

    if (n <= 1) {
        consider();
        return n == 0 ? 0.0 : best;
    }
    // odometer over restricted growth strings: comm[0] == 0 and
    // comm[k] <= max(comm[0..k-1]) + 1
    while (true) {
        consider();
        int k = n - 1;
        while (k >= 1) {
            int cap = 0;
            for (int j = 0; j < k; ++j) cap = std::max(cap, comm[j]);
            if (comm[k] <= cap) {
                ++comm[k];
                for (int j = k + 1; j < n; ++j) comm[j] = 0;
                break;
            }
            --k;
        }
        if (k == 0) break;
    }
    return best;
}

// k-core oracle: the union of all node subsets where every member keeps at
// least k distinct neighbors inside the subset. Only sane for small graphs.
inline std::set<std::string> subset_enum_k_core_nodes(const PerceptionGraph& g, int k) {
    std::vector<std::string> labels;
    for (const auto& [l, kind] : g.nodes) labels.push_back(l);
    const int n = static_cast<int>(labels.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[labels[i]] = i;

    std::vector<std::set<int>> adj(n);
    auto touch = [&](const std::string& a, const std::string& b) {
        adj[idx[a]].insert(idx[b]);
        adj[idx[b]].insert(idx[a]);
    };
    for (const auto& [e, w] : g.directed_edges) touch(e.first, e.second);
    for (const auto& [e, w] : g.undirected_edges) touch(e.first, e.second);

    std::set<std::string> result;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            int deg = 0;
            for (int u : adj[v])
                if (mask >> u & 1) ++deg;
            if (deg < k) ok = false;
        }
        if (!ok) continue;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) result.insert(labels[v]);
    }
    return result;
}

}  // namespace testhelp
