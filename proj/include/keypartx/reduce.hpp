#pragma once

#include <map>
#include <set>
#include <string>

#include "keypartx/graph.hpp"

namespace keypartx {

// Drops every edge with weight < k. Nodes are kept even when they lose all
// incident edges; remove_isolates prunes them afterwards.
inline PerceptionGraph k_weight_filter(const PerceptionGraph& g, long long k) {
    if (k < 0) throw argument_error("k_weight_filter: k must be >= 0");
    PerceptionGraph out;
    out.nodes = g.nodes;
    for (const auto& [e, w] : g.directed_edges)
        if (w >= k) out.directed_edges[e] = w;
    for (const auto& [e, w] : g.undirected_edges)
        if (w >= k) out.undirected_edges[e] = w;
    return out;
}

// Maximal subgraph where every node touches >= k distinct edges (direction
// and weight ignored). Computed by iterative peeling; k == 0 is the identity.
inline PerceptionGraph k_core(const PerceptionGraph& g, std::size_t k) {
    if (k == 0) return g;

    std::map<std::string, std::set<std::string>> adj;
    for (const auto& [label, kind] : g.nodes) adj[label];
    for (const auto& [e, w] : g.directed_edges) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    for (const auto& [e, w] : g.undirected_edges) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }

    std::set<std::string> removed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [label, neighbors] : adj) {
            if (removed.count(label)) continue;
            if (neighbors.size() < k) {
                removed.insert(label);
                for (const auto& n : neighbors) adj[n].erase(label);
                neighbors.clear();
                changed = true;
            }
        }
    }

    PerceptionGraph out;
    for (const auto& [label, kind] : g.nodes)
        if (!removed.count(label)) out.nodes.emplace(label, kind);
    for (const auto& [e, w] : g.directed_edges)
        if (!removed.count(e.first) && !removed.count(e.second)) out.directed_edges[e] = w;
    for (const auto& [e, w] : g.undirected_edges)
        if (!removed.count(e.first) && !removed.count(e.second)) out.undirected_edges[e] = w;
    return out;
}

inline PerceptionGraph remove_isolates(const PerceptionGraph& g) {
    std::set<std::string> connected;
    for (const auto& [e, w] : g.directed_edges) {
        connected.insert(e.first);
        connected.insert(e.second);
    }
    for (const auto& [e, w] : g.undirected_edges) {
        connected.insert(e.first);
        connected.insert(e.second);
    }
    PerceptionGraph out;
    for (const auto& [label, kind] : g.nodes)
        if (connected.count(label)) out.nodes.emplace(label, kind);
    out.directed_edges = g.directed_edges;
    out.undirected_edges = g.undirected_edges;
    return out;
}

// Standard reduction pipeline: edge-weight floor, then k-core, then prune.
inline PerceptionGraph reduce_graph(const PerceptionGraph& g, long long k_weight, std::size_t k_core_k) {
    return remove_isolates(k_core(k_weight_filter(g, k_weight), k_core_k));
}

}  // namespace keypartx
