#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "keypartx/graph.hpp"

namespace keypartx {

// Arc-level view of a perception graph for modularity work. Directed edges
// contribute one arc; undirected noun-noun edges are symmetrized into an arc
// pair, so each contributes its weight twice to m.
struct DirectedView {
    struct Arc {
        int src = 0;
        int dst = 0;
        double w = 0.0;
    };

    std::vector<std::string> labels;  // sorted
    std::map<std::string, int> index;
    std::vector<Arc> arcs;
    std::vector<double> kout, kin;
    double m = 0.0;
};

// Builds a view straight from labeled arcs; lets callers run the partition
// machinery on graphs that are not perception graphs (cycles, benchmarks).
struct LabeledArc {
    std::string src;
    std::string dst;
    double w = 1.0;
};

inline DirectedView make_directed_view(std::vector<std::string> labels, const std::vector<LabeledArc>& arcs) {
    DirectedView v;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    v.labels = std::move(labels);
    for (int i = 0; i < static_cast<int>(v.labels.size()); ++i) v.index.emplace(v.labels[i], i);
    v.kout.assign(v.labels.size(), 0.0);
    v.kin.assign(v.labels.size(), 0.0);
    for (const auto& a : arcs) {
        auto s = v.index.find(a.src);
        auto d = v.index.find(a.dst);
        if (s == v.index.end() || d == v.index.end())
            throw argument_error("make_directed_view: arc endpoint not in label set");
        if (!(a.w > 0.0)) throw argument_error("make_directed_view: arc weight must be positive");
        v.arcs.push_back({s->second, d->second, a.w});
        v.kout[s->second] += a.w;
        v.kin[d->second] += a.w;
        v.m += a.w;
    }
    return v;
}

inline DirectedView make_directed_view(const PerceptionGraph& g) {
    DirectedView v;
    v.labels.reserve(g.nodes.size());
    for (const auto& [label, kind] : g.nodes) v.labels.push_back(label);
    for (int i = 0; i < static_cast<int>(v.labels.size()); ++i) v.index.emplace(v.labels[i], i);
    v.kout.assign(v.labels.size(), 0.0);
    v.kin.assign(v.labels.size(), 0.0);

    auto push = [&](int s, int d, double w) {
        v.arcs.push_back({s, d, w});
        v.kout[s] += w;
        v.kin[d] += w;
        v.m += w;
    };
    for (const auto& [e, w] : g.directed_edges)
        push(v.index.at(e.first), v.index.at(e.second), static_cast<double>(w));
    for (const auto& [e, w] : g.undirected_edges) {
        int a = v.index.at(e.first);
        int b = v.index.at(e.second);
        push(a, b, static_cast<double>(w));
        push(b, a, static_cast<double>(w));
    }
    return v;
}

// Q = sum_ij (A_ij - gamma * kout_i * kin_j / m) * delta(c_i, c_j), left
// unnormalized; an edgeless graph scores zero for every partition. Putting
// everything in one community at gamma = 1 also scores exactly zero.
inline double directed_modularity(const DirectedView& v, const std::vector<int>& comm, double gamma = 1.0) {
    if (comm.size() != v.labels.size())
        throw argument_error("directed_modularity: partition size does not match node count");
    if (v.m <= 0.0) return 0.0;

    double q = 0.0;
    for (const auto& a : v.arcs)
        if (comm[a.src] == comm[a.dst]) q += a.w;

    std::map<int, double> com_out, com_in;
    for (std::size_t i = 0; i < comm.size(); ++i) {
        com_out[comm[i]] += v.kout[i];
        com_in[comm[i]] += v.kin[i];
    }
    for (const auto& [c, ko] : com_out) q -= gamma * ko * com_in[c] / v.m;
    return q;
}

inline double directed_modularity(const PerceptionGraph& g, const std::map<std::string, int>& assignment,
                                  double gamma = 1.0) {
    DirectedView v = make_directed_view(g);
    std::vector<int> comm(v.labels.size());
    for (std::size_t i = 0; i < v.labels.size(); ++i) {
        auto it = assignment.find(v.labels[i]);
        if (it == assignment.end())
            throw argument_error("directed_modularity: node '" + v.labels[i] + "' missing from partition");
        comm[i] = it->second;
    }
    return directed_modularity(v, comm, gamma);
}

namespace detail {

constexpr double kGainEps = 1e-12;

// One aggregation level: coalesced arc lists per node, self-loops included in
// the strength sums.
struct WorkLevel {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> outs, ins;
    std::vector<double> kout, kin;
    double m = 0.0;
};

inline WorkLevel level_from_arcs(int n, const std::map<std::pair<int, int>, double>& arcs) {
    WorkLevel L;
    L.n = n;
    L.outs.assign(n, {});
    L.ins.assign(n, {});
    L.kout.assign(n, 0.0);
    L.kin.assign(n, 0.0);
    for (const auto& [e, w] : arcs) {
        L.outs[e.first].emplace_back(e.second, w);
        L.ins[e.second].emplace_back(e.first, w);
        L.kout[e.first] += w;
        L.kin[e.second] += w;
        L.m += w;
    }
    return L;
}

inline WorkLevel level_from_view(const DirectedView& v) {
    std::map<std::pair<int, int>, double> arcs;
    for (const auto& a : v.arcs) arcs[{a.src, a.dst}] += a.w;
    return level_from_arcs(static_cast<int>(v.labels.size()), arcs);
}

// Greedy single-node moves until a full sweep is stable. A move needs a gain
// of more than kGainEps over staying; ties between equally good destinations
// go to the lowest community id. With `parent` set, nodes only consider
// sub-communities inside their own parent community (the refinement phase).
inline bool greedy_moves(const WorkLevel& L, std::vector<int>& comm, const std::vector<int>* parent,
                         std::mt19937_64& rng, double gamma) {
    if (L.m <= 0.0) return false;

    std::map<int, double> com_out, com_in;
    for (int i = 0; i < L.n; ++i) {
        com_out[comm[i]] += L.kout[i];
        com_in[comm[i]] += L.kin[i];
    }

    std::vector<int> order(L.n);
    std::iota(order.begin(), order.end(), 0);

    bool any_move = false;
    bool sweep_moved = true;
    while (sweep_moved) {
        sweep_moved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i : order) {
            const int home = comm[i];

            // arc weight between i and each candidate community, self-loops
            // excluded (they follow the node and cancel out of every gain)
            std::map<int, double> link;
            for (const auto& [j, w] : L.outs[i]) {
                if (j == i) continue;
                if (parent && (*parent)[j] != (*parent)[i]) continue;
                link[comm[j]] += w;
            }
            for (const auto& [j, w] : L.ins[i]) {
                if (j == i) continue;
                if (parent && (*parent)[j] != (*parent)[i]) continue;
                link[comm[j]] += w;
            }

            com_out[home] -= L.kout[i];
            com_in[home] -= L.kin[i];

            auto gain_of = [&](int c) {
                auto it = link.find(c);
                double coupling = it == link.end() ? 0.0 : it->second;
                return coupling - gamma * (L.kout[i] * com_in[c] + L.kin[i] * com_out[c]) / L.m;
            };

            const double stay = gain_of(home);
            double best_gain = stay;
            int best = home;
            for (const auto& [c, coupling] : link) {  // ascending id: first best wins ties
                if (c == home) continue;
                double gain = gain_of(c);
                if (gain > best_gain + kGainEps) {
                    best_gain = gain;
                    best = c;
                }
            }

            comm[i] = best;
            com_out[best] += L.kout[i];
            com_in[best] += L.kin[i];
            if (best != home) {
                sweep_moved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

// Contracts each block of `blocks` to a single node. Block ids are densified
// by first appearance in node order; `node_to_block` receives the mapping.
inline WorkLevel aggregate(const WorkLevel& L, const std::vector<int>& blocks, std::vector<int>& node_to_block) {
    std::map<int, int> dense;
    node_to_block.assign(L.n, 0);
    for (int i = 0; i < L.n; ++i) {
        auto [it, inserted] = dense.emplace(blocks[i], static_cast<int>(dense.size()));
        node_to_block[i] = it->second;
    }
    std::map<std::pair<int, int>, double> arcs;
    for (int i = 0; i < L.n; ++i)
        for (const auto& [j, w] : L.outs[i]) arcs[{node_to_block[i], node_to_block[j]}] += w;
    return level_from_arcs(static_cast<int>(dense.size()), arcs);
}

// Local moving, refinement inside the found communities, then aggregation of
// the refined blocks with the coarse communities as the starting partition of
// the next level. Deterministic for a fixed seed.
inline std::vector<int> leiden_partition(const DirectedView& view, double gamma, std::uint64_t seed) {
    const int n = static_cast<int>(view.labels.size());
    std::vector<int> level_of(n);
    std::iota(level_of.begin(), level_of.end(), 0);

    WorkLevel L = level_from_view(view);
    std::vector<int> comm(L.n);
    std::iota(comm.begin(), comm.end(), 0);

    std::mt19937_64 rng(seed);
    while (true) {
        if (!greedy_moves(L, comm, nullptr, rng, gamma)) break;

        std::vector<int> sub(L.n);
        std::iota(sub.begin(), sub.end(), 0);
        greedy_moves(L, sub, &comm, rng, gamma);

        std::vector<int> node_to_block;
        WorkLevel next = aggregate(L, sub, node_to_block);

        std::vector<int> next_comm(next.n, 0);
        for (int i = 0; i < L.n; ++i) next_comm[node_to_block[i]] = comm[i];
        for (int& c : level_of) c = node_to_block[c];

        L = std::move(next);
        comm = std::move(next_comm);
    }

    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = comm[level_of[i]];
    return out;
}

inline std::vector<int> densify_by_first_appearance(const std::vector<int>& comm) {
    std::map<int, int> dense;
    std::vector<int> out(comm.size());
    for (std::size_t i = 0; i < comm.size(); ++i) {
        auto [it, inserted] = dense.emplace(comm[i], static_cast<int>(dense.size()));
        out[i] = it->second;
    }
    return out;
}

}  // namespace detail

struct CommunityResult {
    double gamma = 1.0;
    double q_raw = 0.0;
    double q_normalized = 0.0;  // q_raw / m, zero on an edgeless graph
    std::map<std::string, int> assignment;
    int community_count = 0;

    bool operator==(const CommunityResult&) const = default;
};

// Seeded, deterministic partition search. The returned partition never scores
// below the singleton or the one-community baseline; community ids are dense
// and ordered by first appearance over the sorted node labels.
inline CommunityResult detect_communities(const DirectedView& view, double gamma = 1.0,
                                          std::uint64_t seed = 42) {
    if (!(gamma > 0.0)) throw argument_error("detect_communities: gamma must be positive");

    CommunityResult result;
    result.gamma = gamma;
    if (view.labels.empty()) return result;

    const int n = static_cast<int>(view.labels.size());

    std::vector<int> singleton(n);
    std::iota(singleton.begin(), singleton.end(), 0);
    std::vector<int> one_block(n, 0);

    std::vector<int> found = view.m > 0.0 ? detail::leiden_partition(view, gamma, seed) : singleton;

    std::vector<int> best = found;
    double best_q = directed_modularity(view, found, gamma);
    for (const auto* candidate : {&one_block, &singleton}) {
        double q = directed_modularity(view, *candidate, gamma);
        if (q > best_q + detail::kGainEps) {
            best_q = q;
            best = *candidate;
        }
    }

    best = detail::densify_by_first_appearance(best);
    result.q_raw = directed_modularity(view, best, gamma);
    result.q_normalized = view.m > 0.0 ? result.q_raw / view.m : 0.0;
    for (int i = 0; i < n; ++i) result.assignment.emplace(view.labels[i], best[i]);
    result.community_count = n == 0 ? 0 : *std::max_element(best.begin(), best.end()) + 1;
    return result;
}

inline CommunityResult detect_communities(const PerceptionGraph& g, double gamma = 1.0,
                                          std::uint64_t seed = 42) {
    if (!(gamma > 0.0)) throw argument_error("detect_communities: gamma must be positive");
    if (g.nodes.empty()) {
        CommunityResult result;
        result.gamma = gamma;
        return result;
    }
    return detect_communities(make_directed_view(g), gamma, seed);
}

struct CommunityCensus {
    int id = 0;
    std::vector<std::string> nodes;  // sorted
    int adj = 0;
    int verb = 0;
    int noun = 0;

    bool operator==(const CommunityCensus&) const = default;
};

inline std::vector<CommunityCensus> community_pos_census(const PerceptionGraph& g,
                                                         const std::map<std::string, int>& assignment) {
    std::map<int, CommunityCensus> rows;
    for (const auto& [label, kind] : g.nodes) {
        auto it = assignment.find(label);
        if (it == assignment.end())
            throw argument_error("community_pos_census: node '" + label + "' missing from partition");
        auto& row = rows[it->second];
        row.id = it->second;
        row.nodes.push_back(label);
        if (kind == NodeKind::adj) row.adj++;
        else if (kind == NodeKind::verb) row.verb++;
        else row.noun++;
    }
    std::vector<CommunityCensus> out;
    out.reserve(rows.size());
    for (auto& [id, row] : rows) out.push_back(std::move(row));
    return out;
}

}  // namespace keypartx
