#pragma once

#include "sdrls/bitstring.hpp"
#include "sdrls/random.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdrls {

struct Edge {
    uint32_t u;
    uint32_t v;
    int64_t w;
};

// Undirected simple graph with positive integer edge weights. Edge ids are
// positions in the edge sequence. Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph(unsigned vertex_count, std::vector<Edge> edges);

    unsigned vertex_count() const { return vertex_count_; }
    unsigned edge_count() const { return static_cast<unsigned>(edges_.size()); }
    const Edge& edge(unsigned id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }
    int64_t max_weight() const { return max_weight_; }
    int64_t total_weight() const { return total_weight_; }

private:
    unsigned vertex_count_;
    std::vector<Edge> edges_;
    int64_t max_weight_ = 0;
    int64_t total_weight_ = 0;
};

// Chain of p = n/4 triangles feeding a complete graph on q = n/2 vertices.
// Triangle i sits between chain vertices i and i+1 with a private apex: two
// side edges of weight 2a and one main edge of weight 3a. Chain vertex p is
// also the first clique vertex; clique edges all weigh 1. Vertex ids:
// 0..p chain, p+1..2p apexes, 2p+1..n-1 remaining clique vertices.
// Requires n divisible by 4, n >= 8. Edge count is 3n/4 + C(n/2, 2).
WeightedGraph tg_graph(unsigned n);
WeightedGraph tg_graph(unsigned n, int64_t a);

// Each of the C(n,2) edges appears independently with probability 2*ln(n)/n;
// weights are uniform in [1, n^2]. Disconnected draws are discarded and the
// generator continues on the same stream, so the result is a pure function of
// (n, seed). Throws after max_attempts consecutive disconnected draws.
WeightedGraph erdos_renyi(unsigned n, RandomSource& rng, unsigned max_attempts = 10000);

struct MstResult {
    int64_t weight;
    std::vector<uint32_t> edge_ids; // one witness tree, ascending ids
};

// Minimum spanning tree, ties broken by edge id. Throws on disconnected input.
MstResult kruskal(const WeightedGraph& g);

// Connected components of the subgraph using only selected edges; isolated
// vertices count. selection.size() must equal g.edge_count().
unsigned components(const WeightedGraph& g, const BitString& selection);

// Rank of each edge when sorted by increasing weight, ties by edge id.
// The result is a permutation of 1..m.
std::vector<uint32_t> weight_ranks(const WeightedGraph& g);

// Selection bits of a random spanning tree: greedy forest acceptance over a
// uniformly shuffled edge order. Throws on disconnected input.
BitString random_spanning_tree(const WeightedGraph& g, RandomSource& rng);

// Text form: first line "V E", then one "u v w" line per edge.
std::string to_edge_list(const WeightedGraph& g);
WeightedGraph parse_edge_list(std::istream& in);

namespace detail {

// Array-based union-find with path halving and union by size.
class UnionFind {
public:
    void reset(unsigned n);
    unsigned find(unsigned v);
    bool unite(unsigned a, unsigned b); // false if already joined

private:
    std::vector<uint32_t> parent_;
    std::vector<uint32_t> size_;
};

} // namespace detail

} // namespace sdrls
