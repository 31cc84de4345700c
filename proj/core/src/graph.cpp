#include "sdrls/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdrls {

namespace detail {

void UnionFind::reset(unsigned n) {
    parent_.resize(n);
    size_.assign(n, 1);
    std::iota(parent_.begin(), parent_.end(), 0u);
}

unsigned UnionFind::find(unsigned v) {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool UnionFind::unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

} // namespace detail

WeightedGraph::WeightedGraph(unsigned vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ == 0)
        throw std::invalid_argument("WeightedGraph: vertex_count must be positive");
    std::vector<uint64_t> keys;
    keys.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw std::invalid_argument("WeightedGraph: endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("WeightedGraph: self-loop");
        if (e.w <= 0)
            throw std::invalid_argument("WeightedGraph: weight must be positive");
        const uint64_t lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        keys.push_back(lo << 32 | hi);
        max_weight_ = std::max(max_weight_, e.w);
        total_weight_ += e.w;
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::invalid_argument("WeightedGraph: duplicate edge");
}

WeightedGraph tg_graph(unsigned n) {
    return tg_graph(n, int64_t(n) * int64_t(n));
}

WeightedGraph tg_graph(unsigned n, int64_t a) {
    if (n < 8 || n % 4 != 0)
        throw std::invalid_argument("tg_graph: n must be divisible by 4 and >= 8");
    if (a <= 0) throw std::invalid_argument("tg_graph: a must be positive");
    const unsigned p = n / 4;
    const unsigned q = n / 2;
    std::vector<Edge> edges;
    edges.reserve(3 * p + size_t(q) * (q - 1) / 2);
    for (unsigned i = 0; i < p; ++i) {
        const uint32_t near = i, far = i + 1, apex = p + 1 + i;
        edges.push_back({near, apex, 2 * a});
        edges.push_back({apex, far, 2 * a});
        edges.push_back({near, far, 3 * a});
    }
    std::vector<uint32_t> clique;
    clique.reserve(q);
    clique.push_back(p); // last chain vertex doubles as a clique vertex
    for (uint32_t v = 2 * p + 1; v < n; ++v) clique.push_back(v);
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = i + 1; j < q; ++j)
            edges.push_back({clique[i], clique[j], 1});
    return WeightedGraph(n, std::move(edges));
}

namespace {

bool connected(unsigned vertex_count, const std::vector<Edge>& edges) {
    detail::UnionFind uf;
    uf.reset(vertex_count);
    unsigned merges = 0;
    for (const Edge& e : edges)
        if (uf.unite(e.u, e.v) && ++merges == vertex_count - 1) return true;
    return vertex_count <= 1;
}

} // namespace

WeightedGraph erdos_renyi(unsigned n, RandomSource& rng, unsigned max_attempts) {
    if (n < 3) throw std::invalid_argument("erdos_renyi: n must be >= 3");
    const double p = 2.0 * std::log(double(n)) / double(n);
    const auto w_range = uint64_t(n) * uint64_t(n);
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v)
                if (rng.next_double() < p)
                    edges.push_back({u, v, int64_t(1 + rng.below(w_range))});
        if (connected(n, edges)) return WeightedGraph(n, std::move(edges));
    }
    throw std::runtime_error("erdos_renyi: no connected graph within attempt cap");
}

MstResult kruskal(const WeightedGraph& g) {
    std::vector<uint32_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        const int64_t wa = g.edge(a).w, wb = g.edge(b).w;
        return wa != wb ? wa < wb : a < b;
    });
    detail::UnionFind uf;
    uf.reset(g.vertex_count());
    MstResult result{0, {}};
    for (uint32_t id : order) {
        const Edge& e = g.edge(id);
        if (uf.unite(e.u, e.v)) {
            result.weight += e.w;
            result.edge_ids.push_back(id);
        }
    }
    if (result.edge_ids.size() + 1 != g.vertex_count())
        throw std::runtime_error("kruskal: graph is disconnected");
    std::sort(result.edge_ids.begin(), result.edge_ids.end());
    return result;
}

unsigned components(const WeightedGraph& g, const BitString& selection) {
    if (selection.size() != g.edge_count())
        throw std::invalid_argument("components: selection length != edge count");
    detail::UnionFind uf;
    uf.reset(g.vertex_count());
    unsigned c = g.vertex_count();
    for (unsigned id = 0; id < g.edge_count(); ++id)
        if (selection.test(id) && uf.unite(g.edge(id).u, g.edge(id).v)) --c;
    return c;
}

std::vector<uint32_t> weight_ranks(const WeightedGraph& g) {
    std::vector<uint32_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        const int64_t wa = g.edge(a).w, wb = g.edge(b).w;
        return wa != wb ? wa < wb : a < b;
    });
    std::vector<uint32_t> ranks(g.edge_count());
    for (uint32_t k = 0; k < order.size(); ++k) ranks[order[k]] = k + 1;
    return ranks;
}

BitString random_spanning_tree(const WeightedGraph& g, RandomSource& rng) {
    std::vector<uint32_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0u);
    for (unsigned i = g.edge_count(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    detail::UnionFind uf;
    uf.reset(g.vertex_count());
    BitString selection(g.edge_count());
    unsigned taken = 0;
    for (uint32_t id : order)
        if (uf.unite(g.edge(id).u, g.edge(id).v)) {
            selection.set(id, true);
            ++taken;
        }
    if (taken + 1 != g.vertex_count())
        throw std::runtime_error("random_spanning_tree: graph is disconnected");
    return selection;
}

std::string to_edge_list(const WeightedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

WeightedGraph parse_edge_list(std::istream& in) {
    // line oriented on purpose: a truncated header or a stray token must not
    // silently parse as a smaller graph
    const auto next_line = [&in](std::istringstream& tok) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            tok.clear();
            tok.str(line);
            return true;
        }
        return false;
    };
    const auto drained = [](std::istringstream& tok) {
        std::string rest;
        return !(tok >> rest);
    };
    std::istringstream tok;
    unsigned v = 0, m = 0;
    if (!next_line(tok) || !(tok >> v >> m) || !drained(tok))
        throw std::runtime_error("edge list: bad header");
    std::vector<Edge> edges(m);
    for (Edge& e : edges)
        if (!next_line(tok) || !(tok >> e.u >> e.v >> e.w) || !drained(tok))
            throw std::runtime_error("edge list: bad edge line");
    if (next_line(tok)) throw std::runtime_error("edge list: trailing content");
    return WeightedGraph(v, std::move(edges));
}

} // namespace sdrls
