#include "sdrls/problem.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sdrls {

OneMax::OneMax(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("OneMax: n must be positive");
}

Fitness OneMax::evaluate(const BitString& x) const {
    return Fitness(x.ones_count());
}

bool OneMax::is_optimum(const BitString& x) const {
    return x.ones_count() == n_;
}

Jump::Jump(unsigned n, unsigned m) : n_(n), m_(m) {
    if (n == 0) throw std::invalid_argument("Jump: n must be positive");
    if (m < 1 || m > n) throw std::invalid_argument("Jump: m must be in [1, n]");
}

Fitness Jump::evaluate(const BitString& x) const {
    const unsigned k = x.ones_count();
    if (k <= n_ - m_ || k == n_) return Fitness(m_) + Fitness(k);
    return Fitness(n_) - Fitness(k);
}

bool Jump::is_optimum(const BitString& x) const {
    return x.ones_count() == n_;
}

NeedGlobalMutLayout NeedGlobalMutLayout::for_n(unsigned n) {
    if (n == 0) throw std::invalid_argument("NeedGlobalMutLayout: n must be positive");
    NeedGlobalMutLayout l{};
    l.n = n;
    l.block_size = 1;
    while (uint64_t(l.block_size) * l.block_size * l.block_size * l.block_size < n)
        ++l.block_size; // smallest b with b^4 >= n
    l.block_count = 1;
    while (9ull * l.block_count * l.block_count < n)
        ++l.block_count; // smallest B with 3B >= sqrt(n)
    l.suffix_length = l.block_count * l.block_size;
    if (l.suffix_length >= n)
        throw std::invalid_argument("NeedGlobalMutLayout: suffix swallows the string");
    l.prefix_length = n - l.suffix_length;
    l.boundary = 9 * l.prefix_length / 10;
    return l;
}

NeedGlobalMut::NeedGlobalMut(unsigned n) : NeedGlobalMut(NeedGlobalMutLayout::for_n(n)) {}

NeedGlobalMut::NeedGlobalMut(const NeedGlobalMutLayout& layout) : layout_(layout) {
    optimum_ = Fitness(layout_.n) * layout_.n * layout_.block_count + layout_.boundary;
}

Fitness NeedGlobalMut::evaluate(const BitString& x) const {
    const unsigned prefix = layout_.prefix_length;

    // PRE: prefix must look like 1^i 0^(prefix-i)
    unsigned pre = 0;
    while (pre < prefix && x.test(pre)) ++pre;
    bool valid = true;
    for (unsigned i = pre; i < prefix && valid; ++i) valid = !x.test(i);

    // SUFF: leading run of active blocks, then only inactive blocks
    unsigned suff = 0;
    bool run_open = true;
    for (unsigned b = 0; b < layout_.block_count && valid; ++b) {
        unsigned ones = 0;
        for (unsigned i = 0; i < layout_.block_size; ++i)
            ones += x.test(prefix + b * layout_.block_size + i);
        if (ones == 2 && run_open)
            ++suff;
        else if (ones == 0)
            run_open = false;
        else
            valid = false;
    }

    if (!valid) return -Fitness(x.ones_count());
    const auto n2 = Fitness(layout_.n) * layout_.n;
    if (pre <= layout_.boundary) return n2 * suff + pre;
    return n2 * layout_.block_count + pre + suff - Fitness(layout_.n) - 1;
}

bool NeedGlobalMut::is_optimum(const BitString& x) const {
    return evaluate(x) == optimum_;
}

double NeedGlobalMut::image_size_bound() const {
    return double(layout_.prefix_length + 1) * (layout_.block_count + 1) +
           layout_.n + 1.0;
}

Fitness NeedGlobalMut::local_optimum_fitness() const {
    const auto n2 = Fitness(layout_.n) * layout_.n;
    return n2 * layout_.block_count + layout_.prefix_length +
           layout_.block_count - Fitness(layout_.n) - 1;
}

namespace {

int64_t mst_penalty(const WeightedGraph& g) {
    return int64_t(g.vertex_count()) * g.vertex_count() * g.max_weight();
}

Fitness mst_eval(const WeightedGraph& g, int64_t penalty, const BitString& x) {
    thread_local detail::UnionFind uf;
    uf.reset(g.vertex_count());
    unsigned c = g.vertex_count();
    int64_t e = 0, w = 0;
    const auto& words = x.words();
    for (unsigned wi = 0; wi < words.size(); ++wi) {
        uint64_t bits = words[wi];
        while (bits) {
            const unsigned id = wi * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            const Edge& edge = g.edge(id);
            ++e;
            w += edge.w;
            if (uf.unite(edge.u, edge.v)) --c;
        }
    }
    const int64_t surplus = std::max<int64_t>(0, e - (int64_t(g.vertex_count()) - 1));
    return Fitness(c - 1) * penalty * penalty + surplus * penalty + w;
}

} // namespace

Fitness mst_fitness(const WeightedGraph& g, const BitString& x) {
    if (x.size() != g.edge_count())
        throw std::invalid_argument("mst_fitness: selection length != edge count");
    return mst_eval(g, mst_penalty(g), x);
}

MstProblem::MstProblem(WeightedGraph g)
    : graph_(std::move(g)), penalty_(mst_penalty(graph_)) {
    // worst case must stay representable: all vertices isolated plus every
    // edge selected can never coexist, but bound both terms independently
    const auto p = static_cast<__int128>(penalty_);
    const __int128 worst = (static_cast<__int128>(graph_.vertex_count()) - 1) * p * p +
                           static_cast<__int128>(graph_.edge_count()) * p +
                           graph_.total_weight();
    if (worst > std::numeric_limits<int64_t>::max())
        throw std::invalid_argument("MstProblem: instance too large for 64-bit fitness");
    mst_weight_ = kruskal(graph_).weight;
}

Fitness MstProblem::evaluate(const BitString& x) const {
    if (x.size() != graph_.edge_count())
        throw std::invalid_argument("MstProblem: selection length != edge count");
    return mst_eval(graph_, penalty_, x);
}

bool MstProblem::is_optimum(const BitString& x) const {
    // minimum spanning trees are exactly the points scoring kruskal's weight:
    // any non-tree pays at least one penalty P > total edge weight
    return evaluate(x) == mst_weight_;
}

double MstProblem::image_size_bound() const {
    return 2.0 * double(penalty_) * double(penalty_);
}

std::optional<unsigned> gap_oracle(const Problem& p, const BitString& x) {
    const unsigned n = p.n();
    if (n > 20) throw std::invalid_argument("gap_oracle: n must be <= 20");
    if (x.size() != n) throw std::invalid_argument("gap_oracle: length mismatch");
    const Fitness fx = p.evaluate(x);
    BitString y = x;
    std::vector<unsigned> idx;
    for (unsigned radius = 1; radius <= n; ++radius) {
        idx.resize(radius);
        std::iota(idx.begin(), idx.end(), 0u);
        for (;;) {
            for (unsigned i : idx) y.flip(i);
            const bool improved = p.better(p.evaluate(y), fx);
            for (unsigned i : idx) y.flip(i);
            if (improved) return radius;
            int i = int(radius) - 1;
            while (i >= 0 && idx[i] == n - radius + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (unsigned k = unsigned(i) + 1; k < radius; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace sdrls
