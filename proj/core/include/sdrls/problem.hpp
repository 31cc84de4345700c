#pragma once

#include "sdrls/bitstring.hpp"
#include "sdrls/graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace sdrls {

using Fitness = int64_t;

enum class Direction { Maximize, Minimize };

// A pseudo-boolean objective. Evaluation is pure and thread-safe; instances
// are immutable after construction.
class Problem {
public:
    virtual ~Problem() = default;

    // Bit-string length (for the spanning-tree problem: the edge count).
    virtual unsigned n() const = 0;
    virtual Fitness evaluate(const BitString& x) const = 0;
    virtual bool is_optimum(const BitString& x) const = 0;
    // Upper bound on the number of distinct fitness values. Only feeds the
    // default stagnation parameter R, so it may be coarse but never low.
    virtual double image_size_bound() const = 0;
    virtual Direction direction() const = 0;
    virtual std::string name() const = 0;

    bool better(Fitness a, Fitness b) const {
        return direction() == Direction::Maximize ? a > b : a < b;
    }
    bool at_least_as_good(Fitness a, Fitness b) const { return !better(b, a); }
};

class OneMax final : public Problem {
public:
    explicit OneMax(unsigned n);

    unsigned n() const override { return n_; }
    Fitness evaluate(const BitString& x) const override;
    bool is_optimum(const BitString& x) const override;
    double image_size_bound() const override { return double(n_) + 1.0; }
    Direction direction() const override { return Direction::Maximize; }
    std::string name() const override { return "onemax"; }

private:
    unsigned n_;
};

// m + |x| while |x| <= n-m or |x| = n; otherwise n - |x|. The band of the
// m-1 highest |x| values below n forms the valley that needs an m-bit jump.
class Jump final : public Problem {
public:
    Jump(unsigned n, unsigned m); // 1 <= m <= n

    unsigned n() const override { return n_; }
    Fitness evaluate(const BitString& x) const override;
    bool is_optimum(const BitString& x) const override;
    double image_size_bound() const override { return double(n_) + 1.0; }
    Direction direction() const override { return Direction::Maximize; }
    std::string name() const override { return "jump"; }
    unsigned m() const { return m_; }

private:
    unsigned n_;
    unsigned m_;
};

// Block layout of the prefix/suffix function below. All quantities derive
// from n alone.
struct NeedGlobalMutLayout {
    unsigned n;
    unsigned block_size;    // ceil(n^(1/4))
    unsigned block_count;   // ceil(sqrt(n)/3)
    unsigned suffix_length; // block_count * block_size
    unsigned prefix_length; // n - suffix_length
    unsigned boundary;      // floor(9 * prefix_length / 10)

    static NeedGlobalMutLayout for_n(unsigned n);
};

// Prefix of n-m bits counts leading ones (valid form 1^i 0^...); suffix of
// block_count blocks counts leading "active" blocks (active = exactly two
// ones, inactive = all zero; no active block may follow an inactive one).
// First case  (PRE <= boundary):  n^2*SUFF + PRE
// Second case (PRE >  boundary):  n^2*block_count + PRE + SUFF - n - 1
// Anything malformed scores -ones_count(x). The unique maximum sits at
// PRE = boundary with all blocks active.
class NeedGlobalMut final : public Problem {
public:
    explicit NeedGlobalMut(unsigned n);
    explicit NeedGlobalMut(const NeedGlobalMutLayout& layout);

    unsigned n() const override { return layout_.n; }
    Fitness evaluate(const BitString& x) const override;
    bool is_optimum(const BitString& x) const override;
    double image_size_bound() const override;
    Direction direction() const override { return Direction::Maximize; }
    std::string name() const override { return "needglobalmut"; }
    const NeedGlobalMutLayout& layout() const { return layout_; }
    Fitness optimum_fitness() const { return optimum_; }
    Fitness local_optimum_fitness() const;

private:
    NeedGlobalMutLayout layout_;
    Fitness optimum_;
};

// Penalty form over edge selections: with c components, e selected edges,
// w selected weight, and P = V^2 * w_max, the score (c-1)*P^2 +
// max(0, e-(V-1))*P + w is minimized exactly by minimum spanning trees.
Fitness mst_fitness(const WeightedGraph& g, const BitString& x);

class MstProblem final : public Problem {
public:
    explicit MstProblem(WeightedGraph g);

    unsigned n() const override { return graph_.edge_count(); }
    Fitness evaluate(const BitString& x) const override;
    bool is_optimum(const BitString& x) const override;
    double image_size_bound() const override;
    Direction direction() const override { return Direction::Minimize; }
    std::string name() const override { return "mst"; }

    const WeightedGraph& graph() const { return graph_; }
    Fitness mst_weight() const { return mst_weight_; }

private:
    WeightedGraph graph_;
    int64_t penalty_;
    Fitness mst_weight_;
};

// Minimum Hamming distance from x to any strictly better point, or nullopt
// when x is optimal. Exhaustive; requires p.n() <= 20.
std::optional<unsigned> gap_oracle(const Problem& p, const BitString& x);

} // namespace sdrls
