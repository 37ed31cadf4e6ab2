#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dualgraph {

// Weighted dual graph of an SNC tree of rational curves. Vertices carry the
// self-intersection number of the corresponding component; every edge is a
// transversal intersection point. The empty graph is the empty divisor.
class WeightedTree {
public:
    struct Vertex {
        int id;
        long long weight;
    };

    WeightedTree() = default;
    WeightedTree(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges);

    static WeightedTree path(const std::vector<long long>& weights);

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_vertex(int id) const;
    long long weight(int id) const;
    std::vector<int> neighbors(int id) const;
    int branching_number(int id) const { return static_cast<int>(neighbors(id).size()); }

    // Vertex indices in insertion order; prefix of a breadth-first order is
    // always connected, which the determinant machinery relies on.
    std::vector<int> bfs_order() const;

    // Contracts a (-1)-vertex of branching number <= 2: neighbors gain +1 and
    // become adjacent. Ids are never reused.
    WeightedTree blow_down(int id) const;

    // K.T = sum over components of (-2 - C^2).
    long long canonical_degree() const;

    // T^2 = sum of weights + 2 * #edges.
    long long self_intersection() const;

private:
    void validate() const;

    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
};

// An ordered linear twig. The first entry is the component meeting whatever
// the twig is attached to; the last entry is the free tip. Empty chains are
// legal and stand for the empty twig (determinant 1).
struct Chain {
    std::vector<long long> weights;

    Chain() = default;
    explicit Chain(std::vector<long long> w) : weights(std::move(w)) {}

    std::size_t size() const { return weights.size(); }
    bool empty() const { return weights.empty(); }
    bool admissible() const {
        for (long long w : weights)
            if (w > -2) return false;
        return true;
    }
    Chain reversed() const { return Chain(std::vector<long long>(weights.rbegin(), weights.rend())); }
    WeightedTree to_tree() const { return WeightedTree::path(weights); }

    bool operator==(const Chain& o) const { return weights == o.weights; }
    bool operator<(const Chain& o) const { return weights < o.weights; }
};

// A branching vertex with exactly three nonempty twigs, each attached at its
// first component. Models exceptional divisors of non-cyclic quotient points.
struct Fork {
    long long branch_weight = -2;  // = -h
    std::array<Chain, 3> twigs;

    Fork() = default;
    Fork(long long branch_weight_, std::array<Chain, 3> twigs_);

    long long h() const { return -branch_weight; }
    std::size_t size() const { return 1 + twigs[0].size() + twigs[1].size() + twigs[2].size(); }
    // Vertex 0 is the branch; twig vertices follow in twig order, each listed
    // from attaching component to tip.
    WeightedTree to_tree() const;

    bool operator==(const Fork& o) const {
        return branch_weight == o.branch_weight && twigs == o.twigs;
    }
};

// A star-shaped boundary (comb): central vertex B with r >= 3 twigs attached
// at their first components.
struct StarBoundary {
    long long center_weight = -1;  // = -b
    std::vector<Chain> twigs;

    StarBoundary() = default;
    StarBoundary(long long center_weight_, std::vector<Chain> twigs_);

    long long b() const { return -center_weight; }
    std::size_t r() const { return twigs.size(); }
    std::size_t size() const;
    // Vertex 0 is the center; twig vertices follow in twig order.
    WeightedTree to_tree() const;
};

}  // namespace dualgraph
