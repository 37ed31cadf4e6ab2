#include "dualgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dualgraph {

WeightedTree::WeightedTree(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    validate();
}

void WeightedTree::validate() const {
    std::set<int> ids;
    for (const auto& v : vertices_) {
        if (!ids.insert(v.id).second) throw std::invalid_argument("duplicate vertex id");
    }
    if (edges_.size() + (vertices_.empty() ? 0 : 1) != vertices_.size() && !vertices_.empty())
        throw std::invalid_argument("edge count must be vertex count - 1");
    if (vertices_.empty() && !edges_.empty())
        throw std::invalid_argument("edges without vertices");
    for (const auto& [a, b] : edges_) {
        if (!ids.count(a) || !ids.count(b) || a == b)
            throw std::invalid_argument("edge endpoint is not a vertex");
    }
    if (vertices_.empty()) return;
    // connectivity; a connected graph with n-1 edges is a tree
    if (bfs_order().size() != vertices_.size())
        throw std::invalid_argument("graph is not connected");
}

WeightedTree WeightedTree::path(const std::vector<long long>& weights) {
    std::vector<Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vs.push_back({static_cast<int>(i), weights[i]});
        if (i > 0) es.push_back({static_cast<int>(i - 1), static_cast<int>(i)});
    }
    return WeightedTree(std::move(vs), std::move(es));
}

bool WeightedTree::has_vertex(int id) const {
    for (const auto& v : vertices_)
        if (v.id == id) return true;
    return false;
}

long long WeightedTree::weight(int id) const {
    for (const auto& v : vertices_)
        if (v.id == id) return v.weight;
    throw std::out_of_range("no such vertex");
}

std::vector<int> WeightedTree::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == id) out.push_back(b);
        if (b == id) out.push_back(a);
    }
    return out;
}

std::vector<int> WeightedTree::bfs_order() const {
    std::vector<int> order;
    if (vertices_.empty()) return order;
    std::set<int> seen;
    order.push_back(vertices_.front().id);
    seen.insert(vertices_.front().id);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int nb : neighbors(order[i])) {
            if (seen.insert(nb).second) order.push_back(nb);
        }
    }
    return order;
}

WeightedTree WeightedTree::blow_down(int id) const {
    if (!has_vertex(id)) throw std::out_of_range("no such vertex");
    if (weight(id) != -1) throw std::invalid_argument("blow_down: vertex is not a (-1)-curve");
    auto nbs = neighbors(id);
    if (nbs.size() >= 3)
        throw std::invalid_argument("blow_down: vertex is branching");

    std::vector<Vertex> vs;
    for (const auto& v : vertices_) {
        if (v.id == id) continue;
        long long w = v.weight;
        if (std::find(nbs.begin(), nbs.end(), v.id) != nbs.end()) w += 1;
        vs.push_back({v.id, w});
    }
    std::vector<std::pair<int, int>> es;
    for (const auto& e : edges_) {
        if (e.first == id || e.second == id) continue;
        es.push_back(e);
    }
    if (nbs.size() == 2) es.push_back({nbs[0], nbs[1]});
    return WeightedTree(std::move(vs), std::move(es));
}

long long WeightedTree::canonical_degree() const {
    long long s = 0;
    for (const auto& v : vertices_) s += -2 - v.weight;
    return s;
}

long long WeightedTree::self_intersection() const {
    long long s = 0;
    for (const auto& v : vertices_) s += v.weight;
    return s + 2 * static_cast<long long>(edges_.size());
}

Fork::Fork(long long branch_weight_, std::array<Chain, 3> twigs_)
    : branch_weight(branch_weight_), twigs(std::move(twigs_)) {
    if (branch_weight > -1) throw std::invalid_argument("fork branch weight must be <= -1");
    for (const auto& t : twigs)
        if (t.empty()) throw std::invalid_argument("fork twigs must be nonempty");
}

WeightedTree Fork::to_tree() const {
    std::vector<WeightedTree::Vertex> vs{{0, branch_weight}};
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (const auto& t : twigs) {
        int prev = 0;
        for (long long w : t.weights) {
            vs.push_back({next, w});
            es.push_back({prev, next});
            prev = next++;
        }
    }
    return WeightedTree(std::move(vs), std::move(es));
}

StarBoundary::StarBoundary(long long center_weight_, std::vector<Chain> twigs_)
    : center_weight(center_weight_), twigs(std::move(twigs_)) {
    if (twigs.size() < 3) throw std::invalid_argument("star boundary needs r >= 3 twigs");
}

std::size_t StarBoundary::size() const {
    std::size_t n = 1;
    for (const auto& t : twigs) n += t.size();
    return n;
}

WeightedTree StarBoundary::to_tree() const {
    std::vector<WeightedTree::Vertex> vs{{0, center_weight}};
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (const auto& t : twigs) {
        int prev = 0;
        for (long long w : t.weights) {
            vs.push_back({next, w});
            es.push_back({prev, next});
            prev = next++;
        }
    }
    return WeightedTree(std::move(vs), std::move(es));
}

}  // namespace dualgraph
