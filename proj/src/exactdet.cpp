#include "dualgraph/exactdet.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dualgraph {

namespace {

struct Indexed {
    std::vector<long long> weight;            // by index
    std::vector<std::vector<int>> adj;        // by index
    std::map<int, int> index_of;

    explicit Indexed(const WeightedTree& t) {
        int n = static_cast<int>(t.size());
        weight.resize(n);
        adj.resize(n);
        int i = 0;
        for (const auto& v : t.vertices()) {
            index_of[v.id] = i;
            weight[i] = v.weight;
            ++i;
        }
        for (const auto& [a, b] : t.edges()) {
            int ia = index_of[a], ib = index_of[b];
            adj[ia].push_back(ib);
            adj[ib].push_back(ia);
        }
    }
};

// Post-order over the tree rooted at 0: children listed before parents.
std::vector<std::pair<int, int>> rooted_order(const Indexed& g) {
    std::vector<std::pair<int, int>> order;  // (vertex, parent)
    if (g.weight.empty()) return order;
    std::vector<std::pair<int, int>> stack{{0, -1}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        order.push_back({v, p});
        for (int u : g.adj[v])
            if (u != p) stack.push_back({u, v});
    }
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace

Int chain_det(const std::vector<long long>& weights) {
    Int dm1 = 0, d = 1;
    for (long long w : weights) {
        Int next = Int(-w) * d - dm1;
        dm1 = d;
        d = next;
    }
    return d;
}

Int det(const WeightedTree& t) {
    if (t.empty()) return 1;
    Indexed g(t);
    int n = static_cast<int>(t.size());
    // D[v] = det of the subtree at v, Dm[v] = det of that subtree minus v.
    std::vector<Int> D(n), Dm(n);
    std::vector<std::vector<int>> children(n);
    auto order = rooted_order(g);
    for (auto [v, p] : order)
        if (p >= 0) children[p].push_back(v);
    for (auto [v, p] : order) {
        const auto& ch = children[v];
        std::size_t k = ch.size();
        // prefix/suffix products of child subtree determinants
        std::vector<Int> pre(k + 1, 1), suf(k + 1, 1);
        for (std::size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * D[ch[i]];
        for (std::size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * D[ch[i]];
        Dm[v] = pre[k];
        Int s = Int(-g.weight[v]) * pre[k];
        for (std::size_t i = 0; i < k; ++i) s -= Dm[ch[i]] * pre[i] * suf[i + 1];
        D[v] = s;
    }
    return D[order.back().first];
}

Int bareiss_det(std::vector<std::vector<Int>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

std::vector<std::vector<Int>> negated_matrix(const WeightedTree& t) {
    Indexed g(t);
    int n = static_cast<int>(t.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = -g.weight[i];
    for (int i = 0; i < n; ++i)
        for (int j : g.adj[i]) m[i][j] = -1;
    return m;
}

}  // namespace

Int det_oracle(const WeightedTree& t) {
    if (t.empty()) return 1;
    return bareiss_det(negated_matrix(t));
}

bool is_negative_definite(const WeightedTree& t) {
    if (t.empty()) return true;
    auto order = t.bfs_order();
    // Each BFS prefix induces a connected subtree; its determinant is a
    // leading principal minor of -I(T) after relabeling.
    for (std::size_t k = 1; k <= order.size(); ++k) {
        std::vector<int> keep(order.begin(), order.begin() + k);
        std::vector<WeightedTree::Vertex> vs;
        std::vector<std::pair<int, int>> es;
        for (int id : keep) vs.push_back({id, t.weight(id)});
        for (const auto& [a, b] : t.edges()) {
            bool ka = std::find(keep.begin(), keep.end(), a) != keep.end();
            bool kb = std::find(keep.begin(), keep.end(), b) != keep.end();
            if (ka && kb) es.push_back({a, b});
        }
        if (det(WeightedTree(std::move(vs), std::move(es))) <= 0) return false;
    }
    return true;
}

TwigData twig_data(const Chain& c) {
    if (c.empty()) throw std::invalid_argument("twig_data: empty chain");
    TwigData td;
    td.d = chain_det(c.weights);
    td.d_bar = chain_det({c.weights.begin() + 1, c.weights.end()});
    td.d_tilde = chain_det({c.weights.begin(), c.weights.end() - 1});
    td.capacity = Rat(td.d_bar) / Rat(td.d);
    td.inductance = Rat(td.d_tilde) / Rat(td.d);
    return td;
}

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Int>> m,
                                             std::vector<Int> rhs) {
    int n = static_cast<int>(m.size());
    if (n == 0) return std::vector<Rat>{};
    for (int i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    std::vector<Rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat s = Rat(m[i][n]);
        for (int j = i + 1; j < n; ++j) s -= Rat(m[i][j]) * x[j];
        if (m[i][i] == 0) return std::nullopt;
        x[i] = s / Rat(m[i][i]);
    }
    return x;
}

std::vector<Rat> solve_tree_system(const WeightedTree& t, const std::vector<Rat>& rhs) {
    Indexed g(t);
    int n = static_cast<int>(t.size());
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_tree_system: rhs size mismatch");
    if (n == 0) return {};
    auto order = rooted_order(g);
    std::vector<Rat> alpha(n), beta(n);
    std::vector<int> parent(n, -1);
    for (auto [v, p] : order) {
        parent[v] = p;
        Rat gamma = Rat(-g.weight[v]);
        Rat acc = rhs[v];
        for (int u : g.adj[v]) {
            if (u == p) continue;
            gamma -= beta[u];
            acc += alpha[u];
        }
        if (gamma == 0) throw std::domain_error("solve_tree_system: singular pivot");
        alpha[v] = acc / gamma;
        beta[v] = Rat(1) / gamma;
    }
    std::vector<Rat> x(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, p] = *it;
        x[v] = (p < 0) ? alpha[v] : alpha[v] + beta[v] * x[p];
    }
    return x;
}

}  // namespace dualgraph
