#pragma once

#include <random>
#include <vector>

#include "dualgraph/graph.hpp"

namespace dgtest {

// random tree on n vertices: each new vertex attaches to a random earlier one
inline dualgraph::WeightedTree random_tree(std::mt19937_64& rng, int max_vertices,
                                           long long wmin, long long wmax) {
    std::uniform_int_distribution<int> nd(1, max_vertices);
    int n = nd(rng);
    std::uniform_int_distribution<long long> wd(wmin, wmax);
    std::vector<dualgraph::WeightedTree::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back({i, wd(rng)});
        if (i > 0) {
            std::uniform_int_distribution<int> pd(0, i - 1);
            es.push_back({pd(rng), i});
        }
    }
    return dualgraph::WeightedTree(std::move(vs), std::move(es));
}

inline dualgraph::Chain random_admissible_chain(std::mt19937_64& rng, int max_len,
                                                long long wmin = -6) {
    std::uniform_int_distribution<int> ld(1, max_len);
    std::uniform_int_distribution<long long> wd(wmin, -2);
    std::vector<long long> ws;
    int len = ld(rng);
    for (int i = 0; i < len; ++i) ws.push_back(wd(rng));
    return dualgraph::Chain(ws);
}

// all admissible chains with the given length over weights [wmin, -2]
inline void enumerate_weight_vectors(int len, long long wmin,
                                     const std::function<void(const std::vector<long long>&)>& f) {
    std::vector<long long> ws(len, -2);
    while (true) {
        f(ws);
        int i = len - 1;
        while (i >= 0 && ws[i] == wmin) --i;
        if (i < 0) break;
        --ws[i];
        for (int j = i + 1; j < len; ++j) ws[j] = -2;
    }
}

}  // namespace dgtest
