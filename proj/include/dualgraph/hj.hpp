#pragma once

#include <vector>

#include "dualgraph/graph.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

// Continued-fraction data of an admissible chain: d = d(T), q = d(T - T_1).
// (d, q) with 0 <= q < d, gcd(d, q) = 1 classifies admissible chains up to
// equality; (1, 0) is the empty chain.
struct HJPair {
    Int d;
    Int q;

    bool valid() const;
};

// The unique admissible chain with determinant d and delete-first
// determinant q, through the expansion d/q = w1 - 1/(w2 - 1/(...)), wi >= 2.
Chain chain_from_pair(const HJPair& p);

// Inverse of chain_from_pair; throws on non-admissible chains.
HJPair pair_from_chain(const Chain& c);

// All admissible chains with determinant d, ordered by increasing q.
// Exactly phi(d) chains for d >= 2; the empty chain for d = 1.
std::vector<Chain> enumerate_chains(const Int& d);

}  // namespace dualgraph
