#include "dualgraph/hj.hpp"

#include <stdexcept>

#include "dualgraph/exactdet.hpp"

namespace dualgraph {

bool HJPair::valid() const {
    if (d < 1) return false;
    if (d == 1) return q == 0;
    if (q < 1 || q >= d) return false;
    return boost::multiprecision::gcd(d, q) == 1;
}

Chain chain_from_pair(const HJPair& p) {
    if (!p.valid()) throw std::invalid_argument("chain_from_pair: invalid (d, q) pair");
    std::vector<long long> ws;
    Int d = p.d, q = p.q;
    while (d > 1) {
        Int w = (d + q - 1) / q;  // ceil(d/q)
        ws.push_back(-static_cast<long long>(w));
        Int d2 = q, q2 = w * q - d;
        d = d2;
        q = q2;
    }
    return Chain(ws);
}

HJPair pair_from_chain(const Chain& c) {
    if (!c.admissible()) throw std::invalid_argument("pair_from_chain: chain is not admissible");
    HJPair p{chain_det(c.weights),
             chain_det({c.weights.begin() + (c.empty() ? 0 : 1), c.weights.end()})};
    if (c.empty()) p.q = 0;
    return p;
}

std::vector<Chain> enumerate_chains(const Int& d) {
    if (d < 1) throw std::invalid_argument("enumerate_chains: d must be positive");
    std::vector<Chain> out;
    if (d == 1) {
        out.emplace_back();
        return out;
    }
    for (Int q = 1; q < d; ++q) {
        if (boost::multiprecision::gcd(d, q) != 1) continue;
        out.push_back(chain_from_pair({d, q}));
    }
    return out;
}

}  // namespace dualgraph
