#include "dualgraph/forks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dualgraph/exactdet.hpp"

namespace dualgraph {

namespace {

bool quotient_triple(const ForkType& t) {
    if (t[0] != 2) return false;
    if (t[1] == 2) return t[2] >= 2;
    return t[1] == 3 && t[2] >= 3 && t[2] <= 5;
}

using Key = std::pair<long long, std::array<std::vector<long long>, 3>>;

Key fork_key(const Fork& f) {
    std::array<std::vector<long long>, 3> tw{f.twigs[0].weights, f.twigs[1].weights,
                                             f.twigs[2].weights};
    std::sort(tw.begin(), tw.end());
    return {f.branch_weight, tw};
}

}  // namespace

std::optional<ForkType> classify_fork(const Fork& f) {
    if (f.branch_weight > -2) return std::nullopt;
    for (const auto& t : f.twigs)
        if (!t.admissible()) return std::nullopt;
    ForkType type{chain_det(f.twigs[0].weights), chain_det(f.twigs[1].weights),
                  chain_det(f.twigs[2].weights)};
    std::sort(type.begin(), type.end());
    if (!quotient_triple(type)) return std::nullopt;
    // twigs are admissible chains, hence positive definite; negative
    // definiteness of the fork reduces to det > 0
    if (det(f.to_tree()) <= 0) return std::nullopt;
    return type;
}

Int fork_determinant(const std::array<Int, 3>& r, const Int& h, const std::array<Int, 3>& obar) {
    return h * r[0] * r[1] * r[2] - obar[0] * r[1] * r[2] - r[0] * obar[1] * r[2] -
           r[0] * r[1] * obar[2];
}

Fork ForkFamily::member(long long k) const {
    std::vector<long long> tw(static_cast<std::size_t>(k), -2);
    tw.insert(tw.end(), base.weights.begin(), base.weights.end());
    return Fork(-2, {Chain({-2}), Chain({-2}), Chain(tw)});
}

ForkRecord make_record(const Fork& f, const Int& a) {
    auto type = classify_fork(f);
    if (!type) throw std::invalid_argument("make_record: not a quotient fork");
    ForkRecord rec;
    rec.fork = f;
    rec.type = *type;
    rec.h = f.h();
    rec.a = det(f.to_tree());
    if (rec.a != a) throw std::invalid_argument("make_record: determinant mismatch");
    for (int i = 0; i < 3; ++i) rec.twig_pairs[i] = pair_from_chain(f.twigs[i]);
    rec.bark_square = fork_bark_square_closed_form(f);
    rec.k_degree = f.to_tree().canonical_degree();
    rec.size = static_cast<long long>(f.size());
    rec.group_order_lower_bound = 2 * a;
    return rec;
}

FeasibleTypes feasible_a(const Int& a) {
    if (a < 1) throw std::invalid_argument("feasible_a: a must be positive");
    FeasibleTypes ft;
    // (2,2,n): determinant 4(n(h-1) - obar_n) is always a positive multiple
    // of 4, and q0 = 1 realizes every multiple at h = 2
    ft.t22n = (a % 4 == 0) && a >= 4;
    for (int r3i = 3; r3i <= 5; ++r3i) {
        Int r3 = r3i;
        bool found = false;
        // a > 6 r3 (h - 3) gives the h bound
        for (Int h = 2; 6 * r3 * (h - 3) < a; ++h) {
            for (Int o2 = 1; o2 <= 2; ++o2) {
                for (Int o3 = 1; o3 < r3; ++o3) {
                    if (boost::multiprecision::gcd(r3, o3) != 1) continue;
                    if (fork_determinant({2, 3, r3}, h, {1, o2, o3}) == a) found = true;
                }
            }
        }
        if (r3i == 3) ft.t233 = found;
        if (r3i == 4) ft.t234 = found;
        if (r3i == 5) ft.t235 = found;
    }
    return ft;
}

ForkEnumeration fork_families(const Int& a) {
    if (a < 1) throw std::invalid_argument("fork_families: a must be positive");
    ForkEnumeration fe;
    std::set<Key> seen;
    auto emit = [&](const Fork& f) {
        if (seen.insert(fork_key(f)).second) fe.sporadic.push_back(make_record(f, a));
    };
    // (2,3,r3) types, all h
    for (int r3i = 3; r3i <= 5; ++r3i) {
        Int r3 = r3i;
        for (Int h = 2; 6 * r3 * (h - 3) < a; ++h) {
            for (Int o2 = 1; o2 <= 2; ++o2) {
                for (Int o3 = 1; o3 < r3; ++o3) {
                    if (boost::multiprecision::gcd(r3, o3) != 1) continue;
                    if (fork_determinant({2, 3, r3}, h, {1, o2, o3}) != a) continue;
                    emit(Fork(-h.convert_to<long long>(),
                              {chain_from_pair({2, 1}), chain_from_pair({3, o2}),
                               chain_from_pair({r3, o3})}));
                }
            }
        }
    }
    if (a % 4 == 0 && a >= 4) {
        Int m = a / 4;
        // h >= 3 solutions: n(h-1) - obar = m with obar in [1, n)
        for (Int h = 3; h - 2 <= m; ++h) {
            for (Int n = 2; n * (h - 2) < m; ++n) {
                Int on = n * (h - 1) - m;
                if (on < 1 || on >= n) continue;
                if (boost::multiprecision::gcd(n, on) != 1) continue;
                emit(Fork(-h.convert_to<long long>(),
                          {Chain({-2}), Chain({-2}), chain_from_pair({n, on})}));
            }
        }
        // h = 2 families
        for (Int q0 = 1; q0 <= m; ++q0) {
            if (boost::multiprecision::gcd(q0, m) != 1) continue;
            ForkFamily fam;
            fam.a = a;
            fam.m = m;
            fam.q0 = q0;
            fam.base = chain_from_pair({m + q0, q0});
            fe.families.push_back(std::move(fam));
        }
    }
    std::stable_sort(fe.sporadic.begin(), fe.sporadic.end(),
                     [](const ForkRecord& x, const ForkRecord& y) {
                         if (x.size != y.size) return x.size < y.size;
                         if (x.h != y.h) return x.h < y.h;
                         return fork_key(x.fork) < fork_key(y.fork);
                     });
    std::stable_sort(fe.families.begin(), fe.families.end(),
                     [](const ForkFamily& x, const ForkFamily& y) {
                         if (x.base.size() != y.base.size()) return x.base.size() < y.base.size();
                         return x.q0 < y.q0;
                     });
    return fe;
}

std::vector<ForkRecord> enumerate_forks(const Int& a, long long size_cap) {
    if (size_cap < 4) throw std::invalid_argument("enumerate_forks: size_cap must be >= 4");
    auto fe = fork_families(a);
    std::vector<ForkRecord> out;
    for (auto& rec : fe.sporadic)
        if (rec.size <= size_cap) out.push_back(rec);
    for (std::size_t fi = 0; fi < fe.families.size(); ++fi) {
        const auto& fam = fe.families[fi];
        for (long long k = 0;; ++k) {
            Fork f = fam.member(k);
            if (static_cast<long long>(f.size()) > size_cap) break;
            auto rec = make_record(f, a);
            rec.family_k = k;
            rec.family_index = fi;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace dualgraph
