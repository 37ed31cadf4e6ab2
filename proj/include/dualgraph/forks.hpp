#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dualgraph/graph.hpp"
#include "dualgraph/hj.hpp"
#include "dualgraph/peeling.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

// Twig determinant triple (sorted) of a fork resolving a non-cyclic quotient
// point: (2,2,n), (2,3,3), (2,3,4) or (2,3,5).
using ForkType = std::array<Int, 3>;

// Returns the type when the fork is admissible, negative definite and its
// twig determinants form a quotient triple; nullopt otherwise.
std::optional<ForkType> classify_fork(const Fork& f);

// a = h r1 r2 r3 - obar1 r2 r3 - r1 obar2 r3 - r1 r2 obar3.
Int fork_determinant(const std::array<Int, 3>& r, const Int& h, const std::array<Int, 3>& obar);

struct FeasibleTypes {
    bool t233 = false;
    bool t234 = false;
    bool t235 = false;
    bool t22n = false;  // some (2,2,n) solution exists (h = 2 family or h >= 3)
    bool any() const { return t233 || t234 || t235 || t22n; }
};

// Which fork types admit determinant a at all.
FeasibleTypes feasible_a(const Int& a);

// (2,2,n) forks of determinant a = 4m with h = 2 come in infinite families:
// base twig chain(m+q0, q0) with k extra (-2)-components prepended, one
// family per q0 in [1, m] coprime to m.
struct ForkFamily {
    Int a;
    Int m;   // a / 4
    Int q0;  // base residue
    Chain base;

    Fork member(long long k) const;
};

struct ForkRecord {
    Fork fork;
    ForkType type;
    long long h = 2;
    Int a;
    std::array<HJPair, 3> twig_pairs;
    Rat bark_square;
    long long k_degree = 0;  // K.E
    long long size = 0;      // #E
    Int group_order_lower_bound;  // 2a
    std::optional<long long> family_k;  // set for family members
    std::optional<std::size_t> family_index;
};

struct ForkEnumeration {
    std::vector<ForkRecord> sporadic;   // finite solutions, canonical order
    std::vector<ForkFamily> families;   // h = 2 (2,2,n) families
};

ForkEnumeration fork_families(const Int& a);

ForkRecord make_record(const Fork& f, const Int& a);

// All contractible forks with determinant a and at most size_cap components:
// sporadic records first, then family members with ascending k.
std::vector<ForkRecord> enumerate_forks(const Int& a, long long size_cap = 30);

}  // namespace dualgraph
