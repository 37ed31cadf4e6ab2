#pragma once

#include <vector>

#include "dualgraph/exactdet.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

struct BarkData {
    // One coefficient per component, in to_tree() vertex order.
    std::vector<Rat> coefficients;
    Rat square;  // Bk^2
};

// Bark of a maximal twig attached to the rest of the boundary at its first
// component: the coefficients solve (negated chain matrix) x = unit vector at
// the free tip and the square is -d(T - tip)/d(T).
BarkData bark_twig(const Chain& c);

// Thicker bark of a contractible fork of quotient type: the coefficients
// solve the orthogonality system over all components; the square carries the
// closed form -d(R1)d(R2)d(R3)(delta-1)^2/a - sum of inductances.
BarkData bark_fork(const Fork& f);

// Closed form for the fork bark square alone.
Rat fork_bark_square_closed_form(const Fork& f);

// Coefficient table of the orthogonal dual divisors P_0, P_i of a comb:
// c0   = coefficient of B in P_0        = Pi/a
// ci   = coefficient of B in P_i        = e_i Pi / a
// aij  = coefficient of C_i in P_j (i != j) = e_i e_j Pi / a
struct StarCoefficients {
    Int a;   // -d(D) > 0
    Int Pi;  // product of twig determinants
    Rat c0;
    std::vector<Rat> ci;
    std::vector<std::vector<Rat>> aij;  // diagonal entries unused (0)
};

StarCoefficients star_coefficients(const StarBoundary& s);
// Same table computed by solving the defining linear systems over the full
// intersection matrix of D. Test oracle.
StarCoefficients star_coefficients_oracle(const StarBoundary& s);

struct PeelingProfile {
    Rat beta;                    // B . P = r - 2 - sum 1/d_i
    std::vector<Rat> beta_i;     // C_i . P, zero for twigs met at tips
    std::vector<Rat> capacities; // e_i = d_bar_i / d_i
    Int Pi;                      // product of twig determinants
    Int a;                       // -d(D)
    Rat p_squared;               // (Pi/a) * beta^2
};

// Requires every twig to be a nonempty admissible chain met at its first
// component and d(D) < 0.
PeelingProfile peeling_profile(const StarBoundary& s);

// beta of a star whose first s twigs are tip-attached chains with the given
// determinants: r - 2 - sum 1/d_i over those twigs.
Rat beta_partial(std::size_t r, const std::vector<Int>& tip_twig_dets);

// P^2 through an exact solve of the full intersection matrix of D.
Rat p_square_oracle(const StarBoundary& s);

// Coefficients for a boundary with two branching vertices B1, B2 joined by a
// chain T, with twig pairs (T1, T2) at B1 and (U1, U2) at B2.
struct TwoBranchCoefficients {
    Int a;
    Rat b11, b12, b22;
    Rat beta1, beta2;
    Rat p_squared;  // b11 beta1^2 + 2 b12 beta1 beta2 + b22 beta2^2
};

TwoBranchCoefficients two_branch_coefficients(const Chain& t1, const Chain& t2,
                                              const Chain& t, const Chain& u1,
                                              const Chain& u2, long long b1w,
                                              long long b2w);
TwoBranchCoefficients two_branch_coefficients_oracle(const Chain& t1, const Chain& t2,
                                                     const Chain& t, const Chain& u1,
                                                     const Chain& u2, long long b1w,
                                                     long long b2w);

// ---- general-tree peeling helpers ----

// Maximal twigs of a tree with at least one branching vertex, each returned
// as vertex ids ordered from attaching component to tip.
std::vector<std::vector<int>> twig_decomposition(const WeightedTree& t);

struct TreeBark {
    std::vector<Rat> coefficients;  // in t.vertices() order, zero off the twigs
    Rat square;
};

// Bark of a tree boundary: twig-supported coefficients solving the
// orthogonality conditions twig-block by twig-block.
TreeBark tree_bark(const WeightedTree& t);

// (K+D).v - Bk(D).v for a component v of the tree boundary D.
Rat nef_beta(const WeightedTree& t, int id);

// Connected component of t - removed containing id.
WeightedTree component_of(const WeightedTree& t, int id, int removed);

// Per-twig check that beta_i * d(Z_i - C_i) is an integer; trivially true
// for combs where every beta_i vanishes.
std::vector<bool> beta_integrality_check(const StarBoundary& s);

}  // namespace dualgraph
