#pragma once

#include <optional>
#include <vector>

#include "dualgraph/graph.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

// d(T): determinant of the negated intersection matrix; d(empty) = 1.
// Computed by leaf elimination, O(#vertices) big-int operations.
Int det(const WeightedTree& t);

// Same determinant through the full matrix and fraction-free Gaussian
// elimination. Test oracle for det(); do not use in hot paths.
Int det_oracle(const WeightedTree& t);

// Chain determinant via the three-term recurrence
// d_k = (-w_k) d_{k-1} - d_{k-2}, d_0 = 1.
Int chain_det(const std::vector<long long>& weights);

// Sylvester criterion on -I(T): every leading principal minor along a
// breadth-first order must be positive. Zero minors count as failure.
bool is_negative_definite(const WeightedTree& t);

struct TwigData {
    Int d;        // d(T)
    Int d_bar;    // d(T - T_1), T_1 = component meeting the branch
    Int d_tilde;  // d(T - T_k), T_k = the free tip
    Rat capacity;    // d_bar / d
    Rat inductance;  // d_tilde / d
};

// Throws std::invalid_argument on the empty chain.
TwigData twig_data(const Chain& c);

// Determinant of a square big-int matrix by the Bareiss one-step method.
Int bareiss_det(std::vector<std::vector<Int>> m);

// Exact solution of m x = rhs; nullopt when m is singular.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Int>> m,
                                             std::vector<Int> rhs);

// Solves (-I(T)) x = rhs for a tree in O(n) rational operations via an
// up-down sweep. rhs is indexed like t.vertices(). Throws if a pivot
// vanishes (cannot happen for negative definite trees).
std::vector<Rat> solve_tree_system(const WeightedTree& t, const std::vector<Rat>& rhs);

}  // namespace dualgraph
