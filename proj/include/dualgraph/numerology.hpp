#pragma once

#include <vector>

#include "dualgraph/forks.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/peeling.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

// Global bookkeeping for a candidate boundary pair (D, E) on a rational
// surface: b2 = #D + #E, K^2 = 10 - b2, and the decomposition residual
// (K+D+E)^2 - (P^2 + Bk(D)^2 + Bk(E)^2).
struct SurfaceNumerology {
    long long n_D = 0, n_E = 0;
    long long b2 = 0;
    long long K2 = 0;
    long long KD = 0, KE = 0;
    long long D2 = 0, E2 = 0;
    long long KDE2 = 0;  // (K+D+E)^2
    Rat bkD2, bkE2, P2;
    Rat residual;
};

// Requires d(D) < 0 and -d(D) = d(E).
SurfaceNumerology assemble(const StarBoundary& D, const ForkRecord& E);

// Search-side form of the orbifold surface inequality: true iff
// Pi (beta + sum beta_i e_i)^2 <= 3 a / gamma_lower, with gamma_lower >= 2a.
bool bmy_check(const PeelingProfile& profile, const Int& gamma_lower);

// chi + sum 1/|G_p| >= 0 (strict variant for log general type).
bool langer_check(long long chi, const std::vector<Int>& group_orders, bool strict = false);

Rat zariski_residual(const SurfaceNumerology& n);

}  // namespace dualgraph
