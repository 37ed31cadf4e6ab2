#include "dualgraph/numerology.hpp"

#include <stdexcept>

#include "dualgraph/exactdet.hpp"

namespace dualgraph {

SurfaceNumerology assemble(const StarBoundary& D, const ForkRecord& E) {
    auto dtree = D.to_tree();
    Int dD = det(dtree);
    if (dD >= 0) throw std::invalid_argument("assemble: requires d(D) < 0");
    if (-dD != E.a)
        throw std::invalid_argument("assemble: |d(D)| must equal d(E)");
    SurfaceNumerology n;
    n.n_D = static_cast<long long>(D.size());
    n.n_E = E.size;
    n.b2 = n.n_D + n.n_E;
    n.K2 = 10 - n.b2;
    n.KD = dtree.canonical_degree();
    n.KE = E.k_degree;
    n.D2 = dtree.self_intersection();
    auto etree = E.fork.to_tree();
    n.E2 = etree.self_intersection();
    n.KDE2 = n.K2 + 2 * n.KD + n.D2 + 2 * n.KE + n.E2;
    auto pp = peeling_profile(D);
    n.P2 = pp.p_squared;
    Rat bkD = 0;
    for (const auto& tw : D.twigs) bkD += bark_twig(tw).square;
    n.bkD2 = bkD;
    n.bkE2 = E.bark_square;
    n.residual = Rat(n.KDE2) - (n.P2 + n.bkD2 + n.bkE2);
    return n;
}

bool bmy_check(const PeelingProfile& profile, const Int& gamma_lower) {
    if (gamma_lower < 2 * profile.a)
        throw std::invalid_argument("bmy_check: gamma_lower must be >= 2a");
    Rat s = profile.beta;
    for (std::size_t i = 0; i < profile.beta_i.size(); ++i)
        s += profile.beta_i[i] * profile.capacities[i];
    Rat lhs = Rat(profile.Pi) * s * s;
    return lhs <= Rat(3 * profile.a) / Rat(gamma_lower);
}

bool langer_check(long long chi, const std::vector<Int>& group_orders, bool strict) {
    Rat s = chi;
    for (const auto& g : group_orders) {
        if (g < 1) throw std::invalid_argument("langer_check: group orders must be >= 1");
        s += Rat(1) / Rat(g);
    }
    return strict ? s > 0 : s >= 0;
}

Rat zariski_residual(const SurfaceNumerology& n) { return n.residual; }

}  // namespace dualgraph
