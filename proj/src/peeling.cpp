#include "dualgraph/peeling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dualgraph {

namespace {

bool quotient_triple(Int r1, Int r2, Int r3) {
    // sorted twig determinants of a fork resolving a quotient point:
    // 1/r1 + 1/r2 + 1/r3 > 1 with all ri >= 2
    if (r1 != 2) return false;
    if (r2 == 2) return r3 >= 2;
    return r2 == 3 && r3 >= 3 && r3 <= 5;
}

}  // namespace

BarkData bark_twig(const Chain& c) {
    if (c.empty() || !c.admissible())
        throw std::invalid_argument("bark_twig: twig must be a nonempty admissible chain");
    auto t = c.to_tree();
    std::vector<Rat> rhs(c.size(), 0);
    rhs.back() = 1;
    BarkData bd;
    bd.coefficients = solve_tree_system(t, rhs);
    bd.square = -bd.coefficients.back();
    return bd;
}

bool is_quotient_fork(const Fork& f) {
    for (const auto& t : f.twigs)
        if (!t.admissible()) return false;
    if (f.branch_weight > -2) return false;
    std::vector<Int> dets;
    for (const auto& t : f.twigs) dets.push_back(chain_det(t.weights));
    std::sort(dets.begin(), dets.end());
    if (!quotient_triple(dets[0], dets[1], dets[2])) return false;
    // admissible twigs are positive definite, so the whole fork is negative
    // definite exactly when its determinant is positive
    return det(f.to_tree()) > 0;
}

Rat fork_bark_square_closed_form(const Fork& f) {
    Int a = det(f.to_tree());
    if (a <= 0)
        throw std::invalid_argument("fork_bark_square_closed_form: fork is not contractible");
    Rat delta = 0;
    Int prod = 1;
    Rat ind_sum = 0;
    for (const auto& tw : f.twigs) {
        auto td = twig_data(tw);
        delta += Rat(1) / Rat(td.d);
        prod *= td.d;
        ind_sum += td.inductance;
    }
    Rat dm1 = delta - 1;
    return -Rat(prod) * dm1 * dm1 / Rat(a) - ind_sum;
}

BarkData bark_fork(const Fork& f) {
    if (!is_quotient_fork(f))
        throw std::invalid_argument("bark_fork: fork does not contract to a quotient point");
    auto t = f.to_tree();
    // (K+E).v: +1 at the branch, -1 at tips, 0 on interior components
    std::vector<Rat> rhs(t.size(), 0);
    rhs[0] = -1;  // system is M x = 2 - nu
    std::size_t idx = 1;
    for (const auto& tw : f.twigs) {
        idx += tw.size();
        rhs[idx - 1] = 1;
    }
    BarkData bd;
    bd.coefficients = solve_tree_system(t, rhs);
    Rat sq = bd.coefficients[0];
    idx = 1;
    for (const auto& tw : f.twigs) {
        idx += tw.size();
        sq -= bd.coefficients[idx - 1];
    }
    bd.square = sq;
    return bd;
}

StarCoefficients star_coefficients(const StarBoundary& s) {
    StarCoefficients sc;
    Int prod = 1;
    std::vector<Rat> caps;
    for (const auto& tw : s.twigs) {
        if (tw.empty() || chain_det(tw.weights) < 2)
            throw std::invalid_argument("star_coefficients: twigs need determinant >= 2");
        auto td = twig_data(tw);
        prod *= td.d;
        caps.push_back(td.capacity);
    }
    Int dD = det(s.to_tree());
    if (dD >= 0) throw std::invalid_argument("star_coefficients: requires d(D) < 0");
    sc.a = -dD;
    sc.Pi = prod;
    Rat pa = Rat(prod) / Rat(sc.a);
    sc.c0 = pa;
    for (std::size_t i = 0; i < s.twigs.size(); ++i) sc.ci.push_back(caps[i] * pa);
    sc.aij.assign(s.twigs.size(), std::vector<Rat>(s.twigs.size(), 0));
    for (std::size_t i = 0; i < s.twigs.size(); ++i)
        for (std::size_t j = 0; j < s.twigs.size(); ++j)
            if (i != j) sc.aij[i][j] = caps[i] * caps[j] * pa;
    return sc;
}

namespace {

// indices of the center and of each twig's first component in to_tree() order
std::vector<std::size_t> first_component_indices(const StarBoundary& s) {
    std::vector<std::size_t> firsts;
    std::size_t idx = 1;
    for (const auto& tw : s.twigs) {
        firsts.push_back(idx);
        idx += tw.size();
    }
    return firsts;
}

std::vector<std::vector<Int>> negated_matrix_of(const WeightedTree& t) {
    std::map<int, int> pos;
    int i = 0;
    for (const auto& v : t.vertices()) pos[v.id] = i++;
    std::vector<std::vector<Int>> m(t.size(), std::vector<Int>(t.size(), 0));
    i = 0;
    for (const auto& v : t.vertices()) m[i][i] = -v.weight, ++i;
    for (const auto& [a, b] : t.edges()) {
        m[pos[a]][pos[b]] = -1;
        m[pos[b]][pos[a]] = -1;
    }
    return m;
}

// Solves I(t) x = e_target exactly; target is a vertex position.
std::vector<Rat> dual_divisor(const WeightedTree& t, std::size_t target) {
    auto m = negated_matrix_of(t);
    std::vector<Int> rhs(t.size(), 0);
    rhs[target] = -1;  // I = -M, so M x = -e_target
    auto x = solve_linear(std::move(m), std::move(rhs));
    if (!x) throw std::domain_error("dual_divisor: singular intersection matrix");
    return *x;
}

}  // namespace

StarCoefficients star_coefficients_oracle(const StarBoundary& s) {
    for (const auto& tw : s.twigs)
        if (tw.empty() || chain_det(tw.weights) < 2)
            throw std::invalid_argument("star_coefficients_oracle: twigs need determinant >= 2");
    Int dD = det(s.to_tree());
    if (dD >= 0) throw std::invalid_argument("star_coefficients_oracle: requires d(D) < 0");
    StarCoefficients sc;
    sc.a = -dD;
    sc.Pi = 1;
    for (const auto& tw : s.twigs) sc.Pi *= chain_det(tw.weights);
    auto t = s.to_tree();
    auto firsts = first_component_indices(s);
    auto p0 = dual_divisor(t, 0);
    sc.c0 = p0[0];
    sc.aij.assign(s.twigs.size(), std::vector<Rat>(s.twigs.size(), 0));
    sc.ci.resize(s.twigs.size());
    for (std::size_t j = 0; j < s.twigs.size(); ++j) {
        auto pj = dual_divisor(t, firsts[j]);
        sc.ci[j] = pj[0];
        for (std::size_t i = 0; i < s.twigs.size(); ++i)
            if (i != j) sc.aij[i][j] = pj[firsts[i]];
    }
    return sc;
}

PeelingProfile peeling_profile(const StarBoundary& s) {
    PeelingProfile pp;
    pp.Pi = 1;
    Rat invsum = 0;
    for (const auto& tw : s.twigs) {
        if (tw.empty() || !tw.admissible())
            throw std::invalid_argument("peeling_profile: twigs must be nonempty admissible chains");
        auto td = twig_data(tw);
        pp.Pi *= td.d;
        invsum += Rat(1) / Rat(td.d);
        pp.capacities.push_back(td.capacity);
        pp.beta_i.push_back(0);
    }
    Int dD = det(s.to_tree());
    if (dD >= 0) throw std::invalid_argument("peeling_profile: requires d(D) < 0");
    pp.a = -dD;
    pp.beta = Rat(static_cast<long long>(s.r()) - 2) - invsum;
    pp.p_squared = Rat(pp.Pi) * pp.beta * pp.beta / Rat(pp.a);
    return pp;
}

Rat beta_partial(std::size_t r, const std::vector<Int>& tip_twig_dets) {
    Rat b = Rat(static_cast<long long>(r) - 2);
    for (const auto& d : tip_twig_dets) b -= Rat(1) / Rat(d);
    return b;
}

Rat p_square_oracle(const StarBoundary& s) {
    Int dD = det(s.to_tree());
    if (dD >= 0) throw std::invalid_argument("p_square_oracle: requires d(D) < 0");
    Rat beta = beta_partial(s.r(), [&] {
        std::vector<Int> ds;
        for (const auto& tw : s.twigs) ds.push_back(chain_det(tw.weights));
        return ds;
    }());
    auto x = dual_divisor(s.to_tree(), 0);
    return beta * beta * x[0];
}

namespace {

WeightedTree two_branch_tree(const Chain& t1, const Chain& t2, const Chain& t,
                             const Chain& u1, const Chain& u2, long long b1w,
                             long long b2w, int* b1_idx, int* b2_idx) {
    std::vector<WeightedTree::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    int next = 0;
    auto add_chain = [&](const Chain& c, int attach) {
        int prev = attach;
        for (long long w : c.weights) {
            vs.push_back({next, w});
            if (prev >= 0) es.push_back({prev, next});
            prev = next++;
        }
        return prev;
    };
    int b1 = next;
    vs.push_back({next++, b1w});
    add_chain(t1, b1);
    add_chain(t2, b1);
    int tail = add_chain(t, b1);
    int b2 = next;
    vs.push_back({next++, b2w});
    es.push_back({tail, b2});
    add_chain(u1, b2);
    add_chain(u2, b2);
    *b1_idx = b1;
    *b2_idx = b2;
    return WeightedTree(std::move(vs), std::move(es));
}

}  // namespace

TwoBranchCoefficients two_branch_coefficients(const Chain& t1, const Chain& t2,
                                              const Chain& t, const Chain& u1,
                                              const Chain& u2, long long b1w,
                                              long long b2w) {
    int b1, b2;
    auto D = two_branch_tree(t1, t2, t, u1, u2, b1w, b2w, &b1, &b2);
    Int dD = det(D);
    if (dD >= 0) throw std::invalid_argument("two_branch_coefficients: requires d(D) < 0");
    TwoBranchCoefficients tb;
    tb.a = -dD;
    Int dt1 = chain_det(t1.weights), dt2 = chain_det(t2.weights);
    Int du1 = chain_det(u1.weights), du2 = chain_det(u2.weights);
    // L = B1 + T1 + T2 + T rooted at B1; R = B2 + T + U1 + U2 rooted at B2
    std::vector<WeightedTree::Vertex> lv{{0, b1w}};
    std::vector<std::pair<int, int>> le;
    int next = 1;
    auto app = [&](std::vector<WeightedTree::Vertex>& vs, std::vector<std::pair<int, int>>& es,
                   const Chain& c, int attach) {
        int prev = attach;
        for (long long w : c.weights) {
            vs.push_back({next, w});
            es.push_back({prev, next});
            prev = next++;
        }
    };
    app(lv, le, t1, 0);
    app(lv, le, t2, 0);
    app(lv, le, t, 0);
    Int dL = det(WeightedTree(std::move(lv), std::move(le)));
    next = 1;
    std::vector<WeightedTree::Vertex> rv{{0, b2w}};
    std::vector<std::pair<int, int>> re;
    app(rv, re, u1, 0);
    app(rv, re, u2, 0);
    app(rv, re, t.reversed(), 0);
    Int dR = det(WeightedTree(std::move(rv), std::move(re)));
    tb.b11 = Rat(dt1 * dt2 * dR) / Rat(tb.a);
    tb.b12 = Rat(dt1 * dt2 * du1 * du2) / Rat(tb.a);
    tb.b22 = Rat(du1 * du2 * dL) / Rat(tb.a);
    tb.beta1 = Rat(1) - Rat(1) / Rat(dt1) - Rat(1) / Rat(dt2);
    tb.beta2 = Rat(1) - Rat(1) / Rat(du1) - Rat(1) / Rat(du2);
    tb.p_squared = tb.b11 * tb.beta1 * tb.beta1 + 2 * tb.b12 * tb.beta1 * tb.beta2 +
                   tb.b22 * tb.beta2 * tb.beta2;
    return tb;
}

TwoBranchCoefficients two_branch_coefficients_oracle(const Chain& t1, const Chain& t2,
                                                     const Chain& t, const Chain& u1,
                                                     const Chain& u2, long long b1w,
                                                     long long b2w) {
    int b1, b2;
    auto D = two_branch_tree(t1, t2, t, u1, u2, b1w, b2w, &b1, &b2);
    Int dD = det(D);
    if (dD >= 0) throw std::invalid_argument("two_branch_coefficients_oracle: requires d(D) < 0");
    std::map<int, std::size_t> pos;
    std::size_t i = 0;
    for (const auto& v : D.vertices()) pos[v.id] = i++;
    auto p1 = dual_divisor(D, pos[b1]);
    auto p2 = dual_divisor(D, pos[b2]);
    TwoBranchCoefficients tb;
    tb.a = -dD;
    tb.b11 = p1[pos[b1]];
    tb.b12 = p2[pos[b1]];
    tb.b22 = p2[pos[b2]];
    Int dt1 = chain_det(t1.weights), dt2 = chain_det(t2.weights);
    Int du1 = chain_det(u1.weights), du2 = chain_det(u2.weights);
    tb.beta1 = Rat(1) - Rat(1) / Rat(dt1) - Rat(1) / Rat(dt2);
    tb.beta2 = Rat(1) - Rat(1) / Rat(du1) - Rat(1) / Rat(du2);
    tb.p_squared = tb.b11 * tb.beta1 * tb.beta1 + 2 * tb.b12 * tb.beta1 * tb.beta2 +
                   tb.b22 * tb.beta2 * tb.beta2;
    return tb;
}

std::vector<std::vector<int>> twig_decomposition(const WeightedTree& t) {
    std::set<int> branching;
    for (const auto& v : t.vertices())
        if (t.branching_number(v.id) >= 3) branching.insert(v.id);
    if (branching.empty())
        throw std::invalid_argument("twig_decomposition: tree has no branching vertex");
    std::vector<std::vector<int>> twigs;
    for (const auto& v : t.vertices()) {
        if (t.branching_number(v.id) != 1 || branching.count(v.id)) continue;
        // walk inward from the tip until the first branching vertex
        std::vector<int> path{v.id};
        int prev = -1, cur = v.id;
        while (true) {
            int nxt = -1;
            for (int nb : t.neighbors(cur))
                if (nb != prev) nxt = nb;
            if (nxt < 0) break;  // isolated chain: cannot happen with branching nonempty
            if (branching.count(nxt)) break;
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        std::reverse(path.begin(), path.end());  // attach-first
        twigs.push_back(path);
    }
    std::sort(twigs.begin(), twigs.end());
    return twigs;
}

TreeBark tree_bark(const WeightedTree& t) {
    std::map<int, std::size_t> pos;
    std::size_t i = 0;
    for (const auto& v : t.vertices()) pos[v.id] = i++;
    TreeBark tb;
    tb.coefficients.assign(t.size(), 0);
    tb.square = 0;
    for (const auto& twig : twig_decomposition(t)) {
        std::vector<long long> ws;
        for (int id : twig) ws.push_back(t.weight(id));
        auto bd = bark_twig(Chain(ws));
        for (std::size_t k = 0; k < twig.size(); ++k)
            tb.coefficients[pos[twig[k]]] = bd.coefficients[k];
        tb.square += bd.square;
    }
    return tb;
}

Rat nef_beta(const WeightedTree& t, int id) {
    auto tb = tree_bark(t);
    std::map<int, std::size_t> pos;
    std::size_t i = 0;
    for (const auto& v : t.vertices()) pos[v.id] = i++;
    Rat kd = Rat(-2 + static_cast<long long>(t.neighbors(id).size()));
    Rat bk = tb.coefficients[pos.at(id)] * Rat(t.weight(id));
    for (int nb : t.neighbors(id)) bk += tb.coefficients[pos.at(nb)];
    return kd - bk;
}

WeightedTree component_of(const WeightedTree& t, int id, int removed) {
    std::set<int> keep{id};
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int nb : t.neighbors(v)) {
            if (nb == removed || keep.count(nb)) continue;
            keep.insert(nb);
            stack.push_back(nb);
        }
    }
    std::vector<WeightedTree::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (const auto& v : t.vertices())
        if (keep.count(v.id)) vs.push_back(v);
    for (const auto& [a, b] : t.edges())
        if (keep.count(a) && keep.count(b)) es.push_back({a, b});
    return WeightedTree(std::move(vs), std::move(es));
}

std::vector<bool> beta_integrality_check(const StarBoundary& s) {
    auto pp = peeling_profile(s);
    std::vector<bool> out;
    for (std::size_t i = 0; i < s.twigs.size(); ++i) {
        Rat v = pp.beta_i[i] * Rat(twig_data(s.twigs[i]).d_bar);
        out.push_back(is_integer(v));
    }
    return out;
}

}  // namespace dualgraph
