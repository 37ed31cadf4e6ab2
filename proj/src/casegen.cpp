#include "dualgraph/casegen.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dualgraph/exactdet.hpp"

namespace dualgraph {

namespace {

std::string weights_desc(const Chain& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.weights[i]);
    }
    return s + "]";
}

std::string star_desc(const StarBoundary& s) {
    std::string out = "star(" + std::to_string(s.center_weight);
    for (const auto& t : s.twigs) out += "; " + weights_desc(t);
    return out + ")";
}

std::string fork_desc(const Fork& f) {
    std::string out = "fork(" + std::to_string(f.branch_weight);
    for (const auto& t : f.twigs) out += "; " + weights_desc(t);
    return out + ")";
}

bool starts_with_minus2(const Chain& c) { return !c.empty() && c.weights.front() == -2; }

}  // namespace

ConstraintSet ConstraintSet::defaults() {
    ConstraintSet cs;
    auto add = [&](const std::string& n, const std::string& c) {
        cs.rules[n] = Constraint{n, c, true};
    };
    add("d_bounds", "Lemma 5.2(d)");
    add("d2_min", "Lemma 5.2(c)");
    add("beta_sign", "Lemma 5.2(b); Lemma 5.9 Step 1");
    add("bmy_bound", "Lemma 3.2(iv)");
    add("lemma_5_5_filter", "Lemma 5.5");
    add("lemma_4_2_fibration", "Lemma 4.2(c); Lemma 5.9 Step 5");
    add("dD_negative", "Lemma 3.5");
    add("a_min", "Lemma 5.0.1");
    add("a_excluded", "Lemma 5.0.1; Lemma 5.3(vi)");
    add("no_fork", "Lemma 1.7; Lemma 5.3");
    add("lemma_5_4_window", "Lemma 5.4");
    add("zariski_residual", "Zariski-Fujita decomposition equality");
    return cs;
}

bool ConstraintSet::enabled(const std::string& rule) const {
    auto it = rules.find(rule);
    return it != rules.end() && it->second.enabled;
}

void ConstraintSet::disable(const std::string& rule) {
    auto it = rules.find(rule);
    if (it == rules.end()) throw std::invalid_argument("unknown rule: " + rule);
    it->second.enabled = false;
}

const std::string& ConstraintSet::citation(const std::string& rule) const {
    static const std::string none = "";
    auto it = rules.find(rule);
    return it == rules.end() ? none : it->second.citation;
}

std::string ConstraintSet::provenance() const {
    std::ostringstream os;
    os << "r=" << r_equals << "; b in {";
    for (std::size_t i = 0; i < center_b.size(); ++i) os << (i ? "," : "") << center_b[i];
    os << "}; d<=(" << d1_max << "," << d2_max << "," << d3_max << "); d2>=" << d2_min
       << "; a>=" << a_min << "; a not in {";
    for (std::size_t i = 0; i < a_excluded.size(); ++i) os << (i ? "," : "") << a_excluded[i];
    os << "}; family_cap_k=" << family_cap_k << "; rules:";
    for (const auto& [name, r] : rules)
        os << " " << name << "=" << (r.enabled ? "on" : "off");
    return os.str();
}

std::uint64_t ConstraintSet::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : provenance()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<TripleRecord> enumerate_triples(long long bound, const ConstraintSet& cs) {
    if (bound < 3) throw std::invalid_argument("enumerate_triples: bound too small");
    std::vector<TripleRecord> out;
    long long d1b = cs.enabled("d_bounds") ? std::min(bound, cs.d1_max) : bound;
    for (long long d1 = 2; d1 <= d1b; ++d1) {
        long long d2b = cs.enabled("d_bounds") ? std::min(bound, cs.d2_max) : bound;
        for (long long d2 = d1; d2 <= d2b; ++d2) {
            if (cs.enabled("d2_min") && d2 < cs.d2_min) continue;
            long long d3b = cs.enabled("d_bounds") ? std::min(bound, cs.d3_max) : bound;
            for (long long d3 = d2; d3 <= d3b; ++d3) {
                Rat beta = Rat(1) - Rat(1, d1) - Rat(1, d2) - Rat(1, d3);
                if (cs.enabled("beta_sign") && beta < 0) continue;
                if (cs.enabled("bmy_bound") &&
                    Rat(d1 * d2 * d3) * beta * beta > Rat(3, 2))
                    continue;
                out.push_back({d1, d2, d3, beta, beta == 0});
            }
        }
    }
    return out;
}

namespace {

struct Engine {
    const ConstraintSet& cs;
    CaseReport& rep;

    void eliminate(CaseRecord rec, const std::string& rule) {
        rec.survivor = false;
        rec.rule = rule;
        rec.citation = cs.citation(rule);
        rep.records.push_back(std::move(rec));
    }

    // true when the record survives every enabled per-case rule
    void judge(CaseRecord rec) {
        const auto& n = *rec.num;
        if (cs.enabled("lemma_5_4_window") && n.bkD2 >= -2 && n.bkD2 <= Rat(-3, 14) &&
            n.KDE2 != -2 && n.KDE2 != -3) {
            eliminate(std::move(rec), "lemma_5_4_window");
            return;
        }
        if (n.residual != 0) {
            if (cs.enabled("zariski_residual")) {
                eliminate(std::move(rec), "zariski_residual");
            } else {
                rec.rule = "retained";  // residual rule switched off
                rep.records.push_back(std::move(rec));
            }
            return;
        }
        rec.survivor = true;
        rep.survivors += 1;
        rep.records.push_back(std::move(rec));
    }

    void expand_config(const StarBoundary& D) {
        CaseRecord base;
        base.d_desc = star_desc(D);
        base.D = D;
        base.a = 0;
        if (cs.enabled("lemma_5_5_filter") && D.b() == 1) {
            bool short2 = false, other2 = false;
            for (std::size_t i = 0; i < D.twigs.size(); ++i) {
                if (D.twigs[i].size() <= 2 && starts_with_minus2(D.twigs[i])) {
                    for (std::size_t j = 0; j < D.twigs.size(); ++j)
                        if (j != i && starts_with_minus2(D.twigs[j])) other2 = true;
                    short2 = true;
                }
            }
            if (short2 && other2) {
                eliminate(std::move(base), "lemma_5_5_filter");
                return;
            }
        }
        if (cs.enabled("lemma_4_2_fibration") && D.b() == 1) {
            bool has4 = false, has222 = false;
            for (const auto& t : D.twigs) {
                if (t.weights == std::vector<long long>{-4}) has4 = true;
                if (t.weights == std::vector<long long>{-2, -2, -2}) has222 = true;
            }
            if (has4 && has222) {
                eliminate(std::move(base), "lemma_4_2_fibration");
                return;
            }
        }
        Int dD = det(D.to_tree());
        if (dD >= 0) {
            if (cs.enabled("dD_negative")) {
                eliminate(std::move(base), "dD_negative");
            } else {
                base.rule = "retained";  // no exceptional divisor is defined here
                rep.records.push_back(std::move(base));
            }
            return;
        }
        Int a = -dD;
        base.a = a;
        if (cs.enabled("a_min") && a < cs.a_min) {
            eliminate(std::move(base), "a_min");
            return;
        }
        if (cs.enabled("a_excluded")) {
            for (long long ex : cs.a_excluded)
                if (a == ex) {
                    eliminate(std::move(base), "a_excluded");
                    return;
                }
        }
        auto fe = fork_families(a);
        if (fe.sporadic.empty() && fe.families.empty()) {
            eliminate(std::move(base), "no_fork");
            return;
        }
        for (const auto& erec : fe.sporadic) {
            CaseRecord rec = base;
            rec.E = erec;
            rec.e_desc = fork_desc(erec.fork);
            rec.num = assemble(D, erec);
            judge(std::move(rec));
        }
        for (const auto& fam : fe.families) {
            FamilySummary fs;
            fs.d_desc = base.d_desc;
            fs.a = a;
            fs.family = fam;
            auto rec0 = make_record(fam.member(0), a);
            auto rec1 = make_record(fam.member(1), a);
            auto n0 = assemble(D, rec0);
            auto n1 = assemble(D, rec1);
            if (n1.KDE2 - n0.KDE2 != -1 || n1.residual - n0.residual != -1)
                throw std::logic_error("family columns are not affine with slope -1");
            fs.kde2_at0 = n0.KDE2;
            fs.residual_at0 = n0.residual;
            if (is_integer(fs.residual_at0) && fs.residual_at0 >= 0)
                fs.zero_k = num(fs.residual_at0).convert_to<long long>();
            rep.families.push_back(fs);
            std::set<long long> ks;
            for (long long k = 0; k <= cs.family_cap_k; ++k) ks.insert(k);
            if (fs.zero_k) ks.insert(*fs.zero_k);
            for (long long k : ks) {
                auto erec = make_record(fam.member(k), a);
                erec.family_k = k;
                CaseRecord rec = base;
                rec.E = erec;
                rec.family_k = k;
                rec.e_desc = fork_desc(erec.fork) + " k=" + std::to_string(k);
                rec.num = assemble(D, erec);
                judge(std::move(rec));
            }
        }
    }
};

}  // namespace

CaseReport generate_cases(const ConstraintSet& cs) {
    if (cs.r_equals != 3)
        throw std::invalid_argument("generate_cases: the comb engine runs at r = 3 (Lemma 5.1)");
    CaseReport rep;
    rep.provenance = cs.provenance();
    Engine eng{cs, rep};
    auto triples = enumerate_triples(cs.enabled("d_bounds") ? cs.d3_max : 19, cs);
    for (const auto& tr : triples) {
        if (tr.p2_zero) {
            CaseRecord rec;
            rec.d_desc = "triple (" + std::to_string(tr.d1) + "," + std::to_string(tr.d2) + "," +
                         std::to_string(tr.d3) + ")";
            rec.a = 0;
            if (cs.enabled("beta_sign")) {
                eng.eliminate(std::move(rec), "beta_sign");
                continue;
            }
            continue;
        }
        auto c1 = enumerate_chains(tr.d1);
        auto c2 = enumerate_chains(tr.d2);
        auto c3 = enumerate_chains(tr.d3);
        for (long long b : cs.center_b) {
            std::set<std::vector<std::vector<long long>>> seen;
            for (const auto& z1 : c1)
                for (const auto& z2 : c2)
                    for (const auto& z3 : c3) {
                        std::vector<std::vector<long long>> key{z1.weights, z2.weights,
                                                                z3.weights};
                        std::sort(key.begin(), key.end());
                        if (!seen.insert(key).second) continue;
                        StarBoundary D(-b, {Chain(key[0]), Chain(key[1]), Chain(key[2])});
                        eng.expand_config(D);
                    }
        }
    }
    return rep;
}

}  // namespace dualgraph
