// Python bindings for the main operations: exact determinants,
// continued-fraction chains, barks, fork enumeration and the case scan.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualgraph/casegen.hpp"
#include "dualgraph/exactdet.hpp"
#include "dualgraph/forks.hpp"
#include "dualgraph/hj.hpp"
#include "dualgraph/numerology.hpp"
#include "dualgraph/peeling.hpp"
#include "dualgraph/tables.hpp"
#include "dualgraph/textio.hpp"

namespace py = pybind11;
using namespace dualgraph;

namespace {

py::object fraction(const Rat& q) {
    static py::object F = py::module_::import("fractions").attr("Fraction");
    return F(to_string(q));
}

py::object pyint(const Int& n) {
    static py::object I = py::module_::import("builtins").attr("int");
    return I(n.str());
}

Fork make_fork(long long h, const std::vector<std::vector<long long>>& twigs) {
    if (twigs.size() != 3) throw std::invalid_argument("a fork needs exactly three twigs");
    return Fork(-h, {Chain(twigs[0]), Chain(twigs[1]), Chain(twigs[2])});
}

StarBoundary make_star(long long b, const std::vector<std::vector<long long>>& twigs) {
    std::vector<Chain> cs;
    for (const auto& t : twigs) cs.emplace_back(t);
    return StarBoundary(-b, cs);
}

py::dict numerology_dict(const SurfaceNumerology& n) {
    py::dict d;
    d["n_D"] = n.n_D;
    d["n_E"] = n.n_E;
    d["b2"] = n.b2;
    d["K2"] = n.K2;
    d["KD"] = n.KD;
    d["KE"] = n.KE;
    d["D2"] = n.D2;
    d["E2"] = n.E2;
    d["KDE2"] = n.KDE2;
    d["P2"] = fraction(n.P2);
    d["bkD2"] = fraction(n.bkD2);
    d["bkE2"] = fraction(n.bkE2);
    d["residual"] = fraction(n.residual);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants of SNC-divisor dual graphs";

    m.def("chain_det", [](const std::vector<long long>& ws) { return pyint(chain_det(ws)); },
          py::arg("weights"));
    m.def(
        "tree_det",
        [](const std::vector<long long>& ws,
           const std::vector<std::pair<int, int>>& edges) {
            std::vector<WeightedTree::Vertex> vs;
            for (std::size_t i = 0; i < ws.size(); ++i)
                vs.push_back({static_cast<int>(i), ws[i]});
            return pyint(det(WeightedTree(vs, edges)));
        },
        py::arg("weights"), py::arg("edges"));
    m.def("is_negative_definite", [](const std::vector<long long>& ws,
                                     const std::vector<std::pair<int, int>>& edges) {
        std::vector<WeightedTree::Vertex> vs;
        for (std::size_t i = 0; i < ws.size(); ++i) vs.push_back({static_cast<int>(i), ws[i]});
        return is_negative_definite(WeightedTree(vs, edges));
    });
    m.def("twig_data", [](const std::vector<long long>& ws) {
        auto td = twig_data(Chain(ws));
        py::dict d;
        d["d"] = pyint(td.d);
        d["d_bar"] = pyint(td.d_bar);
        d["d_tilde"] = pyint(td.d_tilde);
        d["capacity"] = fraction(td.capacity);
        d["inductance"] = fraction(td.inductance);
        return d;
    });

    m.def("chain_from_pair", [](long long d, long long q) {
        return chain_from_pair({d, q}).weights;
    });
    m.def("pair_from_chain", [](const std::vector<long long>& ws) {
        auto p = pair_from_chain(Chain(ws));
        return py::make_tuple(pyint(p.d), pyint(p.q));
    });
    m.def("enumerate_chains", [](long long d) {
        std::vector<std::vector<long long>> out;
        for (const auto& c : enumerate_chains(d)) out.push_back(c.weights);
        return out;
    });

    m.def("bark_twig", [](const std::vector<long long>& ws) {
        auto bd = bark_twig(Chain(ws));
        py::list cs;
        for (const auto& c : bd.coefficients) cs.append(fraction(c));
        py::dict d;
        d["coefficients"] = cs;
        d["square"] = fraction(bd.square);
        return d;
    });
    m.def("bark_fork", [](long long h, const std::vector<std::vector<long long>>& twigs) {
        auto bd = bark_fork(make_fork(h, twigs));
        py::list cs;
        for (const auto& c : bd.coefficients) cs.append(fraction(c));
        py::dict d;
        d["coefficients"] = cs;
        d["square"] = fraction(bd.square);
        return d;
    });
    m.def("classify_fork",
          [](long long h, const std::vector<std::vector<long long>>& twigs) -> py::object {
              auto t = classify_fork(make_fork(h, twigs));
              if (!t) return py::none();
              return py::make_tuple(pyint((*t)[0]), pyint((*t)[1]), pyint((*t)[2]));
          });
    m.def("feasible_a", [](long long a) {
        auto ft = feasible_a(a);
        py::dict d;
        d["t233"] = ft.t233;
        d["t234"] = ft.t234;
        d["t235"] = ft.t235;
        d["t22n"] = ft.t22n;
        return d;
    });
    m.def(
        "enumerate_forks",
        [](long long a, long long cap) {
            py::list out;
            for (const auto& rec : enumerate_forks(a, cap)) {
                py::dict d;
                d["h"] = rec.h;
                py::list tw;
                for (const auto& t : rec.fork.twigs) tw.append(t.weights);
                d["twigs"] = tw;
                d["type"] = py::make_tuple(pyint(rec.type[0]), pyint(rec.type[1]),
                                           pyint(rec.type[2]));
                d["size"] = rec.size;
                d["k_degree"] = rec.k_degree;
                d["bark_square"] = fraction(rec.bark_square);
                d["family_k"] =
                    rec.family_k ? py::cast(*rec.family_k) : py::object(py::none());
                out.append(d);
            }
            return out;
        },
        py::arg("a"), py::arg("size_cap") = 30);

    m.def("peeling_profile", [](long long b, const std::vector<std::vector<long long>>& twigs) {
        auto pp = peeling_profile(make_star(b, twigs));
        py::dict d;
        d["a"] = pyint(pp.a);
        d["Pi"] = pyint(pp.Pi);
        d["beta"] = fraction(pp.beta);
        d["p_squared"] = fraction(pp.p_squared);
        py::list caps;
        for (const auto& c : pp.capacities) caps.append(fraction(c));
        d["capacities"] = caps;
        return d;
    });
    m.def("assemble", [](long long b, const std::vector<std::vector<long long>>& dtwigs,
                         long long h, const std::vector<std::vector<long long>>& etwigs) {
        auto D = make_star(b, dtwigs);
        auto f = make_fork(h, etwigs);
        return numerology_dict(assemble(D, make_record(f, det(f.to_tree()))));
    });

    m.def(
        "enumerate_triples",
        [](long long bound) {
            py::list out;
            for (const auto& t : enumerate_triples(bound))
                out.append(py::make_tuple(t.d1, t.d2, t.d3, fraction(t.beta), t.p2_zero));
            return out;
        },
        py::arg("bound") = 19);
    m.def(
        "cases_summary",
        [](long long family_cap, const std::vector<std::string>& disable) {
            auto cs = ConstraintSet::defaults();
            for (const auto& r : disable) cs.disable(r);
            if (family_cap >= 0) cs.family_cap_k = family_cap;
            auto rep = generate_cases(cs);
            py::dict d;
            d["records"] = rep.records.size();
            d["survivors"] = rep.survivors;
            py::list sv;
            for (const auto& r : rep.records)
                if (r.survivor) sv.append(r.d_desc + " / " + r.e_desc);
            d["survivor_list"] = sv;
            d["provenance"] = rep.provenance;
            return d;
        },
        py::arg("family_cap") = 10, py::arg("disable") = std::vector<std::string>{});

    m.def("table", [](const std::string& which) {
        TableId id = which == "1"      ? TableId::one
                     : which == "1bis" ? TableId::one_bis
                     : which == "2"    ? TableId::two
                                       : throw std::invalid_argument("which must be 1, 1bis or 2");
        return render_table(reproduce_table(id));
    });
    m.def("check_table", [](const std::string& which) {
        TableId id = which == "1"      ? TableId::one
                     : which == "1bis" ? TableId::one_bis
                     : which == "2"    ? TableId::two
                                       : throw std::invalid_argument("which must be 1, 1bis or 2");
        return check_table(id);
    });
    m.def("lemma59_ok", [] { return lemma59_steps().ok; });
    m.def("r4_ok", [] { return enumerate_r4(19).ok; });

    m.attr("__version__") = "0.1.0";
}
