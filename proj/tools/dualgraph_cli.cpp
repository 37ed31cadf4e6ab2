// dualgraph: exact invariants of SNC-divisor dual graphs and the comb/fork
// candidate elimination scan.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dualgraph/casegen.hpp"
#include "dualgraph/exactdet.hpp"
#include "dualgraph/forks.hpp"
#include "dualgraph/hj.hpp"
#include "dualgraph/numerology.hpp"
#include "dualgraph/peeling.hpp"
#include "dualgraph/tables.hpp"
#include "dualgraph/textio.hpp"

namespace dg = dualgraph;

namespace {

constexpr const char* kVersion = "0.1.0";

int usage(std::ostream& os = std::cerr) {
    os << "usage: dualgraph <command> [args]\n"
          "  det <file|->                    determinant of the dual graph\n"
          "  classify <file|->               quotient type of a fork\n"
          "  bark <file|->                   bark coefficients and square (chain or fork)\n"
          "  peel <file|->                   peeling profile of a star boundary\n"
          "  assemble <star-file> <fork-file>  full numerology of a (D,E) pair\n"
          "  enumerate-forks --a N [--cap N] exceptional forks with determinant N\n"
          "  triples [--bound N]             admissible twig determinant triples\n"
          "  cases [--disable RULE]... [--family-cap N]  run the elimination scan\n"
          "  tables --which 1|1bis|2 [--check]  regenerate the candidate tables\n"
          "  lemma59                         replay the d1=3 step-by-step eliminations\n"
          "  r4                              replay the r>=4 elimination\n"
          "options: --signed  read literal (negative) weights in graph documents\n";
    return 2;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void provenance(std::ostream& os, int argc, char** argv, const dg::ConstraintSet* cs = nullptr) {
    os << "# dualgraph " << kVersion << "\n# command:";
    for (int i = 0; i < argc; ++i) os << " " << argv[i];
    os << "\n";
    if (cs) {
        os << "# constraints: " << std::hex << cs->hash() << std::dec << "\n";
        os << "# " << cs->provenance() << "\n";
    }
}

struct Args {
    std::vector<std::string> positional;
    std::vector<std::string> disabled;
    std::string which;
    long long a = 0, cap = 30, bound = 19, family_cap = -1;
    bool check = false, signed_weights = false;
};

bool parse_args(int argc, char** argv, Args& out) {
    for (int i = 2; i < argc; ++i) {
        std::string s = argv[i];
        auto next = [&]() -> const char* {
            if (i + 1 >= argc) return nullptr;
            return argv[++i];
        };
        if (s == "--signed") {
            out.signed_weights = true;
        } else if (s == "--check") {
            out.check = true;
        } else if (s == "--a") {
            const char* v = next();
            if (!v) return false;
            out.a = std::stoll(v);
        } else if (s == "--cap") {
            const char* v = next();
            if (!v) return false;
            out.cap = std::stoll(v);
        } else if (s == "--bound") {
            const char* v = next();
            if (!v) return false;
            out.bound = std::stoll(v);
        } else if (s == "--family-cap") {
            const char* v = next();
            if (!v) return false;
            out.family_cap = std::stoll(v);
        } else if (s == "--which") {
            const char* v = next();
            if (!v) return false;
            out.which = v;
        } else if (s == "--disable") {
            const char* v = next();
            if (!v) return false;
            out.disabled.push_back(v);
        } else if (!s.empty() && s[0] == '-' && s != "-") {
            return false;
        } else {
            out.positional.push_back(s);
        }
    }
    return true;
}

std::string chain_str(const dg::Chain& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.weights.size(); ++i)
        s += (i ? "," : "") + std::to_string(c.weights[i]);
    return s + "]";
}

int cmd_det(const Args& a, int argc, char** argv) {
    if (a.positional.size() != 1) return usage();
    auto g = dg::parse_graph(read_input(a.positional[0]), a.signed_weights);
    provenance(std::cout, argc, argv);
    std::cout << dg::det(dg::tree_of(g)).str() << "\n";
    return 0;
}

int cmd_classify(const Args& a, int argc, char** argv) {
    if (a.positional.size() != 1) return usage();
    auto g = dg::parse_graph(read_input(a.positional[0]), a.signed_weights);
    provenance(std::cout, argc, argv);
    if (!std::holds_alternative<dg::Fork>(g)) {
        std::cout << "not-a-fork\n";
        return 0;
    }
    auto type = dg::classify_fork(std::get<dg::Fork>(g));
    if (!type) {
        std::cout << "not-quotient\n";
        return 0;
    }
    std::cout << "(" << (*type)[0] << "," << (*type)[1] << "," << (*type)[2] << ")\n";
    return 0;
}

int cmd_bark(const Args& a, int argc, char** argv) {
    if (a.positional.size() != 1) return usage();
    auto g = dg::parse_graph(read_input(a.positional[0]), a.signed_weights);
    provenance(std::cout, argc, argv);
    dg::BarkData bd;
    if (std::holds_alternative<dg::Chain>(g))
        bd = dg::bark_twig(std::get<dg::Chain>(g));
    else if (std::holds_alternative<dg::Fork>(g))
        bd = dg::bark_fork(std::get<dg::Fork>(g));
    else {
        std::cerr << "bark: expected a chain or fork document\n";
        return 2;
    }
    std::cout << "coefficients";
    for (const auto& c : bd.coefficients) std::cout << "\t" << dg::to_string(c);
    std::cout << "\nsquare\t" << dg::to_string(bd.square) << "\n";
    return 0;
}

int cmd_peel(const Args& a, int argc, char** argv) {
    if (a.positional.size() != 1) return usage();
    auto g = dg::parse_graph(read_input(a.positional[0]), a.signed_weights);
    if (!std::holds_alternative<dg::StarBoundary>(g)) {
        std::cerr << "peel: expected a star document\n";
        return 2;
    }
    const auto& s = std::get<dg::StarBoundary>(g);
    auto pp = dg::peeling_profile(s);
    provenance(std::cout, argc, argv);
    std::cout << "a\t" << pp.a.str() << "\nPi\t" << pp.Pi.str() << "\nbeta\t"
              << dg::to_string(pp.beta) << "\nP^2\t" << dg::to_string(pp.p_squared) << "\n";
    for (std::size_t i = 0; i < pp.capacities.size(); ++i)
        std::cout << "e_" << (i + 1) << "\t" << dg::to_string(pp.capacities[i]) << "\n";
    dg::Rat bkD = 0;
    for (const auto& tw : s.twigs) bkD += dg::bark_twig(tw).square;
    std::cout << "Bk(D)^2\t" << dg::to_string(bkD) << "\n";
    return 0;
}

int cmd_assemble(const Args& a, int argc, char** argv) {
    if (a.positional.size() != 2) return usage();
    auto gs = dg::parse_graph(read_input(a.positional[0]), a.signed_weights);
    auto gf = dg::parse_graph(read_input(a.positional[1]), a.signed_weights);
    if (!std::holds_alternative<dg::StarBoundary>(gs) || !std::holds_alternative<dg::Fork>(gf)) {
        std::cerr << "assemble: expected a star document and a fork document\n";
        return 2;
    }
    const auto& D = std::get<dg::StarBoundary>(gs);
    const auto& f = std::get<dg::Fork>(gf);
    auto rec = dg::make_record(f, dg::det(f.to_tree()));
    auto n = dg::assemble(D, rec);
    provenance(std::cout, argc, argv);
    std::cout << "a\t" << rec.a.str() << "\n#D\t" << n.n_D << "\n#E\t" << n.n_E << "\nb2\t"
              << n.b2 << "\nK^2\t" << n.K2 << "\nK.D\t" << n.KD << "\nK.E\t" << n.KE << "\nD^2\t"
              << n.D2 << "\nE^2\t" << n.E2 << "\n(K+D+E)^2\t" << n.KDE2 << "\nP^2\t"
              << dg::to_string(n.P2) << "\nBk(D)^2\t" << dg::to_string(n.bkD2) << "\nBk(E)^2\t"
              << dg::to_string(n.bkE2) << "\nresidual\t" << dg::to_string(n.residual) << "\n";
    return 0;
}

int cmd_enumerate_forks(const Args& a, int argc, char** argv) {
    if (a.a < 1) return usage();
    auto recs = dg::enumerate_forks(dg::Int(a.a), a.cap);
    provenance(std::cout, argc, argv);
    std::cout << "type\th\ttwigs\t#E\tK.E\tBk(E)^2\tfamily_k\n";
    for (const auto& r : recs) {
        std::cout << "(" << r.type[0] << "," << r.type[1] << "," << r.type[2] << ")\t" << r.h
                  << "\t";
        for (int i = 0; i < 3; ++i) std::cout << (i ? " " : "") << chain_str(r.fork.twigs[i]);
        std::cout << "\t" << r.size << "\t" << r.k_degree << "\t" << dg::to_string(r.bark_square)
                  << "\t" << (r.family_k ? std::to_string(*r.family_k) : std::string("-"))
                  << "\n";
    }
    return 0;
}

int cmd_triples(const Args& a, int argc, char** argv) {
    auto cs = dg::ConstraintSet::defaults();
    auto ts = dg::enumerate_triples(a.bound, cs);
    provenance(std::cout, argc, argv, &cs);
    std::cout << "d1\td2\td3\tbeta\tP2_zero\n";
    for (const auto& t : ts)
        std::cout << t.d1 << "\t" << t.d2 << "\t" << t.d3 << "\t" << dg::to_string(t.beta) << "\t"
                  << (t.p2_zero ? "yes" : "no") << "\n";
    return 0;
}

int cmd_cases(const Args& a, int argc, char** argv) {
    auto cs = dg::ConstraintSet::defaults();
    for (const auto& r : a.disabled) cs.disable(r);
    if (a.family_cap >= 0) cs.family_cap_k = a.family_cap;
    auto rep = dg::generate_cases(cs);
    provenance(std::cout, argc, argv, &cs);
    std::cout << "D\tE\ta\t#E\tb2\t(K+D+E)^2\tP^2\tBk(D)^2\tBk(E)^2\tresidual\tverdict\tcitation\n";
    for (const auto& rec : rep.records) {
        std::cout << rec.d_desc << "\t" << (rec.e_desc.empty() ? "-" : rec.e_desc) << "\t"
                  << (rec.a == 0 ? std::string("-") : rec.a.str());
        if (rec.num) {
            const auto& n = *rec.num;
            std::cout << "\t" << n.n_E << "\t" << n.b2 << "\t" << n.KDE2 << "\t"
                      << dg::to_string(n.P2) << "\t" << dg::to_string(n.bkD2) << "\t"
                      << dg::to_string(n.bkE2) << "\t" << dg::to_string(n.residual);
        } else {
            std::cout << "\t-\t-\t-\t-\t-\t-\t-";
        }
        std::cout << "\t" << (rec.survivor ? "SURVIVOR" : "eliminated:" + rec.rule) << "\t"
                  << rec.citation << "\n";
    }
    for (const auto& fs : rep.families) {
        std::cout << "# family " << fs.d_desc << " (2,2,n) q0=" << fs.family.q0.str()
                  << " base=" << chain_str(fs.family.base) << ": (K+D+E)^2 = "
                  << dg::affine_cell(fs.kde2_at0, -1) << ", residual(k) = "
                  << dg::to_string(fs.residual_at0) << " - k";
        if (fs.zero_k) std::cout << "  [residual vanishes at k=" << *fs.zero_k << "]";
        std::cout << "\n";
    }
    std::cout << "SURVIVORS: " << rep.survivors << "\n";
    return 0;
}

int cmd_tables(const Args& a, int argc, char** argv) {
    dg::TableId id;
    if (a.which == "1")
        id = dg::TableId::one;
    else if (a.which == "1bis")
        id = dg::TableId::one_bis;
    else if (a.which == "2")
        id = dg::TableId::two;
    else
        return usage();
    if (a.check) {
        auto diffs = dg::check_table(id);
        provenance(std::cout, argc, argv);
        if (diffs.empty()) {
            std::cout << "table " << a.which << ": "
                      << dg::reproduce_table(id).rows.size() << " rows verified\n";
            return 0;
        }
        for (const auto& d : diffs) std::cout << "DIFF " << d << "\n";
        return 1;
    }
    provenance(std::cout, argc, argv);
    std::cout << dg::render_table(dg::reproduce_table(id));
    return 0;
}

int cmd_lemma59(const Args&, int argc, char** argv) {
    auto rep = dg::lemma59_steps();
    provenance(std::cout, argc, argv);
    for (const auto& l : rep.lines) std::cout << l << "\n";
    std::cout << (rep.ok ? "ALL STEPS VERIFIED\n" : "DEVIATIONS FOUND\n");
    return rep.ok ? 0 : 1;
}

int cmd_r4(const Args& a, int argc, char** argv) {
    auto rep = dg::enumerate_r4(a.bound);
    provenance(std::cout, argc, argv);
    for (const auto& l : rep.lines) std::cout << l << "\n";
    std::cout << (rep.ok ? "R>=4 ELIMINATION CONFIRMED\n" : "DEVIATIONS FOUND\n");
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage();
    std::string cmd = argv[1];
    Args args;
    if (!parse_args(argc, argv, args)) return usage();
    try {
        if (cmd == "det") return cmd_det(args, argc, argv);
        if (cmd == "classify") return cmd_classify(args, argc, argv);
        if (cmd == "bark") return cmd_bark(args, argc, argv);
        if (cmd == "peel") return cmd_peel(args, argc, argv);
        if (cmd == "assemble") return cmd_assemble(args, argc, argv);
        if (cmd == "enumerate-forks") return cmd_enumerate_forks(args, argc, argv);
        if (cmd == "triples") return cmd_triples(args, argc, argv);
        if (cmd == "cases") return cmd_cases(args, argc, argv);
        if (cmd == "tables") return cmd_tables(args, argc, argv);
        if (cmd == "lemma59") return cmd_lemma59(args, argc, argv);
        if (cmd == "r4") return cmd_r4(args, argc, argv);
    } catch (const dg::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return usage();
}
