#include "dualgraph/textio.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace dualgraph {

namespace {

struct Tok {
    std::string text;
    int line, col;
};

std::vector<Tok> tokenize(const std::string& text) {
    std::vector<Tok> toks;
    int line = 1, col = 1;
    std::string cur;
    int tl = 1, tc = 1;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back({cur, tl, tc});
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            ++line;
            col = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
            ++col;
            continue;
        }
        if (cur.empty()) {
            tl = line;
            tc = col;
        }
        cur += ch;
        ++col;
    }
    flush();
    return toks;
}

long long parse_int(const Tok& t) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.col);
    }
}

// absolute-weight convention: positive values mean minus that number;
// explicitly signed values are taken literally either way
long long to_weight(const Tok& t, bool signed_weights) {
    long long v = parse_int(t);
    if (signed_weights || v < 0) return v;
    if (v == 0)
        throw ParseError("weight 0 needs the signed form (--signed or a tree document)",
                         t.line, t.col);
    return -v;
}

long long parse_assigned(const Tok& t, const std::string& key) {
    if (t.text.rfind(key + "=", 0) != 0)
        throw ParseError("expected " + key + "=<int>", t.line, t.col);
    Tok sub{t.text.substr(key.size() + 1), t.line, t.col + static_cast<int>(key.size()) + 1};
    return parse_int(sub);
}

}  // namespace

ParsedGraph parse_graph(const std::string& text, bool signed_weights) {
    auto toks = tokenize(text);
    if (toks.empty()) throw ParseError("empty document", 1, 1);
    const std::string& shape = toks[0].text;
    std::size_t i = 1;
    if (shape == "chain") {
        std::vector<long long> ws;
        for (; i < toks.size(); ++i) ws.push_back(to_weight(toks[i], signed_weights));
        return Chain(ws);
    }
    if (shape == "fork" || shape == "star") {
        if (i >= toks.size())
            throw ParseError("expected " + std::string(shape == "fork" ? "h=" : "b=") + "<int>",
                             toks[0].line, toks[0].col);
        long long hb = parse_assigned(toks[i], shape == "fork" ? "h" : "b");
        if (hb < 1) throw ParseError("h/b must be >= 1", toks[i].line, toks[i].col);
        ++i;
        std::vector<Chain> twigs;
        std::vector<long long> cur;
        bool in_twig = false;
        for (; i < toks.size(); ++i) {
            if (toks[i].text == "twig") {
                if (in_twig) twigs.push_back(Chain(cur));
                cur.clear();
                in_twig = true;
                continue;
            }
            if (!in_twig) throw ParseError("expected 'twig'", toks[i].line, toks[i].col);
            cur.push_back(to_weight(toks[i], signed_weights));
        }
        if (in_twig) twigs.push_back(Chain(cur));
        if (shape == "fork") {
            if (twigs.size() != 3)
                throw ParseError("a fork needs exactly three twigs", toks[0].line, toks[0].col);
            return Fork(-hb, {twigs[0], twigs[1], twigs[2]});
        }
        if (twigs.size() < 3)
            throw ParseError("a star needs at least three twigs", toks[0].line, toks[0].col);
        return StarBoundary(-hb, twigs);
    }
    if (shape == "tree") {
        std::vector<WeightedTree::Vertex> vs;
        std::vector<std::pair<int, int>> es;
        std::map<std::string, int> ids;
        int next = 0;
        auto vertex_id = [&](const Tok& t, bool must_exist) {
            auto it = ids.find(t.text);
            if (it != ids.end()) return it->second;
            if (must_exist) throw ParseError("unknown vertex '" + t.text + "'", t.line, t.col);
            ids[t.text] = next;
            return next++;
        };
        while (i < toks.size()) {
            const std::string& kind = toks[i].text;
            if (kind == "v") {
                if (i + 2 >= toks.size())
                    throw ParseError("v needs <id> <weight>", toks[i].line, toks[i].col);
                int id = vertex_id(toks[i + 1], false);
                vs.push_back({id, parse_int(toks[i + 2])});
                i += 3;
            } else if (kind == "e") {
                if (i + 2 >= toks.size())
                    throw ParseError("e needs <id> <id>", toks[i].line, toks[i].col);
                int a = vertex_id(toks[i + 1], false);
                int b = vertex_id(toks[i + 2], false);
                es.push_back({a, b});
                i += 3;
            } else {
                throw ParseError("expected 'v' or 'e'", toks[i].line, toks[i].col);
            }
        }
        try {
            return WeightedTree(std::move(vs), std::move(es));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("invariant violation: ") + e.what(), toks[0].line,
                             toks[0].col);
        }
    }
    throw ParseError("unknown shape '" + shape + "'", toks[0].line, toks[0].col);
}

std::string emit_graph(const Chain& c) {
    std::string s = "chain";
    for (long long w : c.weights) s += " " + std::to_string(w);
    return s + "\n";
}

std::string emit_graph(const Fork& f) {
    std::string s = "fork h=" + std::to_string(f.h());
    for (const auto& t : f.twigs) {
        s += " twig";
        for (long long w : t.weights) s += " " + std::to_string(w);
    }
    return s + "\n";
}

std::string emit_graph(const StarBoundary& st) {
    std::string s = "star b=" + std::to_string(st.b());
    for (const auto& t : st.twigs) {
        s += " twig";
        for (long long w : t.weights) s += " " + std::to_string(w);
    }
    return s + "\n";
}

std::string emit_graph(const WeightedTree& t) {
    std::ostringstream os;
    os << "tree\n";
    for (const auto& v : t.vertices()) os << "v " << v.id << " " << v.weight << "\n";
    for (const auto& [a, b] : t.edges()) os << "e " << a << " " << b << "\n";
    return os.str();
}

std::string emit_graph(const ParsedGraph& g) {
    return std::visit([](const auto& x) { return emit_graph(x); }, g);
}

WeightedTree tree_of(const ParsedGraph& g) {
    return std::visit(
        [](const auto& x) -> WeightedTree {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, WeightedTree>)
                return x;
            else
                return x.to_tree();
        },
        g);
}

}  // namespace dualgraph
