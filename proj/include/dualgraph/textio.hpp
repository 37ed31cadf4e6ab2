#pragma once

#include <string>
#include <variant>

#include "dualgraph/graph.hpp"

namespace dualgraph {

// Line-oriented graph documents:
//   chain W+            a linear twig
//   fork h=H twig W+ twig W+ twig W+
//   star b=B twig W+ ...        (at least three twigs)
//   tree\n (v ID W | e ID ID)+  one item per line
// For chain/fork/star the weights W are absolute values (2 means
// self-intersection -2) unless signed_weights is set; tree documents always
// take literal signed weights. Emission always prints signed weights.
struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), line(line_), column(col_) {}
};

using ParsedGraph = std::variant<Chain, Fork, StarBoundary, WeightedTree>;

ParsedGraph parse_graph(const std::string& text, bool signed_weights = false);

std::string emit_graph(const Chain& c);
std::string emit_graph(const Fork& f);
std::string emit_graph(const StarBoundary& s);
std::string emit_graph(const WeightedTree& t);
std::string emit_graph(const ParsedGraph& g);

WeightedTree tree_of(const ParsedGraph& g);

}  // namespace dualgraph
