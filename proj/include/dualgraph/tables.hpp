#pragma once

#include <string>
#include <vector>

#include "dualgraph/casegen.hpp"

namespace dualgraph {

enum class TableId { one = 1, one_bis = 2, two = 3 };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Run-length pattern label, e.g. (3,2^2) for weights -3,-2,-2.
std::string pattern_label(const std::vector<long long>& weights);

// Canonical affine-in-k cell: slope 0 -> "c", slope +1 -> "k+c",
// slope -1 -> "c-k" / "-k" / "-k-c".
std::string affine_cell(long long c, int slope);

// Regenerates the candidate tables from the enumeration engine.
Table reproduce_table(TableId which);

std::string render_table(const Table& t);

// Cell-level diff of the regenerated table against the embedded golden
// fixture, including re-instantiation of family rows at k = 0, 1, 2.
// Empty result means exact agreement.
std::vector<std::string> check_table(TableId which);

// Embedded golden fixtures (tab separated, '#' comments).
const std::string& table_fixture(TableId which);

}  // namespace dualgraph
