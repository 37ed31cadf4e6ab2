#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualgraph/forks.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/numerology.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

struct Constraint {
    std::string name;
    std::string citation;
    bool enabled = true;
};

// Named constraint set of the comb/fork search. Geometric facts enter only
// through explicitly cited, switchable rules; everything else is exact
// arithmetic. Disabling a rule is recorded in report provenance.
struct ConstraintSet {
    long long r_equals = 3;                            // Lemma 5.1
    std::vector<long long> center_b{1, 2};             // -B^2, Lemma 5.2(a)
    long long d1_max = 3, d2_max = 5, d3_max = 19;     // Lemma 5.2(d)
    long long d2_min = 3;                              // Lemma 5.2(c)
    long long a_min = 7;                               // Lemma 5.0.1
    std::vector<long long> a_excluded{18, 25, 35};     // Lemma 5.0.1 / 5.3(vi)
    long long family_cap_k = 10;
    std::map<std::string, Constraint> rules;

    static ConstraintSet defaults();
    bool enabled(const std::string& rule) const;
    void disable(const std::string& rule);
    const std::string& citation(const std::string& rule) const;
    std::string provenance() const;
    std::uint64_t hash() const;
};

struct TripleRecord {
    long long d1, d2, d3;
    Rat beta;
    bool p2_zero = false;  // beta == 0, excluded with a flag
};

// All twig determinant triples d1 <= d2 <= d3 <= bound passing beta >= 0 and
// Pi beta^2 <= 3/2 (and the d-bound/d2 filters when enabled); beta == 0
// triples are returned flagged.
std::vector<TripleRecord> enumerate_triples(long long bound,
                                            const ConstraintSet& cs = ConstraintSet::defaults());

struct CaseRecord {
    std::string d_desc;
    std::string e_desc;
    std::optional<StarBoundary> D;
    std::optional<ForkRecord> E;
    Int a;  // 0 when d(D) >= 0
    std::optional<SurfaceNumerology> num;
    std::optional<long long> family_k;
    bool survivor = false;
    std::string rule;      // empty for survivors
    std::string citation;  // citation of the eliminating rule
};

struct FamilySummary {
    std::string d_desc;
    Int a;
    ForkFamily family;
    long long kde2_at0 = 0;  // (K+D+E)^2 at k = 0; slope in k is exactly -1
    Rat residual_at0;        // residual at k = 0; slope in k is exactly -1
    std::optional<long long> zero_k;  // integer k >= 0 with residual zero
};

struct CaseReport {
    std::vector<CaseRecord> records;
    std::vector<FamilySummary> families;
    long long survivors = 0;
    std::string provenance;
};

CaseReport generate_cases(const ConstraintSet& cs = ConstraintSet::defaults());

// The r >= 4 branch: confirms that the inequality forces r = 4 with twig
// determinants (2,2,2,2) or (2,2,2,3) and reports how each subcase dies.
struct R4Report {
    std::vector<std::string> lines;
    std::vector<std::vector<long long>> admissible_tuples;  // r = 4 tuples
    bool r5_empty = false;
    bool ok = false;
};

R4Report enumerate_r4(long long bound);

// Step-by-step replay of the d1 = 3 eliminations with frozen expected
// intermediate values; any deviation is reported loudly.
struct Lemma59Report {
    std::vector<std::string> lines;
    bool ok = false;
};

Lemma59Report lemma59_steps();

}  // namespace dualgraph
