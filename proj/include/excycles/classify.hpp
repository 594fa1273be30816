#pragma once

#include "excycles/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace excycles {

enum class Ex2CClass { APEX_FOREST, WHEEL, B_TYPE, K_TYPE };

std::string to_string(Ex2CClass c);

/// Classification of a graph against the structure theorem for graphs with
/// no two disjoint cycles: membership holds exactly when at least one of the
/// four labels applies. Labels are a set because the classes overlap.
struct Ex2CLabel {
    bool member = false;
    std::set<Ex2CClass> labels;
    std::optional<int> apex_witness;        // deleted vertex, when APEX_FOREST
    std::optional<Multigraph> core_witness; // topological core, when a core label applies
    std::string to_json() const;
};

Ex2CLabel classify_ex2c(const LabeledGraph& g);

/// Pattern matchers on a suppressed core, exposed for the census label counts.
bool core_matches_wheel(const Multigraph& m);
bool core_matches_btype(const Multigraph& m);
bool core_matches_ktype(const Multigraph& m);

/// Number of vertices that can serve as the wheel hub (the rest being a
/// simple rim cycle with arbitrary spoke multiplicities). The wheel
/// generating function counts a graph once per hub reading of its core, so
/// the exact census/series identity needs this weight; it is 1 for every
/// wheel on five or more core vertices and exceeds 1 only for rim-3 cores
/// such as K4.
int wheel_hub_count(const Multigraph& m);

/// Exhaustive agreement check between the classifier and the cycle-packing
/// definition, over all 2^C(n,2) labeled graphs on n <= 7 vertices.
struct OracleReport {
    int n = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::uint64_t> first_mismatch_masks; // at most 16 kept
};

OracleReport ex2c_oracle_check(int n, int workers = 1);

} // namespace excycles
