#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace excycles {

/// Simple labeled graph. Vertices are 0-based in the API; every serialized
/// form (edge lists, JSON, masks) uses 1-based labels. When n <= 64 the
/// adjacency is mirrored into bit rows for the exact solvers.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n);

    int n() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v); // ignores duplicates; rejects loops/out-of-range
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::vector<std::pair<int, int>> edges() const; // u < v, sorted

    bool has_bits() const { return !bits_.empty(); }
    std::uint64_t row(int v) const { return bits_[v]; }

    bool operator==(const LabeledGraph& o) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_; // only when n_ <= 64
};

/// Small multigraph: codomain of topological-core suppression. Vertices are
/// compact 0..n-1; `label(i)` remembers which original vertex each one came
/// from. Loops have multiplicity; a loop adds 2 to the degree.
class Multigraph {
public:
    Multigraph() = default;

    int n() const { return static_cast<int>(labels_.size()); }
    int label(int v) const { return labels_[v]; }
    int add_vertex(int original_label);
    void add_edge(int u, int v, int mult = 1); // u == v is a loop
    int multiplicity(int u, int v) const;
    int loop_count(int v) const;
    int degree(int v) const; // loop counts 2
    bool has_loops() const;
    int total_edge_count() const; // with multiplicity, loops once each
    bool is_connected() const;
    bool empty() const { return labels_.empty(); }

    const std::map<std::pair<int, int>, int>& edge_map() const { return edges_; }

    std::string to_json() const;

private:
    std::vector<int> labels_;
    std::map<std::pair<int, int>, int> edges_; // key (min,max), value multiplicity >= 1
};

// ---- construction & serialization ----

/// Build a graph from 0-based endpoint pairs; duplicate edges collapse,
/// loops and out-of-range endpoints are rejected with a diagnostic.
LabeledGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Edge-list text format: "n m" header, then one "u v" pair per line, 1-based.
LabeledGraph read_edge_list(std::istream& in);
std::string write_edge_list(const LabeledGraph& g);

/// Census mask codec: bit i of the mask is the i-th vertex pair in
/// colexicographic order ((1,2),(1,3),(2,3),(1,4),...). Only defined for
/// n <= 11 so the mask fits in 64 bits.
std::uint64_t graph_to_mask(const LabeledGraph& g);
LabeledGraph mask_to_graph(int n, std::uint64_t mask);

// ---- structural primitives ----

bool is_forest(const LabeledGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const LabeledGraph& g);

struct BigFrag {
    std::vector<int> big;  // lexicographically first largest component
    std::vector<int> frag; // everything else
};
BigFrag big_frag(const LabeledGraph& g);

/// Maximal induced subgraph of minimum degree >= 2, returned on the same
/// vertex set (non-core vertices become isolated). Empty core <=> forest.
LabeledGraph two_core(const LabeledGraph& g);
std::vector<int> two_core_vertices(const LabeledGraph& g);

/// 2-core with all degree-2 vertices suppressed. A component of the core
/// that is a bare cycle collapses to one vertex carrying one loop (labeled
/// by the cycle's least vertex); otherwise suppression runs least-vertex
/// first until every remaining vertex has degree >= 3.
Multigraph topological_core(const LabeledGraph& g);

/// Adjacent (leaf, degree-2) pairs not inside a 3-vertex path component.
/// Distinct spikes never share a vertex.
std::vector<std::pair<int, int>> spikes(const LabeledGraph& g);

/// Vertex sets of induced cycles, deduplicated, in a fixed deterministic
/// order. Exact-search helper, guarded to n <= 16.
std::vector<std::vector<int>> chordless_cycles(const LabeledGraph& g);
/// Same cycles as bit masks (internal workhorse for the solvers).
std::vector<std::uint64_t> chordless_cycle_masks(const LabeledGraph& g);

} // namespace excycles
