#include "excycles/graph.hpp"

#include "excycles/common.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace excycles {

LabeledGraph::LabeledGraph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("LabeledGraph: negative vertex count");
    if (n <= 64) bits_.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (!bits_.empty()) return (bits_[u] >> v) & 1u;
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

void LabeledGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("add_edge: vertex " + std::to_string(std::max(u, v) + 1) +
                                    " out of range 1.." + std::to_string(n_));
    }
    if (u == v)
        throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u + 1) +
                                    " rejected (simple graph)");
    if (has_edge(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
    if (!bits_.empty()) {
        bits_[u] |= 1ull << v;
        bits_[v] |= 1ull << u;
    }
    ++m_;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

bool LabeledGraph::operator==(const LabeledGraph& o) const {
    return n_ == o.n_ && m_ == o.m_ && adj_ == o.adj_;
}

LabeledGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    LabeledGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// ---- Multigraph ----

int Multigraph::add_vertex(int original_label) {
    labels_.push_back(original_label);
    return n() - 1;
}

void Multigraph::add_edge(int u, int v, int mult) {
    if (u > v) std::swap(u, v);
    edges_[{u, v}] += mult;
}

int Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

int Multigraph::loop_count(int v) const { return multiplicity(v, v); }

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& [e, m] : edges_) {
        if (e.first == v && e.second == v)
            d += 2 * m;
        else if (e.first == v || e.second == v)
            d += m;
    }
    return d;
}

bool Multigraph::has_loops() const {
    for (const auto& [e, m] : edges_)
        if (e.first == e.second) return true;
    return false;
}

int Multigraph::total_edge_count() const {
    int t = 0;
    for (const auto& [e, m] : edges_) t += m;
    return t;
}

bool Multigraph::is_connected() const {
    if (empty()) return true;
    std::vector<int> seen(labels_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [e, m] : edges_) {
            int w = -1;
            if (e.first == v) w = e.second;
            else if (e.second == v) w = e.first;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n();
}

std::string Multigraph::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n() << ",\"labels\":[";
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << labels_[i] + 1;
    os << "],\"edges\":[";
    bool first = true;
    for (const auto& [e, m] : edges_) {
        if (!first) os << ",";
        first = false;
        os << "[" << labels_[e.first] + 1 << "," << labels_[e.second] + 1 << "," << m << "]";
    }
    os << "]}";
    return os.str();
}

// ---- serialization ----

LabeledGraph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    LabeledGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated at edge " + std::to_string(i + 1));
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

std::string write_edge_list(const LabeledGraph& g) {
    std::ostringstream os;
    auto e = g.edges();
    os << g.n() << " " << e.size() << "\n";
    for (auto [u, v] : e) os << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

std::uint64_t graph_to_mask(const LabeledGraph& g) {
    if (g.n() > 11) throw SizeGuardError("graph_to_mask: mask format limited to n <= 11");
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= 1ull << (v * (v - 1) / 2 + u);
    return mask;
}

LabeledGraph mask_to_graph(int n, std::uint64_t mask) {
    if (n > 11) throw SizeGuardError("mask_to_graph: mask format limited to n <= 11");
    if (n < 0) throw std::invalid_argument("mask_to_graph: negative n");
    int pairs = n * (n - 1) / 2;
    if (pairs < 64 && (mask >> pairs)) throw std::invalid_argument("mask_to_graph: mask has bits past the last pair");
    LabeledGraph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((mask >> idx) & 1u) g.add_edge(u, v);
    return g;
}

// ---- structural primitives ----

bool is_forest(const LabeledGraph& g) {
    // union-find; a repeated root means a cycle
    std::vector<int> parent(g.n());
    for (int i = 0; i < g.n(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                int ru = find(u), rv = find(v);
                if (ru == rv) return false;
                parent[ru] = rv;
            }
    return true;
}

std::vector<std::vector<int>> components(const LabeledGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<int> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

BigFrag big_frag(const LabeledGraph& g) {
    auto comps = components(g);
    BigFrag r;
    if (comps.empty()) return r;
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i; // ties keep the earlier (lexicographically first) one
    r.big = comps[best];
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != best) r.frag.insert(r.frag.end(), comps[i].begin(), comps[i].end());
    std::sort(r.frag.begin(), r.frag.end());
    return r;
}

std::vector<int> two_core_vertices(const LabeledGraph& g) {
    std::vector<int> deg(g.n());
    std::vector<int> alive(g.n(), 1);
    std::vector<int> queue;
    for (int v = 0; v < g.n(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (int w : g.neighbors(v))
            if (alive[w] && --deg[w] == 1) queue.push_back(w);
    }
    std::vector<int> core;
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) core.push_back(v);
    return core;
}

LabeledGraph two_core(const LabeledGraph& g) {
    auto core = two_core_vertices(g);
    std::vector<char> in(g.n(), 0);
    for (int v : core) in[v] = 1;
    LabeledGraph h(g.n());
    for (int u : core)
        for (int v : g.neighbors(u))
            if (u < v && in[v]) h.add_edge(u, v);
    return h;
}

Multigraph topological_core(const LabeledGraph& g) {
    auto core = two_core_vertices(g);
    Multigraph out;
    if (core.empty()) return out;
    std::vector<char> in(g.n(), 0);
    for (int v : core) in[v] = 1;

    // components of the core, in least-vertex order
    std::vector<int> comp_id(g.n(), -1);
    std::vector<std::vector<int>> comps;
    for (int s : core) {
        if (comp_id[s] >= 0) continue;
        std::vector<int> comp, stack = {s};
        comp_id[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in[w] && comp_id[w] < 0) {
                    comp_id[w] = comp_id[s];
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    for (const auto& comp : comps) {
        bool pure_cycle = true;
        for (int v : comp) {
            int d = 0;
            for (int w : g.neighbors(v))
                if (in[w]) ++d;
            if (d != 2) {
                pure_cycle = false;
                break;
            }
        }
        if (pure_cycle) {
            int v = out.add_vertex(comp.front());
            out.add_edge(v, v, 1);
            continue;
        }
        // local multigraph on the component, suppress least degree-2 vertex first
        std::map<int, std::map<int, int>> adj; // vertex -> (neighbor -> multiplicity); loop stored once under (v,v)
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (in[w] && comp_id[w] == comp_id[v] && v < w) {
                    adj[v][w] += 1;
                    adj[w][v] += 1;
                }
        auto mdeg = [&](int v) {
            int d = 0;
            for (auto& [w, m] : adj[v]) d += (w == v) ? 2 * m : m;
            return d;
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = adj.begin(); it != adj.end(); ++it) {
                int v = it->first;
                if (mdeg(v) != 2 || it->second.count(v)) continue; // keep loop vertices
                // v has exactly two incident edge endpoints a, b (possibly equal)
                std::vector<int> ends;
                for (auto& [w, m] : it->second)
                    for (int i = 0; i < m; ++i) ends.push_back(w);
                int a = ends[0], b = ends[1];
                for (auto& [w, m] : adj[v]) {
                    adj[w].erase(v);
                    if (adj[w].empty() && w != v) adj.erase(w);
                }
                adj.erase(v);
                adj[a][b] += 1;
                if (a != b) adj[b][a] += 1;
                changed = true;
                break;
            }
        }
        std::vector<int> remaining;
        for (auto& [v, _] : adj) remaining.push_back(v);
        std::sort(remaining.begin(), remaining.end());
        std::map<int, int> idx;
        for (int v : remaining) idx[v] = out.add_vertex(v);
        for (auto& [v, nb] : adj)
            for (auto& [w, m] : nb)
                if (v <= w) out.add_edge(idx[v], idx[w], m);
    }
    return out;
}

std::vector<std::pair<int, int>> spikes(const LabeledGraph& g) {
    auto comps = components(g);
    std::vector<int> comp_of(g.n(), -1);
    std::vector<char> is_p3(comps.size(), 0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
        if (comps[i].size() == 3) {
            int leaves = 0, mids = 0;
            for (int v : comps[i]) {
                if (g.degree(v) == 1) ++leaves;
                if (g.degree(v) == 2) ++mids;
            }
            if (leaves == 2 && mids == 1) is_p3[i] = 1;
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n(); ++u) {
        if (g.degree(u) != 1) continue;
        int v = g.neighbors(u)[0];
        if (g.degree(v) != 2) continue;
        if (is_p3[comp_of[u]]) continue;
        out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::uint64_t> chordless_cycle_masks(const LabeledGraph& g) {
    if (g.n() > 16) throw SizeGuardError("chordless_cycles: exact path limited to n <= 16, got n = " + std::to_string(g.n()));
    const int n = g.n();
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < n; ++v) rows[v] = g.has_bits() ? g.row(v) : 0;
    if (!g.has_bits())
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) rows[u] |= 1ull << v;

    std::vector<std::uint64_t> out;
    std::vector<int> path;
    // grow induced paths s=p0,p1,...,pk with every vertex > s; close on a
    // neighbor of s; canonical direction p1 < closing vertex
    auto dfs = [&](auto&& self, std::uint64_t path_mask, std::uint64_t interior_adj, int last) -> void {
        std::uint64_t cand = rows[last] & ~path_mask;
        cand &= ~((1ull << (path[0] + 1)) - 1); // only vertices > s
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (rows[w] & interior_adj) continue; // chord to an interior vertex
            bool closes = (rows[w] >> path[0]) & 1u;
            if (closes) {
                if (path.size() >= 2 && path[1] < w) {
                    out.push_back(path_mask | (1ull << w));
                }
                continue; // cannot extend past a neighbor of s
            }
            path.push_back(w);
            self(self, path_mask | (1ull << w), interior_adj | (path.size() > 2 ? (1ull << last) : 0ull), w);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::uint64_t first = rows[s] & ~((1ull << (s + 1)) - 1);
        while (first) {
            int v = std::countr_zero(first);
            first &= first - 1;
            path.push_back(v);
            dfs(dfs, (1ull << s) | (1ull << v), 0ull, v);
            path.pop_back();
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<int>> chordless_cycles(const LabeledGraph& g) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t m : chordless_cycle_masks(g)) {
        std::vector<int> vs;
        while (m) {
            vs.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        out.push_back(std::move(vs));
    }
    return out;
}

} // namespace excycles
