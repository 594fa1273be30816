#include "excycles/classify.hpp"

#include "excycles/common.hpp"
#include "excycles/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace excycles {

std::string to_string(Ex2CClass c) {
    switch (c) {
        case Ex2CClass::APEX_FOREST: return "APEX_FOREST";
        case Ex2CClass::WHEEL: return "WHEEL";
        case Ex2CClass::B_TYPE: return "B_TYPE";
        case Ex2CClass::K_TYPE: return "K_TYPE";
    }
    return "?";
}

bool core_matches_ktype(const Multigraph& m) {
    // on 5 vertices, all simple degrees 4 forces K5
    if (m.n() != 5 || m.has_loops()) return false;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (m.multiplicity(u, v) != 1) return false;
    return true;
}

int wheel_hub_count(const Multigraph& m) {
    // hub + simple rim cycle of >= 3 vertices; every rim vertex joined to the
    // hub by >= 1 parallel spokes; no loops anywhere, no other edges
    const int n = m.n();
    if (n < 4 || m.has_loops() || !m.is_connected()) return 0;
    int hubs = 0;
    for (int h = 0; h < n; ++h) {
        bool ok = true;
        int rim = n - 1;
        for (int v = 0; v < n && ok; ++v) {
            if (v == h) continue;
            if (m.multiplicity(v, h) < 1) ok = false;
            int rim_deg = 0;
            for (int w = 0; w < n && ok; ++w) {
                if (w == h || w == v) continue;
                int mult = m.multiplicity(v, w);
                if (mult > 1) ok = false; // rim must stay simple
                rim_deg += mult;
            }
            if (rim_deg != 2) ok = false;
        }
        if (!ok) continue;
        // rim must be one cycle, not several: walk it
        std::vector<int> rim_vertices;
        for (int v = 0; v < n; ++v)
            if (v != h) rim_vertices.push_back(v);
        std::vector<char> seen(n, 0);
        int start = rim_vertices.front(), count = 0, prev = -1, cur = start;
        while (true) {
            seen[cur] = 1;
            ++count;
            int next = -1;
            for (int w : rim_vertices)
                if (w != cur && w != prev && m.multiplicity(cur, w) == 1 && !seen[w]) {
                    next = w;
                    break;
                }
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        if (count == rim) ++hubs;
    }
    return hubs;
}

bool core_matches_wheel(const Multigraph& m) { return wheel_hub_count(m) > 0; }

bool core_matches_btype(const Multigraph& m) {
    const int n = m.n();
    if (n == 0 || !m.is_connected()) return false;
    if (m.has_loops()) {
        // a bare cycle suppresses to one vertex with a single loop, which is
        // the triangle form of the three-left-vertices class
        return n == 1 && m.loop_count(0) == 1 && m.total_edge_count() == 1;
    }
    if (n == 1) return false;
    if (n == 2) {
        // theta: exactly three parallel edges (the suppression of K_{3,2})
        return m.multiplicity(0, 1) == 3 && m.total_edge_count() == 3;
    }
    if (n == 3) return true; // loopless connected multigraph on the left part itself
    // choose the left part L of size 3; everything outside must have degree
    // exactly 3 with one edge to each of the three L-vertices
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                bool ok = true;
                for (int v = 0; v < n && ok; ++v) {
                    if (v == a || v == b || v == c) continue;
                    if (m.multiplicity(v, a) != 1 || m.multiplicity(v, b) != 1 ||
                        m.multiplicity(v, c) != 1)
                        ok = false;
                    for (int w = 0; w < n && ok; ++w) {
                        if (w == a || w == b || w == c || w == v) continue;
                        if (m.multiplicity(v, w) != 0) ok = false;
                    }
                }
                if (ok) return true;
            }
    return false;
}

Ex2CLabel classify_ex2c(const LabeledGraph& g) {
    Ex2CLabel out;
    // apex test: some single deletion leaves a forest (a forest qualifies
    // with any deletion; the empty graph trivially belongs)
    if (g.n() == 0 || is_forest(g)) {
        out.labels.insert(Ex2CClass::APEX_FOREST);
        if (g.n() > 0) out.apex_witness = 0;
    } else {
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> parent(g.n());
            for (int i = 0; i < g.n(); ++i) parent[i] = i;
            auto find = [&](int x) {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            };
            bool forest = true;
            for (int a = 0; a < g.n() && forest; ++a) {
                if (a == v) continue;
                for (int b : g.neighbors(a)) {
                    if (b == v || b <= a) continue;
                    int ra = find(a), rb = find(b);
                    if (ra == rb) {
                        forest = false;
                        break;
                    }
                    parent[ra] = rb;
                }
            }
            if (forest) {
                out.labels.insert(Ex2CClass::APEX_FOREST);
                out.apex_witness = v;
                break;
            }
        }
    }

    Multigraph core = topological_core(g);
    if (!core.empty()) {
        bool any = false;
        if (core_matches_ktype(core)) {
            out.labels.insert(Ex2CClass::K_TYPE);
            any = true;
        }
        if (core_matches_wheel(core)) {
            out.labels.insert(Ex2CClass::WHEEL);
            any = true;
        }
        if (core_matches_btype(core)) {
            out.labels.insert(Ex2CClass::B_TYPE);
            any = true;
        }
        if (any) out.core_witness = core;
    }
    out.member = !out.labels.empty();
    return out;
}

std::string Ex2CLabel::to_json() const {
    std::ostringstream os;
    os << "{\"member\":" << (member ? "true" : "false") << ",\"labels\":[";
    bool first = true;
    for (auto c : labels) {
        os << (first ? "" : ",") << "\"" << to_string(c) << "\"";
        first = false;
    }
    os << "]";
    if (apex_witness) os << ",\"witness\":{\"type\":\"apex\",\"vertex\":" << *apex_witness + 1 << "}";
    else if (core_witness) os << ",\"witness\":{\"type\":\"core\",\"multigraph\":" << core_witness->to_json() << "}";
    else os << ",\"witness\":null";
    os << "}";
    return os.str();
}

namespace {

bool has_two_disjoint_cycle_masks(const std::vector<std::uint64_t>& cycles) {
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (!(cycles[i] & cycles[j])) return true;
    return false;
}

} // namespace

OracleReport ex2c_oracle_check(int n, int workers) {
    if (n < 1 || n > 7) throw SizeGuardError("ex2c_oracle_check: n must be between 1 and 7");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << pairs;
    OracleReport rep;
    rep.n = n;
    rep.graphs_checked = total;

    int t = std::max(1, workers);
    std::vector<std::uint64_t> bad_count(t, 0);
    std::vector<std::vector<std::uint64_t>> bad_masks(t);
    auto work = [&](int ti) {
        std::uint64_t lo = total * ti / t, hi = total * (ti + 1) / t;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            LabeledGraph g = mask_to_graph(n, mask);
            bool member_def = !has_two_disjoint_cycle_masks(chordless_cycle_masks(g));
            bool member_cls = classify_ex2c(g).member;
            if (member_def != member_cls) {
                ++bad_count[ti];
                if (bad_masks[ti].size() < 16) bad_masks[ti].push_back(mask);
            }
        }
    };
    if (t == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) pool.emplace_back(work, i);
        for (auto& th : pool) th.join();
    }
    for (int i = 0; i < t; ++i) {
        rep.mismatches += bad_count[i];
        for (auto m : bad_masks[i])
            if (rep.first_mismatch_masks.size() < 16) rep.first_mismatch_masks.push_back(m);
    }
    return rep;
}

} // namespace excycles
