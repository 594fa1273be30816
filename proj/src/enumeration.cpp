#include "excycles/enumeration.hpp"

#include "excycles/classify.hpp"
#include "excycles/common.hpp"
#include "excycles/detail/bits.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace excycles {

BigInt tree_count(int n) {
    if (n <= 0) throw std::invalid_argument("tree_count: n must be >= 1");
    if (n <= 2) return 1;
    return BigInt::power(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n - 2));
}

namespace {

std::mutex count_mutex;

const BigInt& forest_count_locked(int n, std::vector<BigInt>& cache) {
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size()); // next value to fill
        if (m == 0) {
            cache.emplace_back(1);
            continue;
        }
        BigInt total;
        BigInt binom = 1; // C(m-1, s-1) maintained as s runs 1..m
        for (int s = 1; s <= m; ++s) {
            total += binom * tree_count(s) * cache[m - s];
            if (s < m) {
                binom.mul_small(static_cast<std::uint64_t>(m - s));
                binom.divexact_small(static_cast<std::uint64_t>(s));
            }
        }
        cache.push_back(std::move(total));
    }
    return cache[n];
}

} // namespace

BigInt forest_count(int n) {
    if (n < 0) throw std::invalid_argument("forest_count: n must be >= 0");
    static std::vector<BigInt> cache;
    std::lock_guard<std::mutex> lock(count_mutex);
    return forest_count_locked(n, cache);
}

BigInt forest_count_by_components(int n, int j) {
    if (n < 0) throw std::invalid_argument("forest_count_by_components: n must be >= 0");
    if (j < 0 || j > n) throw std::invalid_argument("forest_count_by_components: need 0 <= j <= n");
    static std::vector<std::vector<BigInt>> cache; // cache[n][j]
    std::lock_guard<std::mutex> lock(count_mutex);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::vector<BigInt> row(m + 1);
        if (m == 0) {
            row[0] = 1;
        } else {
            for (int cj = 1; cj <= m; ++cj) {
                BigInt total;
                BigInt binom = 1;
                for (int s = 1; s <= m; ++s) {
                    if (cj - 1 <= m - s) total += binom * tree_count(s) * cache[m - s][cj - 1];
                    if (s < m) {
                        binom.mul_small(static_cast<std::uint64_t>(m - s));
                        binom.divexact_small(static_cast<std::uint64_t>(s));
                    }
                }
                row[cj] = std::move(total);
            }
        }
        cache.push_back(std::move(row));
    }
    return cache[n][j];
}

namespace {

struct RawCounts {
    std::uint64_t forests = 0, trees = 0;
    std::uint64_t apex[3] = {0, 0, 0};
    std::uint64_t exc[3] = {0, 0, 0};
    std::uint64_t wheel = 0, wheel_rooted_raw = 0, btype = 0, ktype = 0;
};

void census_range(int n, int kmax, std::uint64_t lo, std::uint64_t hi, RawCounts& out) {
    using detail::bit_rows;
    using detail::forest_bits;
    using detail::full_mask;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        LabeledGraph g = mask_to_graph(n, mask);
        auto rows = bit_rows(g);
        auto cycles = chordless_cycle_masks(g);

        int packing_low = cycles.empty()
                              ? 0
                              : (detail::two_disjoint_cycles(cycles)
                                     ? (detail::three_disjoint_cycles(cycles, n) ? 3 : 2)
                                     : 1);
        bool forest = packing_low == 0;
        if (forest) {
            ++out.forests;
            if (g.edge_count() == n - 1) ++out.trees;
        }
        // blocker of size <= k, by direct deletion (k <= 2)
        bool apex_k[3] = {forest, false, false};
        if (kmax >= 1 && !apex_k[0]) {
            for (int v = 0; v < n && !apex_k[1]; ++v)
                if (forest_bits(rows, full_mask(n) & ~(1ull << v))) apex_k[1] = true;
        }
        if (apex_k[0]) apex_k[1] = true;
        if (kmax >= 2) {
            apex_k[2] = apex_k[1];
            for (int u = 0; u < n && !apex_k[2]; ++u)
                for (int v = u + 1; v < n && !apex_k[2]; ++v)
                    if (forest_bits(rows, full_mask(n) & ~((1ull << u) | (1ull << v)))) apex_k[2] = true;
        }
        for (int k = 0; k <= kmax; ++k) {
            if (apex_k[k]) ++out.apex[k];
            if (packing_low <= k) ++out.exc[k];
        }
        if (kmax >= 1) {
            Multigraph core = topological_core(g);
            if (!core.empty()) {
                int hubs = wheel_hub_count(core);
                if (hubs > 0) {
                    ++out.wheel;
                    // the wheel series counts one term per hub reading of the
                    // core of a connected graph
                    if (components(g).size() == 1) out.wheel_rooted_raw += static_cast<std::uint64_t>(hubs);
                }
                if (core_matches_btype(core)) ++out.btype;
                if (core_matches_ktype(core)) ++out.ktype;
            }
        }
    }
}

} // namespace

CountRecord census(int n, int kmax, int workers, bool allow_n8) {
    if (n < 1) throw std::invalid_argument("census: n must be >= 1");
    if (n > 8 || (n == 8 && !allow_n8))
        throw SizeGuardError("census: n = " + std::to_string(n) +
                             " refused (n <= 7; n = 8 needs the explicit opt-in flag)");
    if (kmax < 0 || kmax > 2) throw SizeGuardError("census: kmax must be between 0 and 2");

    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << pairs;
    int t = std::max(1, workers);
    if (static_cast<std::uint64_t>(t) > total) t = 1;

    std::vector<RawCounts> parts(t);
    if (t == 1) {
        census_range(n, kmax, 0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i)
            pool.emplace_back([&, i] { census_range(n, kmax, total * i / t, total * (i + 1) / t, parts[i]); });
        for (auto& th : pool) th.join();
    }

    RawCounts sum;
    for (const auto& p : parts) {
        sum.forests += p.forests;
        sum.trees += p.trees;
        for (int k = 0; k < 3; ++k) {
            sum.apex[k] += p.apex[k];
            sum.exc[k] += p.exc[k];
        }
        sum.wheel += p.wheel;
        sum.wheel_rooted_raw += p.wheel_rooted_raw;
        sum.btype += p.btype;
        sum.ktype += p.ktype;
    }

    CountRecord rec;
    rec.n = n;
    rec.kmax = kmax;
    rec.forests = BigInt::from_u64(sum.forests);
    rec.trees = BigInt::from_u64(sum.trees);
    for (int k = 0; k <= kmax; ++k) {
        rec.apex.push_back(BigInt::from_u64(sum.apex[k]));
        rec.exc.push_back(BigInt::from_u64(sum.exc[k]));
        rec.diff.push_back(BigInt::from_u64(sum.exc[k] - sum.apex[k]));
    }
    rec.wheel = BigInt::from_u64(sum.wheel);
    rec.wheel_rooted = BigInt::from_u64(sum.wheel_rooted_raw);
    rec.btype = BigInt::from_u64(sum.btype);
    rec.ktype = BigInt::from_u64(sum.ktype);
    return rec;
}

namespace {

void row(std::ostringstream& os, int n, const std::string& cls, int k, const BigInt& count, bool json) {
    if (json) {
        os << "{\"n\":" << n << ",\"class\":\"" << cls << "\",";
        if (k >= 0) os << "\"k\":" << k << ",";
        os << "\"count\":\"" << count.to_string() << "\"}\n";
    } else {
        os << n << "," << cls << "," << (k >= 0 ? std::to_string(k) : "") << ","
           << count.to_string() << "\n";
    }
}

std::string render(const CountRecord& r, bool json) {
    std::ostringstream os;
    if (!json) os << "n,class,k,count\n";
    row(os, r.n, "forests", -1, r.forests, json);
    row(os, r.n, "trees", -1, r.trees, json);
    for (int k = 0; k <= r.kmax; ++k) {
        row(os, r.n, "apex" + std::to_string(k) + "F", k, r.apex[k], json);
        row(os, r.n, "ex" + std::to_string(k + 1) + "C", k, r.exc[k], json);
        row(os, r.n, "D" + std::to_string(k), k, r.diff[k], json);
    }
    if (r.kmax >= 1) {
        row(os, r.n, "W", 1, r.wheel, json);
        row(os, r.n, "W_rooted", 1, r.wheel_rooted, json);
        row(os, r.n, "B", 1, r.btype, json);
        row(os, r.n, "K", 1, r.ktype, json);
    }
    return os.str();
}

} // namespace

std::string CountRecord::to_json_rows() const { return render(*this, true); }
std::string CountRecord::to_csv() const { return render(*this, false); }

} // namespace excycles
