#include "excycles/experiments.hpp"

#include "excycles/common.hpp"
#include "excycles/detail/bits.hpp"
#include "excycles/gf.hpp"
#include "excycles/graph.hpp"
#include "excycles/invariants.hpp"
#include "excycles/rng.hpp"
#include "excycles/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace excycles {

namespace {

// the construction sampler stands in for the uniform model; their total
// variation distance decays exponentially in n
const char* kCaveat =
    "sampled from the three-step apex construction, whose total variation "
    "distance to the uniform no-(k+1)-disjoint-cycles model is exponentially small in n";

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

double freq_std_error(double p, std::uint64_t n) {
    if (n == 0) return 0.0;
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n));
}

template <typename PerSample>
void run_samples(std::uint64_t samples, std::uint64_t seed, int workers, PerSample&& body) {
    // per-sample split streams make the result independent of the worker
    // count; workers only change wall time
    SeededRng base(seed);
    int t = std::max(1, workers);
    if (t == 1) {
        for (std::uint64_t i = 0; i < samples; ++i) {
            SeededRng rng = base.split(i);
            body(i, rng);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t i = w; i < samples; i += static_cast<std::uint64_t>(t)) {
                SeededRng rng = base.split(i);
                body(i, rng);
            }
        });
    }
    for (auto& th : pool) th.join();
}

void fill_meta(ExperimentReport& rep, const char* name, int n, int k, std::uint64_t samples,
               std::uint64_t seed, int workers) {
    rep.experiment = name;
    rep.n = n;
    rep.k = k;
    rep.samples = samples;
    rep.seed = seed;
    rep.workers = std::max(1, workers);
    rep.caveat = kCaveat;
    rep.rng_id = kRngId;
    rep.version = kVersion;
}

} // namespace

ExperimentReport experiment_connectivity(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                         int workers) {
    if (n <= k || k < 0 || samples < 1)
        throw std::invalid_argument("experiment_connectivity: need n > k >= 0 and samples >= 1");
    warm_forest_tables(n - k);
    int t = std::max(1, workers);
    std::vector<std::uint64_t> connected_per(t, 0);
    run_samples(samples, seed, t, [&](std::uint64_t i, SeededRng& rng) {
        auto sample = random_apex_construction(n, k, rng);
        if (components(sample.first).size() == 1) ++connected_per[i % t];
    });
    std::uint64_t connected = 0;
    for (auto c : connected_per) connected += c;

    ExperimentReport rep;
    fill_meta(rep, "connectivity", n, k, samples, seed, workers);
    double est = static_cast<double>(connected) / static_cast<double>(samples);
    double target = std::stod(connectivity_constant(k).to_decimal(15));
    rep.statistics.push_back({"connected_fraction", est, freq_std_error(est, samples), target});
    return rep;
}

ExperimentReport experiment_degrees(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                    double eps, int workers) {
    if (n <= k || k < 0 || samples < 1 || eps <= 0)
        throw std::invalid_argument("experiment_degrees: need n > k >= 0, samples >= 1, eps > 0");
    if (n < 3) throw std::invalid_argument("experiment_degrees: n too small for the degree threshold");
    warm_forest_tables(n - k);
    int t = std::max(1, workers);
    const double threshold = static_cast<double>(n) / std::log(static_cast<double>(n));
    std::vector<std::uint64_t> ev1_per(t, 0), ev3_per(t, 0);
    std::vector<std::uint64_t> avoid_sum_per(t, 0);
    const bool tiny = n <= 14;
    run_samples(samples, seed, t, [&](std::uint64_t i, SeededRng& rng) {
        auto sample = random_apex_construction(n, k, rng);
        const LabeledGraph& g = sample.first;
        std::vector<int> standout;
        for (int v = 0; v < n; ++v)
            if (static_cast<double>(g.degree(v)) > threshold) standout.push_back(v);
        bool ev1 = static_cast<int>(standout.size()) == k;
        if (ev1) {
            std::vector<char> rm(n, 0);
            for (int v : standout) rm[v] = 1;
            std::vector<int> parent(n);
            for (int v = 0; v < n; ++v) parent[v] = v;
            auto find = [&](int x) {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            };
            for (int a = 0; a < n && ev1; ++a) {
                if (rm[a]) continue;
                for (int b : g.neighbors(a)) {
                    if (rm[b] || b <= a) continue;
                    int ra = find(a), rb = find(b);
                    if (ra == rb) {
                        ev1 = false;
                        break;
                    }
                    parent[ra] = rb;
                }
            }
        }
        bool ev3 = true;
        for (int v : standout) {
            double d = g.degree(v);
            if (d < (0.5 - eps) * n || d > (0.5 + eps) * n) ev3 = false;
        }
        if (ev1) ++ev1_per[i % t];
        if (ev3) ++ev3_per[i % t];
        if (tiny) {
            // smallest blocker forced to avoid some standout vertex (only
            // meaningful at desk scale; no quantitative claim attached)
            auto rows = detail::bit_rows(g);
            std::uint64_t all = detail::full_mask(n);
            auto avoid_exists = [&](auto&& self, std::uint64_t active, int budget, int forbid) -> bool {
                std::uint64_t cyc = detail::first_chordless_cycle(rows, active);
                if (!cyc) return true;
                if (budget == 0) return false;
                cyc &= ~(1ull << forbid);
                while (cyc) {
                    int v = std::countr_zero(cyc);
                    cyc &= cyc - 1;
                    if (self(self, active & ~(1ull << v), budget - 1, forbid)) return true;
                }
                return false;
            };
            std::uint64_t best = 0;
            if (!standout.empty()) {
                best = n;
                for (int v : standout)
                    for (int s = 0; s < static_cast<int>(best); ++s)
                        if (avoid_exists(avoid_exists, all, s, v)) {
                            best = std::min<std::uint64_t>(best, s);
                            break;
                        }
            }
            avoid_sum_per[i % t] += best;
        }
    });
    std::uint64_t ev1 = 0, ev3 = 0, avoid_sum = 0;
    for (int w = 0; w < t; ++w) {
        ev1 += ev1_per[w];
        ev3 += ev3_per[w];
        avoid_sum += avoid_sum_per[w];
    }

    ExperimentReport rep;
    fill_meta(rep, "degrees", n, k, samples, seed, workers);
    rep.eps = eps;
    double p1 = static_cast<double>(ev1) / static_cast<double>(samples);
    double p3 = static_cast<double>(ev3) / static_cast<double>(samples);
    rep.statistics.push_back({"standout_set_is_k_blocker", p1, freq_std_error(p1, samples), 1.0});
    rep.statistics.push_back({"standout_degrees_in_band", p3, freq_std_error(p3, samples), 1.0});
    if (tiny) {
        double mean = static_cast<double>(avoid_sum) / static_cast<double>(samples);
        rep.statistics.push_back({"mean_min_blocker_avoiding_standout", mean, 0.0, std::nullopt});
    }
    return rep;
}

ExperimentReport experiment_chi_omega(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                      int workers) {
    if (n <= k || k < 1 || samples < 1)
        throw std::invalid_argument("experiment_chi_omega: need n > k >= 1 and samples >= 1");
    if (k > 4) throw SizeGuardError("experiment_chi_omega: exact reference needs k <= 4");
    warm_forest_tables(n - k);
    int t = std::max(1, workers);
    const int side = k + 3; // chi, omega live in 0..k+2
    std::vector<std::vector<std::uint64_t>> joint_per(t,
        std::vector<std::uint64_t>(static_cast<std::size_t>(side) * side, 0));
    run_samples(samples, seed, t, [&](std::uint64_t i, SeededRng& rng) {
        auto sample = random_apex_construction(n, k, rng);
        ColoringResult cr = chi_omega(sample.first, sample.second.s);
        if (cr.chi > k + 2) throw std::logic_error("chi exceeded the apex bound");
        ++joint_per[i % t][static_cast<std::size_t>(cr.omega) * side + cr.chi];
    });
    std::vector<std::uint64_t> joint(static_cast<std::size_t>(side) * side, 0);
    for (int w = 0; w < t; ++w)
        for (std::size_t c = 0; c < joint.size(); ++c) joint[c] += joint_per[w][c];

    // exact reference: (omega+2, chi+2) of a uniform graph on k vertices
    std::vector<double> ref(static_cast<std::size_t>(side) * side, 0.0);
    {
        const int pairs = k * (k - 1) / 2;
        const std::uint64_t total = 1ull << pairs;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            LabeledGraph g = mask_to_graph(k, mask);
            int om = clique_number(g), ch = chromatic_number(g);
            ref[static_cast<std::size_t>(om + 2) * side + (ch + 2)] +=
                1.0 / static_cast<double>(total);
        }
    }

    ExperimentReport rep;
    fill_meta(rep, "chi_omega", n, k, samples, seed, workers);
    for (int om = 0; om < side; ++om)
        for (int ch = 0; ch < side; ++ch) {
            std::size_t cell = static_cast<std::size_t>(om) * side + ch;
            if (joint[cell] == 0 && ref[cell] == 0.0) continue;
            double est = static_cast<double>(joint[cell]) / static_cast<double>(samples);
            std::ostringstream name;
            name << "P(omega=" << om << ",chi=" << ch << ")";
            rep.statistics.push_back({name.str(), est, freq_std_error(est, samples), ref[cell]});
        }
    return rep;
}

std::string ExperimentReport::to_json() const {
    std::ostringstream os;
    os << "{\"experiment\":\"" << experiment << "\",\"parameters\":{\"n\":" << n << ",\"k\":" << k
       << ",\"samples\":" << samples << ",\"seed\":" << seed << ",\"workers\":" << workers;
    if (experiment == "degrees") os << ",\"eps\":" << fmt_double(eps);
    os << "},\"statistics\":[";
    for (std::size_t i = 0; i < statistics.size(); ++i) {
        const auto& s = statistics[i];
        os << (i ? "," : "") << "{\"name\":\"" << s.name << "\",\"estimate\":" << fmt_double(s.estimate)
           << ",\"std_error\":" << fmt_double(s.std_error);
        if (s.target) os << ",\"target\":" << fmt_double(*s.target);
        else os << ",\"target\":null";
        os << "}";
    }
    os << "],\"caveat\":\"" << caveat << "\",\"rng\":\"" << rng_id << "\",\"version\":\"" << version
       << "\"}";
    return os.str();
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream os;
    os << "statistic,estimate,std_error,target\n";
    for (const auto& s : statistics) {
        os << s.name << "," << fmt_double(s.estimate) << "," << fmt_double(s.std_error) << ",";
        if (s.target) os << fmt_double(*s.target);
        os << "\n";
    }
    return os.str();
}

} // namespace excycles
