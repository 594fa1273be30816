#include "excycles/classify.hpp"
#include "excycles/common.hpp"
#include "excycles/cycles.hpp"
#include "excycles/enumeration.hpp"
#include "excycles/experiments.hpp"
#include "excycles/gf.hpp"
#include "excycles/graph.hpp"
#include "excycles/invariants.hpp"
#include "excycles/rng.hpp"
#include "excycles/samplers.hpp"
#include "excycles/series.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace excycles;

int default_workers() {
    if (const char* env = std::getenv("EXCYCLES_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string fmt_sci(double v) {
    char buf[32];
    if (v == 0.0) return "<1e-300";
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

struct GlobalOpts {
    std::uint64_t seed = 12345;
    int workers = default_workers();
    std::string out = "json";
    bool quiet = false;
};

void note(const GlobalOpts& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << "\n";
}

int run_census(const GlobalOpts& g, int n, int kmax, bool enable_n8) {
    if (n >= 7)
        note(g, "census: sweeping 2^" + std::to_string(n * (n - 1) / 2) + " graphs on " +
                    std::to_string(g.workers) + " workers");
    CountRecord rec = census(n, kmax, g.workers, enable_n8);
    std::cout << (g.out == "csv" ? rec.to_csv() : rec.to_json_rows());
    return 0;
}

int run_classify(const GlobalOpts& g, const std::string& file, std::int64_t mask, int mask_n) {
    LabeledGraph graph;
    if (mask >= 0) {
        graph = mask_to_graph(mask_n, static_cast<std::uint64_t>(mask));
    } else if (file == "-") {
        graph = read_edge_list(std::cin);
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("classify: cannot open " + file);
        graph = read_edge_list(in);
    }
    (void)g;
    std::cout << classify_ex2c(graph).to_json() << "\n";
    return 0;
}

void print_sample(std::ostream& os, std::uint64_t index, const LabeledGraph& g,
                  const std::vector<int>* s) {
    os << "{\"sample\":" << index << ",\"n\":" << g.n();
    if (s) {
        os << ",\"S\":[";
        for (std::size_t i = 0; i < s->size(); ++i) os << (i ? "," : "") << (*s)[i] + 1;
        os << "]";
    }
    os << ",\"edges\":[";
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        os << (i ? "," : "") << "[" << edges[i].first + 1 << "," << edges[i].second + 1 << "]";
    os << "]}\n";
}

int run_sample(const GlobalOpts& g, const std::string& model, int n, int k, std::uint64_t samples) {
    if (model == "forest" || model == "tree") warm_forest_tables(n);
    else if (model == "apex") warm_forest_tables(std::max(0, n - k));
    SeededRng base(g.seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        SeededRng rng = base.split(i);
        if (model == "tree") {
            print_sample(std::cout, i, random_tree(n, rng), nullptr);
        } else if (model == "forest") {
            print_sample(std::cout, i, random_forest(n, rng), nullptr);
        } else if (model == "apex") {
            auto sample = random_apex_construction(n, k, rng);
            print_sample(std::cout, i, sample.first, &sample.second.s);
        } else { // exact-ex
            print_sample(std::cout, i, exact_uniform_ex(n, k, rng), nullptr);
        }
    }
    return 0;
}

int run_gf(const GlobalOpts&, int pk, bool constants) {
    if (pk >= 0) {
        for (int k = 0; k <= pk; ++k)
            std::cout << "p_" << k << " = " << connectivity_constant(k).to_decimal(6) << "\n";
    }
    if (constants) {
        GfConstants gc = wheel_constants();
        std::cout << "x = " << gc.x.to_decimal(15) << " (|S(x)-1| = " << fmt_sci(gc.residual_s.to_double()) << ")\n";
        std::cout << "r = " << gc.r.to_decimal(15) << " (|R(r)-x| = " << fmt_sci(gc.residual_r.to_double()) << ")\n";
        std::cout << "gamma = " << gc.gamma.to_decimal(15) << "\n";
        std::cout << "c = " << gc.c.to_decimal(15) << "\n";
    }
    return 0;
}

int run_series(const GlobalOpts& g, const std::string& cls, int max_n) {
    WheelSeriesSet ws = wheel_series(max_n);
    const RationalSeries* s = &ws.hplus;
    if (cls == "wheel") s = &ws.w;
    else if (cls == "wheel-plus") s = &ws.wplus;
    GfConstants gc = wheel_constants();
    double log2_gamma = std::log2(gc.gamma.to_double());
    bool csv = g.out == "csv";
    if (csv) std::cout << "n,coeff,ratio\n";
    for (int n = 1; n <= max_n; ++n) {
        const BigRational& coeff = s->coeff(n);
        // n * (n! [z^n]) / (gamma^n n!) collapses to n * coeff / gamma^n
        double ratio = 0.0;
        if (!coeff.is_zero()) {
            double l2 = std::log2(static_cast<double>(n)) + coeff.num().log2_abs() -
                        coeff.den().log2_abs() - n * log2_gamma;
            ratio = std::exp2(l2);
        }
        char rbuf[32];
        std::snprintf(rbuf, sizeof(rbuf), "%.9g", ratio);
        if (csv) {
            std::cout << n << "," << coeff.to_string() << "," << rbuf << "\n";
        } else {
            std::cout << "{\"n\":" << n << ",\"coeff\":\"" << coeff.to_string()
                      << "\",\"ratio\":" << rbuf << "}\n";
        }
    }
    return 0;
}

int run_experiment(const GlobalOpts& g, const std::string& name, int n, int k,
                   std::uint64_t samples, double eps) {
    ExperimentReport rep;
    if (name == "connectivity") rep = experiment_connectivity(n, k, samples, g.seed, g.workers);
    else if (name == "degrees") rep = experiment_degrees(n, k, samples, g.seed, eps, g.workers);
    else rep = experiment_chi_omega(n, k, samples, g.seed, g.workers);
    std::cout << (g.out == "csv" ? rep.to_csv() : rep.to_json() + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact disjoint-cycle packing, blockers, censuses, samplers and constants"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "rng seed for sampling subcommands");
    app.add_option("--workers", g.workers, "worker threads (default: EXCYCLES_WORKERS or hardware)");
    app.add_option("--out", g.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--quiet", g.quiet, "suppress progress notes on stderr");

    auto* census_cmd = app.add_subcommand("census", "exhaustive labeled-graph class counts");
    int census_n = 4, census_kmax = 1;
    bool enable_n8 = false;
    census_cmd->add_option("--n", census_n, "vertex count (<= 7, or 8 with --enable-n8)")->required();
    census_cmd->add_option("--kmax", census_kmax, "largest k for apex/ex classes (<= 2)");
    census_cmd->add_flag("--enable-n8", enable_n8, "allow the 2^28-graph census at n = 8");

    auto* classify_cmd = app.add_subcommand("classify", "structure labels for one graph");
    std::string classify_file = "-";
    std::int64_t classify_mask = -1;
    int classify_mask_n = 0;
    classify_cmd->add_option("file", classify_file, "edge list file ('n m' header, 1-based pairs; '-' for stdin)");
    classify_cmd->add_option("--mask", classify_mask, "census mask instead of a file");
    classify_cmd->add_option("--mask-n", classify_mask_n, "vertex count for --mask");

    auto* sample_cmd = app.add_subcommand("sample", "seeded random graphs, one JSON line each");
    std::string model = "forest";
    int sample_n = 10, sample_k = 0;
    std::uint64_t sample_count = 1;
    sample_cmd->add_option("--model", model, "tree | forest | apex | exact-ex")
        ->check(CLI::IsMember({"tree", "forest", "apex", "exact-ex"}));
    sample_cmd->add_option("--n", sample_n, "vertex count")->required();
    sample_cmd->add_option("--k", sample_k, "apex size / packing parameter");
    sample_cmd->add_option("--samples", sample_count, "number of samples");

    auto* gf_cmd = app.add_subcommand("gf", "published constants in high precision");
    int pk = -1;
    bool constants = false;
    gf_cmd->add_option("--pk", pk, "print p_0..p_K to 6 decimals");
    gf_cmd->add_flag("--constants", constants, "print x, r, gamma, c with residuals");

    auto* series_cmd = app.add_subcommand("series", "exact series coefficients and scaled ratios");
    std::string series_class = "wheel";
    int series_max_n = 30;
    series_cmd->add_option("--class", series_class, "hairy | wheel | wheel-plus")
        ->check(CLI::IsMember({"hairy", "wheel", "wheel-plus"}));
    series_cmd->add_option("--max-n", series_max_n, "truncation order");

    auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo reproductions with reports");
    std::string exp_name;
    int exp_n = 100, exp_k = 1;
    std::uint64_t exp_samples = 1000;
    double exp_eps = 0.05;
    exp_cmd->add_option("--name", exp_name, "connectivity | degrees | chi-omega")
        ->required()
        ->check(CLI::IsMember({"connectivity", "degrees", "chi-omega"}));
    exp_cmd->add_option("--n", exp_n, "vertex count")->required();
    exp_cmd->add_option("--k", exp_k, "apex size");
    exp_cmd->add_option("--samples", exp_samples, "Monte Carlo samples");
    exp_cmd->add_option("--eps", exp_eps, "degree band half-width (degrees experiment)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (census_cmd->parsed()) return run_census(g, census_n, census_kmax, enable_n8);
        if (classify_cmd->parsed()) {
            if (classify_mask >= 0 && classify_mask_n <= 0)
                throw std::invalid_argument("classify: --mask needs --mask-n");
            return run_classify(g, classify_file, classify_mask, classify_mask_n);
        }
        if (sample_cmd->parsed()) return run_sample(g, model, sample_n, sample_k, sample_count);
        if (gf_cmd->parsed()) {
            if (pk < 0 && !constants) {
                std::cerr << "gf: nothing to do; pass --pk K and/or --constants\n";
                return 2;
            }
            return run_gf(g, pk, constants);
        }
        if (series_cmd->parsed()) return run_series(g, series_class, series_max_n);
        if (exp_cmd->parsed()) return run_experiment(g, exp_name, exp_n, exp_k, exp_samples, exp_eps);
    } catch (const SizeGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
