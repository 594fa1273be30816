#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace excycles {

/// One reported statistic: a point estimate with its standard error and,
/// when the limit is known in closed form, the target value.
struct Statistic {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    std::optional<double> target;
};

struct ExperimentReport {
    std::string experiment;
    int n = 0;
    int k = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    double eps = 0.0; // degrees experiment only
    std::vector<Statistic> statistics;
    std::string caveat;
    std::string rng_id;
    std::string version;

    /// Canonical serialization; identical parameters give identical bytes.
    std::string to_json() const;
    std::string to_csv() const;
};

/// Fraction of connectivity over draws from the apex construction, against
/// the limiting constant p_k.
ExperimentReport experiment_connectivity(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                         int workers = 1);

/// Degree standout events: S_n = vertices of degree above n/ln n; reports
/// how often |S_n| = k with S_n a blocker, and how often every standout
/// degree sits inside ((1/2-eps) n, (1/2+eps) n). At n <= 14 also reports
/// the mean minimum size of a blocker avoiding S_n.
ExperimentReport experiment_degrees(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                    double eps, int workers = 1);

/// Joint clique/chromatic distribution against the exact reference: the
/// limit of (omega, chi) is the law of (omega(R)+2, chi(R)+2) for R uniform
/// over graphs on k vertices, enumerated exactly (k <= 4).
ExperimentReport experiment_chi_omega(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                      int workers = 1);

} // namespace excycles
