#pragma once

// Reproducible, stream-partitioned Monte Carlo.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace cigf {

struct MonteCarloConfig {
    std::int64_t n_trials = 1000000;
    std::uint64_t seed = 42;
    int n_streams = 4;

    void validate() const;
};

/// Running moments of a scalar observation.
struct McAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::int64_t n = 0;

    void add(double x)
    {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    void merge(const McAccumulator& o);
    double mean() const;
    /// Sample standard deviation of one observation.
    double stddev() const;
    /// Standard error of the mean.
    double std_error() const;
};

/// Seed of stream `index`: splitmix64 of seed ^ golden-ratio-scaled index.
std::uint64_t stream_seed(std::uint64_t seed, int index);

/// Runs `draw` n_trials times split over n_streams threads. Stream i gets an
/// mt19937_64 seeded with stream_seed(seed, i); partial results are merged in
/// stream order, so the estimate depends only on (seed, n_streams, n_trials).
McAccumulator run_monte_carlo(const MonteCarloConfig& mc, const std::function<double(std::mt19937_64&)>& draw);

/// Same partitioning as run_monte_carlo for a trial that produces `width`
/// observations at once; one accumulator per output slot.
std::vector<McAccumulator> run_monte_carlo_multi(const MonteCarloConfig& mc, std::size_t width,
                                                 const std::function<void(std::mt19937_64&, double*)>& draw);

/// Beta(a, b) variate from two gamma variates.
double sample_beta(double a, double b, std::mt19937_64& rng);

}  // namespace cigf
