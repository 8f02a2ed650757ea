#include "cigf/monte_carlo.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "cigf/errors.hpp"

namespace cigf {

void MonteCarloConfig::validate() const
{
    if (n_trials < 1) throw DomainError("MonteCarloConfig.n_trials must be >= 1");
    if (n_streams < 1) throw DomainError("MonteCarloConfig.n_streams must be >= 1");
}

void McAccumulator::merge(const McAccumulator& o)
{
    sum += o.sum;
    sum_sq += o.sum_sq;
    n += o.n;
}

double McAccumulator::mean() const
{
    return n > 0 ? sum / static_cast<double>(n) : 0.0;
}

double McAccumulator::stddev() const
{
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

double McAccumulator::std_error() const
{
    return n > 0 ? stddev() / std::sqrt(static_cast<double>(n)) : 0.0;
}

std::uint64_t stream_seed(std::uint64_t seed, int index)
{
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

McAccumulator run_monte_carlo(const MonteCarloConfig& mc, const std::function<double(std::mt19937_64&)>& draw)
{
    mc.validate();
    const auto streams = static_cast<std::int64_t>(mc.n_streams);
    std::vector<McAccumulator> parts(static_cast<std::size_t>(streams));
    std::vector<std::thread> workers;
    workers.reserve(parts.size());
    for (std::int64_t s = 0; s < streams; ++s) {
        const std::int64_t count = mc.n_trials / streams + (s < mc.n_trials % streams ? 1 : 0);
        workers.emplace_back([&, s, count] {
            std::mt19937_64 rng(stream_seed(mc.seed, static_cast<int>(s)));
            McAccumulator acc;
            for (std::int64_t i = 0; i < count; ++i) acc.add(draw(rng));
            parts[static_cast<std::size_t>(s)] = acc;
        });
    }
    for (auto& w : workers) w.join();
    McAccumulator total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

std::vector<McAccumulator> run_monte_carlo_multi(const MonteCarloConfig& mc, std::size_t width,
                                                 const std::function<void(std::mt19937_64&, double*)>& draw)
{
    mc.validate();
    const auto streams = static_cast<std::int64_t>(mc.n_streams);
    std::vector<std::vector<McAccumulator>> parts(static_cast<std::size_t>(streams),
                                                  std::vector<McAccumulator>(width));
    std::vector<std::thread> workers;
    workers.reserve(parts.size());
    for (std::int64_t s = 0; s < streams; ++s) {
        const std::int64_t count = mc.n_trials / streams + (s < mc.n_trials % streams ? 1 : 0);
        workers.emplace_back([&, s, count] {
            std::mt19937_64 rng(stream_seed(mc.seed, static_cast<int>(s)));
            auto& acc = parts[static_cast<std::size_t>(s)];
            std::vector<double> out(width);
            for (std::int64_t i = 0; i < count; ++i) {
                draw(rng, out.data());
                for (std::size_t j = 0; j < width; ++j) acc[j].add(out[j]);
            }
        });
    }
    for (auto& w : workers) w.join();
    std::vector<McAccumulator> total(width);
    for (const auto& p : parts) {
        for (std::size_t j = 0; j < width; ++j) total[j].merge(p[j]);
    }
    return total;
}

double sample_beta(double a, double b, std::mt19937_64& rng)
{
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("sample_beta: shapes must be > 0");
    std::gamma_distribution<double> ga(a, 1.0);
    std::gamma_distribution<double> gb(b, 1.0);
    const double x = ga(rng);
    const double y = gb(rng);
    return x / (x + y);
}

}  // namespace cigf
