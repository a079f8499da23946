#include "relosim/stochastic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace relosim {

namespace {

// Uniform double in (0, 1] from one 64-bit engine draw. The upper 53 bits
// give u in [0, 1); returning 1 - u avoids log(0) in the inverse CDF.
double uniform_unit(std::mt19937_64& rng) {
    return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Deployment1D sample_poisson_arrivals(std::int64_t n, double rate, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_poisson_arrivals: n must be >= 1");
    if (!(rate > 0.0)) throw std::invalid_argument("sample_poisson_arrivals: rate must be > 0");

    std::mt19937_64 rng(seed);
    Deployment1D d;
    d.rate = rate;
    d.seed = seed;
    d.positions.resize(static_cast<std::size_t>(n));
    double x = 0.0;
    for (auto& p : d.positions) {
        x += -std::log(uniform_unit(rng)) / rate;
        p = x;
    }
    return d;
}

GridDeployment2D sample_grid(std::int64_t m, double rate, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample_grid: m must be >= 1");
    GridDeployment2D g;
    g.xs = sample_poisson_arrivals(m, rate, derive_stream(seed, {1}));
    g.ys = sample_poisson_arrivals(m, rate, derive_stream(seed, {2}));
    return g;
}

double gamma_moment(std::int64_t k, double a, double rate) {
    if (k < 1) throw std::invalid_argument("gamma_moment: k must be >= 1");
    if (!(a > 0.0)) throw std::invalid_argument("gamma_moment: a must be > 0");
    if (!(rate > 0.0)) throw std::invalid_argument("gamma_moment: rate must be > 0");
    const double kd = static_cast<double>(k);
    return std::exp(std::lgamma(kd + a) - std::lgamma(kd) - a * std::log(rate));
}

}  // namespace relosim
