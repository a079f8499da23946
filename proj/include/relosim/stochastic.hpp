#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace relosim {

// SplitMix64 output function. Mixes 64 bits well enough to decorrelate
// seed streams derived from nearby inputs.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives the seed of an independent stream from a master seed and a list of
// salts (e.g. {n, trial_index}). Streams derived this way depend only on
// their inputs, so trials may run serially or in parallel, in any order,
// with bit-identical results.
constexpr std::uint64_t derive_stream(std::uint64_t master,
                                      std::initializer_list<std::uint64_t> salts) {
    std::uint64_t s = splitmix64(master);
    for (std::uint64_t v : salts) s = splitmix64(s ^ v);
    return s;
}

// Sorted random sensor positions on [0, inf) together with the Poisson
// arrival rate and seed that generated them.
struct Deployment1D {
    std::vector<double> positions;  // non-decreasing, all >= 0
    double rate = 0.0;              // arrival rate lambda > 0
    std::uint64_t seed = 0;

    std::size_t size() const { return positions.size(); }
};

// n = m^2 grid sensors: sensor (i1, i2) sits at (xs[i1], ys[i2]).
// The two axis deployments come from disjoint seed streams.
struct GridDeployment2D {
    Deployment1D xs;
    Deployment1D ys;

    std::size_t m() const { return xs.positions.size(); }
    std::size_t sensor_count() const { return m() * m(); }
};

// Samples X_i = sum of i i.i.d. Exp(rate) inter-arrival gaps, i = 1..n.
// Sorted by construction and deterministic for a fixed seed.
Deployment1D sample_poisson_arrivals(std::int64_t n, double rate, std::uint64_t seed);

// Two independent axis deployments of length m derived from one seed.
GridDeployment2D sample_grid(std::int64_t m, double rate, std::uint64_t seed);

// E[X_k^a] for X_k ~ Gamma(k, rate): Gamma(k+a) / (Gamma(k) * rate^a).
// Evaluated through log-Gamma so k up to ~1e6 stays finite.
double gamma_moment(std::int64_t k, double a, double rate);

}  // namespace relosim
