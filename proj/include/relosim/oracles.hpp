#pragma once

#include <cstdint>

namespace relosim {

// Randomized checks of the transport-cost inequalities on freshly sampled
// instances. Tolerances are part of the contract and fixed in the
// implementation; bound_scale exists so checker sanity tests can inject a
// deliberately broken bound (e.g. 0.9 for a -10% fault) and watch the suite
// go red.
struct OracleConfig {
    std::uint64_t master_seed = 1;
    long instances = 1000;
    double bound_scale = 1.0;
};

struct OracleOutcome {
    long checked = 0;
    long violations = 0;
    double worst_margin = 0.0;       // min(bound - value); negative when violated
    std::uint64_t worst_seed = 0;    // instance seed attaining worst_margin
};

// Round distance <= 2|M_1| + 2|M_l| + 3(Y_l - Y_0) + 1e-9 on random greedy
// rounds with l <= 20 and arbitrary order-preserving deposits.
OracleOutcome check_lemma1(const OracleConfig& config);

struct LineOracleOutcome {
    OracleOutcome theorem1;    // min_j cost <= instance bound + 1e-9
    OracleOutcome corollary1;  // every trajectory total >= X_n - 1e-12
};

// Random line instances with n <= 200, k <= n, a in {1, 1.5, 2, 3}, both
// anchor and arbitrary sorted target plans.
LineOracleOutcome check_line_bounds(const OracleConfig& config);

struct PlaneOracleOutcome {
    OracleOutcome theorem2;      // min over (j1,j2) cost <= bound + 1e-6
    OracleOutcome reachability;  // every total >= X_m + Y_m - 1e-12
};

// Random plane instances with m <= 20, k <= m, a in {1, 2}.
PlaneOracleOutcome check_plane_bounds(const OracleConfig& config);

}  // namespace relosim
