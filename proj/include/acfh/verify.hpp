#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acfh/euclid_acf.hpp"
#include "acfh/heis_mono.hpp"

namespace acfh {

struct CheckRow {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<CheckRow> rows;
};

struct VerifyOptions {
    int mesh = 2048;
    HGridSpec hgrid{};
    EGridSpec egrid{};
    long long mc_samples = 10'000'000;
    std::uint64_t seed = 0x5eed5eed1234ULL;
};

/// Runs the full verification suite: the closed-form eigenvalues, the
/// Euclidean/Heisenberg bridge, the boundary quotients forcing beta <= 4,
/// constancy of J_8 on the t-pair, the psi bound chain, the fundamental
/// solution cancellation, the polar-calculus identities, the gauge-ball
/// measure, the Euclidean product functional, the two-sided lower-bound
/// comparison, and the gradient split. Deterministic for a fixed seed.
std::vector<Criterion> run_acceptance(const VerifyOptions& opt = {});

bool all_pass(const std::vector<Criterion>& cs);

} // namespace acfh
