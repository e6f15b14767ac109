#pragma once

#include <cstdint>
#include <functional>

#include "acfh/euclid_acf.hpp"

namespace acfh::mc {

/// Rejection-sampling estimate of int_{B_r^{H^1}} f dzeta over the gauge ball,
/// sampling the bounding box [-r,r]^2 x [-r^2,r^2]. Independent of the
/// quadrature module by construction.
double koranyi_ball_integral(const std::function<double(double, double, double)>& f, double r,
                             long long samples, std::uint64_t seed);

/// Same for the Euclidean ball of R^3.
double euclid_ball_integral(const std::function<double(const Vec3&)>& f, double r,
                            long long samples, std::uint64_t seed);

} // namespace acfh::mc
