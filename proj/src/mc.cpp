#include "acfh/mc.hpp"

#include <cmath>
#include <random>

namespace acfh::mc {

double koranyi_ball_integral(const std::function<double(double, double, double)>& f, double r,
                             long long samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uxy(-r, r);
    std::uniform_real_distribution<double> ut(-r * r, r * r);
    const double box = (2.0 * r) * (2.0 * r) * (2.0 * r * r);
    double acc = 0.0;
    for (long long k = 0; k < samples; ++k) {
        const double x = uxy(rng), y = uxy(rng), t = ut(rng);
        const double s2 = x * x + y * y;
        if (s2 * s2 + t * t < r * r * r * r) acc += f(x, y, t);
    }
    return box * acc / static_cast<double>(samples);
}

double euclid_ball_integral(const std::function<double(const Vec3&)>& f, double r,
                            long long samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-r, r);
    const double box = 8.0 * r * r * r;
    double acc = 0.0;
    for (long long k = 0; k < samples; ++k) {
        const Vec3 x{u(rng), u(rng), u(rng)};
        if (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] < r * r) acc += f(x);
    }
    return box * acc / static_cast<double>(samples);
}

} // namespace acfh::mc
