// Compares the OpenMP integration kernel against the serial reference on the
// gauge-ball energy integral of the t-pair and checks they agree bitwise.

#include <chrono>
#include <cstdio>

#include "acfh/fields.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/heisenberg.hpp"
#include "acfh/quadrature.hpp"

using namespace acfh;

namespace {

template <class F>
double time_ms(F&& f, double& result) {
    const auto t0 = std::chrono::steady_clock::now();
    result = f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    const HField u = fields::t_plus();
    const auto energy = [&](double rho, double phi, double theta) {
        const HPoint p = from_polar(rho, phi, theta);
        return u.value(p) > 0.0 ? horizontal_gradient_sq(u, p) : 0.0;
    };

    std::printf("%8s %12s %12s %10s %8s\n", "nodes", "serial[ms]", "openmp[ms]", "speedup", "equal");
    for (const int n : {48, 64, 96}) {
        const ProductGrid g = koranyi_kernel_grid(1.0, n, 2 * n, 2 * n);
        double serial = 0.0, parallel = 0.0;
        const double ts = time_ms([&] { return integrate_serial(g, energy); }, serial);
        const double tp = time_ms([&] { return integrate(g, energy); }, parallel);
        std::printf("%8zu %12.1f %12.1f %9.2fx %8s\n", g.size(), ts, tp, ts / tp,
                    serial == parallel ? "yes" : "NO");
    }
    return 0;
}
