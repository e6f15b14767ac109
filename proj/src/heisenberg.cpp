#include "acfh/heisenberg.hpp"

#include <cmath>
#include <stdexcept>

namespace acfh {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_sq(const std::vector<double>& a) { return dot(a, a); }

} // namespace

HPoint group_mul(const HPoint& p, const HPoint& m) {
    if (p.n() != m.n()) throw std::invalid_argument("group_mul: dimension mismatch");
    HPoint out;
    out.x.resize(p.n());
    out.y.resize(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) {
        out.x[i] = p.x[i] + m.x[i];
        out.y[i] = p.y[i] + m.y[i];
    }
    out.t = p.t + m.t + 2.0 * (dot(m.x, p.y) - dot(p.x, m.y));
    return out;
}

HPoint group_inverse(const HPoint& p) {
    HPoint out = p;
    for (auto& v : out.x) v = -v;
    for (auto& v : out.y) v = -v;
    out.t = -p.t;
    return out;
}

HPoint dilate(double r, const HPoint& p) {
    if (!(r > 0.0)) throw std::invalid_argument("dilate: r must be > 0");
    HPoint out = p;
    for (auto& v : out.x) v *= r;
    for (auto& v : out.y) v *= r;
    out.t *= r * r;
    return out;
}

double gauge_norm(const HPoint& p) {
    const double s2 = norm_sq(p.x) + norm_sq(p.y);
    return std::pow(s2 * s2 + p.t * p.t, 0.25);
}

double koranyi_distance(const HPoint& p, const HPoint& q) {
    return gauge_norm(group_mul(group_inverse(p), q));
}

std::vector<double> horizontal_gradient(const HField& u, const HPoint& p) {
    if (u.horizontal_gradient) return u.horizontal_gradient(p);
    // The flow of X_i is the straight line s -> (x + s e_i, y, t + 2 s y_i)
    // (and likewise for Y_i), so central differences along the frozen
    // direction vectors are exact directional derivatives.
    const std::size_t n = p.n();
    const double h = u.fd_step * std::max(1.0, gauge_norm(p));
    std::vector<double> g(2 * n, 0.0);
    HPoint q = p;
    for (std::size_t i = 0; i < n; ++i) {
        q = p;
        q.x[i] = p.x[i] + h;
        q.t = p.t + 2.0 * h * p.y[i];
        const double up = u.value(q);
        q.x[i] = p.x[i] - h;
        q.t = p.t - 2.0 * h * p.y[i];
        const double um = u.value(q);
        g[i] = (up - um) / (2.0 * h);

        q = p;
        q.y[i] = p.y[i] + h;
        q.t = p.t - 2.0 * h * p.x[i];
        const double vp = u.value(q);
        q.y[i] = p.y[i] - h;
        q.t = p.t + 2.0 * h * p.x[i];
        const double vm = u.value(q);
        g[n + i] = (vp - vm) / (2.0 * h);
    }
    return g;
}

double horizontal_gradient_sq(const HField& u, const HPoint& p) {
    return norm_sq(horizontal_gradient(u, p));
}

double sublaplacian(const HField& u, const HPoint& p) {
    if (u.sublaplacian) return u.sublaplacian(p);
    const std::size_t n = p.n();
    const double h = u.fd_step2 * std::max(1.0, gauge_norm(p));

    // Sample at +-h and +-2h along a straight flow through p.
    const auto flow_samples = [&](bool xdir, std::size_t i, auto&& eval, double out[4]) {
        HPoint q = p;
        for (int s = 0; s < 4; ++s) {
            const double step = (s == 0 ? -2.0 : s == 1 ? -1.0 : s == 2 ? 1.0 : 2.0) * h;
            q = p;
            if (xdir) {
                q.x[i] = p.x[i] + step;
                q.t = p.t + 2.0 * step * p.y[i];
            } else {
                q.y[i] = p.y[i] + step;
                q.t = p.t - 2.0 * step * p.x[i];
            }
            out[s] = eval(q);
        }
    };

    if (u.horizontal_gradient) {
        // X_i^2 u = X_i (X_i u): fourth-order difference of the analytic
        // gradient component along the flow.
        double lap = 0.0;
        double s[4];
        for (std::size_t i = 0; i < n; ++i) {
            flow_samples(true, i, [&](const HPoint& q) { return u.horizontal_gradient(q)[i]; }, s);
            lap += (s[0] - 8.0 * s[1] + 8.0 * s[2] - s[3]) / (12.0 * h);
            flow_samples(false, i, [&](const HPoint& q) { return u.horizontal_gradient(q)[n + i]; }, s);
            lap += (s[0] - 8.0 * s[1] + 8.0 * s[2] - s[3]) / (12.0 * h);
        }
        return lap;
    }

    // Fourth-order second differences of the value along the straight flows.
    double lap = 0.0;
    const double u0 = u.value(p);
    double s[4];
    for (std::size_t i = 0; i < n; ++i) {
        flow_samples(true, i, [&](const HPoint& q) { return u.value(q); }, s);
        lap += (-s[0] + 16.0 * s[1] - 30.0 * u0 + 16.0 * s[2] - s[3]) / (12.0 * h * h);
        flow_samples(false, i, [&](const HPoint& q) { return u.value(q); }, s);
        lap += (-s[0] + 16.0 * s[1] - 30.0 * u0 + 16.0 * s[2] - s[3]) / (12.0 * h * h);
    }
    return lap;
}

GaugeDerivatives gauge_derivatives(const HPoint& p) {
    const double s2 = norm_sq(p.x) + norm_sq(p.y);
    const double N = gauge_norm(p);
    if (N == 0.0) throw PoleError("gauge_derivatives: pole at the origin");

    const std::size_t n = p.n();
    GaugeDerivatives d;
    d.dX.resize(n);
    d.dY.resize(n);
    d.dXX.resize(n);
    d.dYY.resize(n);
    const double n3 = std::pow(N, -3.0);
    const double n7 = std::pow(N, -7.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double ax = s2 * p.x[i] + p.t * p.y[i];
        const double ay = s2 * p.y[i] - p.t * p.x[i];
        d.dX[i] = n3 * ax;
        d.dY[i] = n3 * ay;
        d.dXX[i] = -3.0 * n7 * ax * ax + n3 * (2.0 * p.x[i] * p.x[i] + s2 + 2.0 * p.y[i] * p.y[i]);
        d.dYY[i] = -3.0 * n7 * ay * ay + n3 * (2.0 * p.y[i] * p.y[i] + s2 + 2.0 * p.x[i] * p.x[i]);
        d.grad_sq += d.dX[i] * d.dX[i] + d.dY[i] * d.dY[i];
        d.lap += d.dXX[i] + d.dYY[i];
    }
    return d;
}

double fundamental_solution_residual(const HPoint& p, int n) {
    if (static_cast<std::size_t>(n) != p.n())
        throw std::invalid_argument("fundamental_solution_residual: dimension mismatch");
    const double N = gauge_norm(p);
    if (N == 0.0) throw PoleError("fundamental_solution_residual: pole at the origin");

    const double Q = 2.0 * n + 2.0;
    const double pw = 2.0 - Q;
    const GaugeDerivatives d = gauge_derivatives(p);
    // Delta(N^pw) = pw (pw-1) N^{pw-2} |grad N|^2 + pw N^{pw-1} Delta N, term by term.
    double res = 0.0;
    const double c1 = pw * (pw - 1.0) * std::pow(N, pw - 2.0);
    const double c2 = pw * std::pow(N, pw - 1.0);
    for (std::size_t i = 0; i < p.n(); ++i) {
        res += c1 * d.dX[i] * d.dX[i] + c2 * d.dXX[i];
        res += c1 * d.dY[i] * d.dY[i] + c2 * d.dYY[i];
    }
    return res;
}

double h_perimeter_density(const std::array<double, 3>& unit_normal, const HPoint& p) {
    if (p.n() != 1) throw std::invalid_argument("h_perimeter_density: only H^1 supported");
    const double nn = unit_normal[0] * unit_normal[0] + unit_normal[1] * unit_normal[1] +
                      unit_normal[2] * unit_normal[2];
    if (!(std::abs(nn - 1.0) < 1e-9))
        throw std::invalid_argument("h_perimeter_density: normal must be a unit vector");
    // X = (1, 0, 2y), Y = (0, 1, -2x) as vectors of R^3.
    const double px = unit_normal[0] + 2.0 * p.y[0] * unit_normal[2];
    const double py = unit_normal[1] - 2.0 * p.x[0] * unit_normal[2];
    return std::hypot(px, py);
}

} // namespace acfh
