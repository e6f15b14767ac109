#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace acfh {

/// Polynomial in (x, y, t) with exact coefficient arithmetic on monomials;
/// supports the vector fields X = d/dx + 2y d/dt and Y = d/dy - 2x d/dt,
/// which keeps horizontal derivatives of test fields exact.
class Poly3 {
public:
    Poly3() = default;

    static Poly3 monomial(double c, int i, int j, int k) {
        Poly3 p;
        if (c != 0.0) p.terms_[{i, j, k}] = c;
        return p;
    }

    double operator()(double x, double y, double t) const {
        double s = 0.0;
        for (const auto& [m, c] : terms_)
            s += c * ipow(x, std::get<0>(m)) * ipow(y, std::get<1>(m)) * ipow(t, std::get<2>(m));
        return s;
    }

    Poly3 operator+(const Poly3& o) const {
        Poly3 r = *this;
        for (const auto& [m, c] : o.terms_) add(r, m, c);
        return r;
    }

    Poly3 operator-(const Poly3& o) const {
        Poly3 r = *this;
        for (const auto& [m, c] : o.terms_) add(r, m, -c);
        return r;
    }

    Poly3 scaled(double s) const {
        Poly3 r;
        for (const auto& [m, c] : terms_)
            if (c * s != 0.0) r.terms_[m] = c * s;
        return r;
    }

    Poly3 dx() const { return derive(0); }
    Poly3 dy() const { return derive(1); }
    Poly3 dt() const { return derive(2); }

    Poly3 mul_x() const { return shift(1, 0, 0); }
    Poly3 mul_y() const { return shift(0, 1, 0); }

    Poly3 applyX() const { return dx() + dt().mul_y().scaled(2.0); }
    Poly3 applyY() const { return dy() - dt().mul_x().scaled(2.0); }

    bool same_as(const Poly3& o, double tol = 0.0) const {
        Poly3 d = *this - o;
        for (const auto& [m, c] : d.terms_)
            if (std::abs(c) > tol) return false;
        return true;
    }

    std::size_t term_count() const { return terms_.size(); }

private:
    using Mono = std::tuple<int, int, int>;
    std::map<Mono, double> terms_;

    static double ipow(double v, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    }

    static void add(Poly3& p, const Mono& m, double c) {
        auto it = p.terms_.find(m);
        if (it == p.terms_.end()) {
            if (c != 0.0) p.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0.0) p.terms_.erase(it);
        }
    }

    Poly3 derive(int axis) const {
        Poly3 r;
        for (const auto& [m, c] : terms_) {
            auto [i, j, k] = m;
            const int e = axis == 0 ? i : axis == 1 ? j : k;
            if (e == 0) continue;
            Mono dm = axis == 0 ? Mono{i - 1, j, k} : axis == 1 ? Mono{i, j - 1, k} : Mono{i, j, k - 1};
            add(r, dm, c * e);
        }
        return r;
    }

    Poly3 shift(int di, int dj, int dk) const {
        Poly3 r;
        for (const auto& [m, c] : terms_) {
            auto [i, j, k] = m;
            r.terms_[{i + di, j + dj, k + dk}] = c;
        }
        return r;
    }
};

} // namespace acfh
