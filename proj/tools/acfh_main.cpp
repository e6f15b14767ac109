#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acfh/euclid_eigen.hpp"
#include "acfh/fields.hpp"
#include "acfh/heis_eigen.hpp"
#include "acfh/heis_mono.hpp"
#include "acfh/table.hpp"
#include "acfh/verify.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct OutputOptions {
    std::string path = "-";
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "Output file, '-' for stdout");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int emit(const acfh::Table& t, const OutputOptions& out) {
    const std::string text = out.format == "json" ? acfh::to_json(t) : acfh::to_csv(t);
    if (out.path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out.path << "\n";
        return 1;
    }
    f << text;
    return 0;
}

std::string fmt(double v) { return acfh::format_double(v); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for two-phase monotonicity quantities on R^3 and the "
                 "first Heisenberg group"};
    app.require_subcommand(1);

    int mesh = 2048;
    acfh::HGridSpec hgrid;
    acfh::EGridSpec egrid;
    const auto add_grid_options = [&](CLI::App* cmd) {
        cmd->add_option("--n-rho", hgrid.n_rho, "Radial nodes")->check(CLI::Range(1, 4096));
        cmd->add_option("--n-phi", hgrid.n_phi, "phi nodes")->check(CLI::Range(1, 4096));
        cmd->add_option("--n-theta", hgrid.n_theta, "theta nodes")->check(CLI::Range(1, 4096));
    };
    const auto add_mesh_option = [&](CLI::App* cmd) {
        cmd->add_option("--mesh", mesh, "Eigen-solver cells")->check(CLI::Range(16, 65536));
    };

    // eigen-cap
    auto* cap = app.add_subcommand("eigen-cap", "First eigenvalue of a spherical cap on S^{n-1}");
    double cap_phi0 = pi / 2.0;
    int cap_dim = 3;
    OutputOptions cap_out;
    cap->add_option("--phi0", cap_phi0, "Cap half-angle in (0, pi)")->required();
    cap->add_option("--dim", cap_dim, "Ambient dimension")->check(CLI::Range(3, 16));
    add_mesh_option(cap);
    add_output_options(cap, cap_out);

    // eigen-sl
    auto* sl = app.add_subcommand("eigen-sl", "First eigenvalue of the gauge-sphere phi-interval");
    double sl_phi0 = 0.0, sl_phi1 = pi / 2.0;
    OutputOptions sl_out;
    sl->add_option("--phi0", sl_phi0, "Left endpoint")->required();
    sl->add_option("--phi1", sl_phi1, "Right endpoint")->required();
    add_mesh_option(sl);
    add_output_options(sl, sl_out);

    // bridge
    auto* bridge = app.add_subcommand("bridge", "lambda_H = 4 lambda_E across cap angles");
    std::vector<double> bridge_angles;
    OutputOptions bridge_out;
    bridge->add_option("--phi0", bridge_angles, "Cap angles (repeatable)");
    add_mesh_option(bridge);
    add_output_options(bridge, bridge_out);

    // phi
    auto* phi = app.add_subcommand("phi", "Euclidean product functional Phi(r)");
    std::string phi_pair = "x3";
    double phi_cap_angle = pi / 3.0;
    std::vector<double> phi_radii;
    OutputOptions phi_out;
    phi->add_option("--pair", phi_pair, "Test pair")->check(CLI::IsMember({"x3", "cap"}));
    phi->add_option("--phi0", phi_cap_angle, "Cap half-angle for --pair cap");
    phi->add_option("--r", phi_radii, "Radii in (0, 1] (repeatable)");
    add_grid_options(phi);
    add_output_options(phi, phi_out);

    // jbeta
    auto* jb = app.add_subcommand("jbeta", "Candidate functional J_beta(r) on a test pair");
    std::string jb_pair = "x";
    double jb_a = 1.0, jb_b = 1.0, jb_beta = 4.0;
    std::vector<double> jb_radii;
    OutputOptions jb_out;
    jb->add_option("--pair", jb_pair, "Test pair")->check(CLI::IsMember({"x", "t"}));
    jb->add_option("--a", jb_a, "First coefficient");
    jb->add_option("--b", jb_b, "Second coefficient");
    jb->add_option("--beta", jb_beta, "Exponent beta > 0");
    jb->add_option("--r", jb_radii, "Radii in (0, 1] (repeatable)");
    add_grid_options(jb);
    add_output_options(jb, jb_out);

    // quotient
    auto* quot = app.add_subcommand("quotient", "Boundary/volume quotient of a test field");
    std::string quot_field = "line";
    double quot_a = 1.0, quot_b = 0.0;
    OutputOptions quot_out;
    quot->add_option("--field", quot_field, "Field family")->check(CLI::IsMember({"line", "t"}));
    quot->add_option("--a", quot_a, "First coefficient");
    quot->add_option("--b", quot_b, "Second coefficient");
    add_grid_options(quot);
    add_output_options(quot, quot_out);

    // psi-table
    auto* psit = app.add_subcommand("psi-table", "Friedland-Hayman profile psi(s)");
    int psi_points = 9;
    OutputOptions psi_out;
    psit->add_option("--points", psi_points, "Uniform sample count")->check(CLI::Range(1, 100000));
    add_output_options(psit, psi_out);

    // verify
    auto* ver = app.add_subcommand("verify", "Run the full verification suite");
    OutputOptions ver_out;
    add_mesh_option(ver);
    add_grid_options(ver);
    add_output_options(ver, ver_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cap) {
            const acfh::EigenSolution s = acfh::cap_eigenvalue({cap_phi0, cap_dim}, mesh);
            acfh::Table t;
            t.command = "eigen-cap";
            t.config = {{"phi0", fmt(cap_phi0)}, {"dim", std::to_string(cap_dim)},
                        {"mesh", std::to_string(mesh)}};
            t.columns = {"phi0", "dim", "mesh_size", "lambda", "alpha", "est_error"};
            t.rows.push_back({cap_phi0, static_cast<long long>(cap_dim),
                              static_cast<long long>(s.mesh_size), s.lambda, s.alpha, s.est_error});
            return emit(t, cap_out);
        }
        if (*sl) {
            const acfh::EigenSolution s = acfh::sl_eigen(acfh::phi_interval(sl_phi0, sl_phi1), mesh);
            acfh::Table t;
            t.command = "eigen-sl";
            t.config = {{"phi0", fmt(sl_phi0)}, {"phi1", fmt(sl_phi1)}, {"mesh", std::to_string(mesh)}};
            t.columns = {"phi0", "phi1", "mesh_size", "lambda", "alpha", "est_error"};
            t.rows.push_back({sl_phi0, sl_phi1, static_cast<long long>(s.mesh_size), s.lambda,
                              s.alpha, s.est_error});
            return emit(t, sl_out);
        }
        if (*bridge) {
            if (bridge_angles.empty())
                bridge_angles = {pi / 6.0, pi / 4.0, pi / 3.0, pi / 2.0, 2.0 * pi / 3.0};
            acfh::Table t;
            t.command = "bridge";
            t.config = {{"mesh", std::to_string(mesh)}};
            t.columns = {"phi0", "lambda_h", "lambda_e", "ratio"};
            for (const double a : bridge_angles) {
                const acfh::BridgeResult b = acfh::euclid_bridge(a, mesh);
                t.rows.push_back({a, b.lambda_h, b.lambda_e, b.lambda_h / b.lambda_e});
            }
            return emit(t, bridge_out);
        }
        if (*phi) {
            if (phi_radii.empty()) phi_radii = {0.5, 1.0};
            const acfh::TwoPhasePair pair = phi_pair == "x3"
                                                ? acfh::fields::x3_pair()
                                                : acfh::fields::complementary_cap_pair(phi_cap_angle);
            acfh::Table t;
            t.command = "phi";
            t.config = {{"pair", phi_pair}};
            if (phi_pair == "cap") t.config.emplace_back("phi0", fmt(phi_cap_angle));
            t.columns = {"r", "phi"};
            for (const double r : phi_radii)
                t.rows.push_back({r, acfh::phi_functional(pair, r, egrid)});
            return emit(t, phi_out);
        }
        if (*jb) {
            if (jb_radii.empty()) jb_radii = {0.25, 0.5, 0.75, 1.0};
            const acfh::HTwoPhasePair pair = jb_pair == "x" ? acfh::fields::linear_pair(jb_a, jb_b)
                                                            : acfh::fields::t_pair(jb_a, jb_b);
            acfh::Table t;
            t.command = "jbeta";
            t.config = {{"pair", jb_pair}, {"a", fmt(jb_a)}, {"b", fmt(jb_b)}, {"beta", fmt(jb_beta)}};
            t.columns = {"r", "beta", "jbeta"};
            for (const double r : jb_radii)
                t.rows.push_back({r, jb_beta, acfh::j_beta(pair, r, jb_beta, hgrid)});
            return emit(t, jb_out);
        }
        if (*quot) {
            const acfh::HField u = quot_field == "line" ? acfh::fields::linear_plus(quot_a, quot_b)
                                                        : acfh::fields::t_plus(quot_a == 0.0 ? 1.0 : quot_a);
            acfh::Table t;
            t.command = "quotient";
            t.config = {{"field", quot_field}, {"a", fmt(quot_a)}, {"b", fmt(quot_b)}};
            t.columns = {"field", "a", "b", "quotient"};
            t.rows.push_back({quot_field, quot_a, quot_b, acfh::boundary_quotient(u, hgrid)});
            return emit(t, quot_out);
        }
        if (*psit) {
            acfh::Table t;
            t.command = "psi-table";
            t.config = {{"points", std::to_string(psi_points)}};
            t.columns = {"s", "psi"};
            std::set<double> ss;
            for (int j = 1; j <= psi_points; ++j)
                ss.insert(j / static_cast<double>(psi_points + 1));
            ss.insert(0.25); // branch anchors are always tabulated
            ss.insert(0.5);
            for (const double s : ss) t.rows.push_back({s, acfh::psi(s)});
            return emit(t, psi_out);
        }
        if (*ver) {
            acfh::VerifyOptions opt;
            opt.mesh = mesh;
            opt.hgrid = hgrid;
            opt.egrid = egrid;
            const std::vector<acfh::Criterion> cs = acfh::run_acceptance(opt);
            acfh::Table t;
            t.command = "verify";
            t.config = {{"mesh", std::to_string(mesh)}};
            t.columns = {"criterion", "check", "measured", "expected", "tolerance", "pass"};
            for (const auto& c : cs)
                for (const auto& row : c.rows)
                    t.rows.push_back({static_cast<long long>(c.id), row.name, row.measured,
                                      row.expected, row.tolerance, row.pass});
            const int rc = emit(t, ver_out);
            if (rc != 0) return rc;
            for (const auto& c : cs)
                std::cerr << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "\n";
            return acfh::all_pass(cs) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
