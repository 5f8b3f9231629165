// Acceptance suite: one PASS/FAIL line per exit criterion.
//
// Usage: acceptance <path-to-rydjc-cli>

#include "cli.hpp"
#include "figures.hpp"
#include "table.hpp"

#include "rydjc/coherent_dynamics.hpp"
#include "rydjc/eigensystem.hpp"
#include "rydjc/fock_dynamics.hpp"
#include "rydjc/grid.hpp"
#include "rydjc/oracle.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rydjc;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what)
    {
        passed = passed && ok;
        details.push_back(std::string(ok ? "ok    " : "FAILED") + "  " + what);
    }
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string bound(const std::string& label, double value, const char* op, double limit)
{
    return label + " = " + sci(value) + " " + op + " " + sci(limit);
}

double max_gap(const SubspaceState& a, const SubspaceState& b)
{
    return std::max({std::abs(a.mu - b.mu), std::abs(a.nu - b.nu), std::abs(a.xi - b.xi)});
}

const std::vector<unsigned> kFockPhotons{0, 1, 3, 10};
const std::vector<double> kFockDetunings{0.0, 0.2, 0.7};
constexpr std::size_t kFockPoints = 2000;

std::vector<double> fock_grid(unsigned n, const ModelParams& p)
{
    return linspace(0.0, 50.0 / rabi_frequency(n, p), kFockPoints);
}

Outcome eigensystem_correctness()
{
    Outcome o;
    double residual = 0.0;
    double orthogonality = 0.0;
    double det_defect = 0.0;
    for (const double lambda : {0.1, 1.0, 3.0}) {
        for (const double delta : {-2.0, -0.5, 0.0, 0.2, 0.5, 2.0}) {
            const auto p = ModelParams::with_detuning(delta, 1.0, lambda);
            for (unsigned n = 0; n <= 50; ++n) {
                const auto e = eigen_system(n, p);
                const Eigen::Matrix3d h = oracle::subspace_hamiltonian(n, p).matrix.real();
                const Vec3 vecs[3] = {e.v_asym, e.v_plus, e.v_minus};
                const Vec3 energies = e.energies();
                Eigen::Matrix3d r;
                for (int i = 0; i < 3; ++i) {
                    const Eigen::Vector3d v(vecs[i][0], vecs[i][1], vecs[i][2]);
                    residual = std::max(residual, (h * v - energies[i] * v).cwiseAbs().maxCoeff());
                    for (int k = 0; k < 3; ++k) {
                        r(k, i) = e.rotation[k][i];
                    }
                }
                orthogonality =
                    std::max(orthogonality, (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
                det_defect = std::max(det_defect, std::abs(r.determinant() - 1.0));
            }
        }
    }
    o.require(residual < 1e-12, bound("max |Hv - Ev|_inf", residual, "<", 1e-12));
    o.require(orthogonality <= 1e-12, bound("max |R^T R - I|", orthogonality, "<=", 1e-12));
    o.require(det_defect <= 1e-12, bound("max |det R - 1|", det_defect, "<=", 1e-12));
    bool exact = true;
    for (unsigned n = 0; n <= 50; ++n) {
        for (const double lambda : {0.1, 1.0, 3.0}) {
            exact = exact && mixing_angle(n, ModelParams{1.0, 1.0, lambda}) == kPi / 4;
        }
    }
    o.require(exact, "phi_n(0) == pi/4 bit-exact");
    return o;
}

Outcome detuning_amplitude()
{
    Outcome o;
    const double a0 = sym_amplitude(0, ModelParams::with_detuning(0.5, 1.0, 1.0));
    o.require(std::abs(a0 - 0.97) <= 0.005, "sin^2(2 phi_0) = " + std::to_string(a0) + " within 0.97 +- 0.005");
    const auto p = ModelParams::with_detuning(1.0, 1.0, 1.0);
    const double a[3] = {sym_amplitude(0, p), sym_amplitude(2, p), sym_amplitude(10, p)};
    o.require(a[0] < a[1] && a[1] < a[2] && a[2] < 1.0,
              "Delta = omega_0: " + std::to_string(a[0]) + " < " + std::to_string(a[1]) + " < " +
                  std::to_string(a[2]) + " < 1");
    return o;
}

Outcome fock_oracle_equivalence()
{
    Outcome o;
    std::mt19937_64 rng(20240917);
    std::normal_distribution<double> gauss;
    std::vector<SubspaceState> custom(20);
    for (auto& s : custom) {
        s = {{gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)}};
        const double norm = std::sqrt(s.norm_squared());
        s = {s.mu / norm, s.nu / norm, s.xi / norm};
    }

    double amp_gap = 0.0;
    double norm_gap = 0.0;
    std::size_t samples = 0;
    for (const unsigned n : kFockPhotons) {
        for (const double delta : kFockDetunings) {
            const auto p = ModelParams::with_detuning(delta, 1.0, 1.0);
            const oracle::SpectralPropagator prop(oracle::subspace_hamiltonian(n, p));
            std::vector<FockScenario> scenarios;
            for (const auto kind : {FockCase::A, FockCase::B, FockCase::C, FockCase::Beta}) {
                scenarios.push_back({kind, n, p, {}});
            }
            for (const auto& s : custom) {
                scenarios.push_back({FockCase::Custom, n, p, s});
            }
            const auto grid = fock_grid(n, p);
            for (const auto& sc : scenarios) {
                const auto v0 = oracle::to_vector(sc.initial_state());
                for (const double t : grid) {
                    const auto closed = amplitudes(sc, t);
                    const auto ref = oracle::to_subspace_state(prop.evolve(v0, t));
                    amp_gap = std::max(amp_gap, max_gap(closed, ref));
                    norm_gap = std::max(norm_gap, std::abs(closed.norm_squared() - 1.0));
                    ++samples;
                }
            }
        }
    }
    o.require(amp_gap < 1e-10, bound("max amplitude gap vs 3x3 expm", amp_gap, "<", 1e-10));
    o.require(norm_gap < 1e-12, bound("max norm defect", norm_gap, "<", 1e-12));
    o.details.push_back("        " + std::to_string(samples) + " samples");
    return o;
}

Outcome case_c_structure()
{
    Outcome o;
    const ModelParams p{};
    double p3_gap = 0.0;
    double diff_gap = 0.0;
    double p3_max = 0.0;
    double turn_gap = 0.0;
    for (const unsigned n : kFockPhotons) {
        const FockScenario c{FockCase::C, n, p, {}};
        const double omega = rabi_frequency(n, p);
        for (const double t : fock_grid(n, p)) {
            const auto pr = probabilities(c, t);
            p3_gap = std::max(p3_gap, std::abs(pr.p3 - 0.5 * std::pow(std::sin(omega * t), 2)));
            diff_gap = std::max(diff_gap, std::abs(pr.p1 - pr.p2 - std::cos(omega * t)));
            p3_max = std::max(p3_max, pr.p3);
        }
        // turning points t = k pi / Omega_n; period 2 pi / Omega_n
        for (int k = 0; k <= 8; ++k) {
            const auto pr = probabilities(c, k * kPi / omega);
            const double want1 = (k % 2 == 0) ? 1.0 : 0.0;
            turn_gap = std::max({turn_gap, std::abs(pr.p1 - want1), std::abs(pr.p2 - (1.0 - want1))});
            p3_max = std::max(p3_max, probabilities(c, (k + 0.5) * kPi / omega).p3);
        }
    }
    o.require(turn_gap <= 1e-12, bound("p1, p2 at k pi/Omega_n vs alternating 1/0", turn_gap, "<=", 1e-12));
    o.require(p3_gap <= 1e-12, bound("max |p3 - sin^2(Omega_n t)/2|", p3_gap, "<=", 1e-12));
    o.require(std::abs(p3_max - 0.5) <= 1e-12 && p3_max <= 0.5 + 1e-12,
              bound("|max p3 - 1/2|", std::abs(p3_max - 0.5), "<=", 1e-12));
    o.require(diff_gap <= 1e-12, bound("max |p1 - p2 - cos(Omega_n t)|", diff_gap, "<=", 1e-12));
    return o;
}

Outcome complementarity()
{
    Outcome o;
    double beta_gap = 0.0;
    double b_gap = 0.0;
    for (const unsigned n : kFockPhotons) {
        for (const double delta : kFockDetunings) {
            const auto p = ModelParams::with_detuning(delta, 1.0, 1.0);
            const FockScenario b{FockCase::B, n, p, {}};
            const FockScenario beta{FockCase::Beta, n, p, {}};
            for (const double t : fock_grid(n, p)) {
                const auto pb = probabilities(b, t);
                beta_gap = std::max(beta_gap, std::abs(probabilities(beta, t).p_sym + pb.p_sym - 1.0));
                b_gap = std::max(b_gap, std::abs(pb.p_sym + pb.p3 - 1.0));
            }
        }
    }
    o.require(beta_gap <= 1e-12, bound("max |P_beta(sym) + P_B(sym) - 1|", beta_gap, "<=", 1e-12));
    o.require(b_gap <= 1e-12, bound("max |P_B(sym) + P_B(psi_3) - 1|", b_gap, "<=", 1e-12));
    return o;
}

Outcome entangling_time_check()
{
    Outcome o;
    const ModelParams p{};
    double prob_gap = 0.0;
    double eig_gap = 0.0;
    for (const unsigned n : kFockPhotons) {
        const double t_star = entangling_time(n, p);
        const auto pr = probabilities(FockScenario{FockCase::B, n, p, {}}, t_star);
        prob_gap = std::max({prob_gap, std::abs(pr.p_sym - 0.5), std::abs(pr.p3 - 0.5)});

        const unsigned cap = n + 1;
        const oracle::FullSpaceModel model(p, oracle::Couplings::equal(p.lambda), cap);
        const auto psi = model.evolve(oracle::embed(SubspaceState::gg(), n, cap), t_star);
        const auto ev = oracle::partial_trace_atoms(psi).eigenvalues();
        eig_gap = std::max({eig_gap, std::abs(ev(0)), std::abs(ev(1) - 0.5), std::abs(ev(2) - 0.5)});
    }
    o.require(prob_gap <= 1e-12, bound("max |p - 1/2| for p_sym, p3", prob_gap, "<=", 1e-12));
    o.require(eig_gap <= 1e-10, bound("reduced-state eigenvalues vs (0, 1/2, 1/2)", eig_gap, "<=", 1e-10));
    return o;
}

// Coherent runs shared by the collapse/revival and density-matrix criteria.
struct CoherentRuns {
    struct Run {
        double n_bar;
        std::vector<EntanglementPoint> points;
    };
    std::vector<Run> runs;
    double tail_tol = Truncation{}.tail_tol;
};

CoherentRuns& coherent_runs()
{
    static CoherentRuns cache = [] {
        CoherentRuns c;
        for (const double n_bar : {10.0, 20.0, 50.0}) {
            const auto cfg = CoherentConfig::with_mean_photons(n_bar, ModelParams{});
            c.runs.push_back({n_bar, time_series(cfg, linspace(0.0, 50.0, 2001))});
            c.runs.push_back({n_bar, time_series(cfg, linspace(0.0, 50.0, 500))});
        }
        return c;
    }();
    return cache;
}

Outcome collapse_revival(const std::filesystem::path& work)
{
    Outcome o;
    const auto& runs = coherent_runs();
    double p0 = 0.0;
    double eps0 = 0.0;
    for (const auto& r : runs.runs) {
        p0 = std::max(p0, std::abs(r.points.front().p_sym));
        eps0 = std::max(eps0, std::abs(r.points.front().epsilon));
    }
    o.require(p0 == 0.0, bound("(a) max |p_sym(0)|", p0, "==", 0.0));
    // epsilon(0) = 1 - P(gg)^2 with P(gg) short of 1 by the dropped Poisson tail
    o.require(eps0 <= 10.0 * runs.tail_tol, bound("(a) max |eps(0)|", eps0, "<=", 10.0 * runs.tail_tol));

    for (const auto& r : runs.runs) {
        if (r.points.size() != 2001) {
            continue;
        }
        double eps_max = 0.0;
        for (const auto& pt : r.points) {
            eps_max = std::max(eps_max, pt.epsilon);
        }
        o.require(eps_max >= 0.49, "(b) n_bar " + std::to_string(static_cast<int>(r.n_bar)) +
                                       ": max eps = " + std::to_string(eps_max) + " >= 0.49");
    }

    // (c) from the CSV the CLI would hand to a plotting script
    const auto& preset = cli::figure_preset(cli::FigureId::fig7c);
    const auto csv = work / "fig7c.csv";
    {
        std::ofstream f(csv);
        cli::write_csv(f, cli::figure_table(preset));
    }
    std::ifstream in(csv);
    const auto table = cli::read_csv(in);
    const auto x = table.column_index(std::string(preset.axis_column));
    const auto ps = table.column_index("p_sym");
    const auto ep = table.column_index("epsilon");
    double sum = 0.0;
    double eps_min = 1.0;
    int count = 0;
    for (const auto& row : table.rows) {
        if (row[x] >= preset.plateau.first && row[x] <= preset.plateau.second) {
            sum += row[ps];
            eps_min = std::min(eps_min, row[ep]);
            ++count;
        }
    }
    const double mean = sum / count;
    o.require(std::abs(mean - 0.5) <= 0.02, "(c) n_bar 50: p_sym mean over t*lambda in [" +
                                                std::to_string(preset.plateau.first) + ", " +
                                                std::to_string(preset.plateau.second) +
                                                "] = " + std::to_string(mean) + " within 0.5 +- 0.02");
    o.require(eps_min < 0.1, "(c) n_bar 50: min eps over the plateau = " + std::to_string(eps_min) + " < 0.1");

    for (const double n_bar : {10.0, 20.0, 50.0}) {
        const auto cfg = CoherentConfig::with_mean_photons(n_bar, ModelParams{});
        const auto grid = linspace(0.0, 50.0, 500);
        const auto series = time_series(cfg, grid);
        const auto run = oracle::full_space_evolve(cfg, {}, grid);
        double gap = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto ref = oracle::partial_trace_atoms(run.states[i]).sym_block();
            if (!ref) {
                gap = 1.0;
                break;
            }
            gap = std::max({gap, std::abs(series[i].p_sym - ref->p_sym), std::abs(series[i].p_gg - ref->p_gg),
                            std::abs(series[i].gamma - ref->gamma), std::abs(series[i].epsilon - entanglement(*ref))});
        }
        o.require(gap < 1e-8, bound("(d) n_bar " + std::to_string(static_cast<int>(n_bar)) +
                                        ": series vs full-space oracle",
                                    gap, "<", 1e-8));
    }
    return o;
}

Outcome density_sanity()
{
    Outcome o;
    const auto& runs = coherent_runs();
    double trace_gap = 0.0;
    double psd = 0.0;
    double eps_lo = 1.0;
    double eps_hi = 0.0;
    double cs_excess = -1.0;
    double identity_gap = 0.0;
    for (const auto& r : runs.runs) {
        for (const auto& pt : r.points) {
            const AtomDensityMatrix rho{pt.p_sym, pt.p_gg, pt.gamma};
            trace_gap = std::max(trace_gap, std::abs(rho.trace() - 1.0));
            psd = std::max(psd, -rho.eigenvalues().first);
            eps_lo = std::min(eps_lo, pt.epsilon);
            eps_hi = std::max(eps_hi, pt.epsilon);
            cs_excess = std::max(cs_excess, std::norm(pt.gamma) - pt.p_sym * pt.p_gg);
            const double lhs = 1.0 - (pt.p_sym * pt.p_sym + pt.p_gg * pt.p_gg + 2.0 * std::norm(pt.gamma));
            const double rhs = 2.0 * (pt.p_sym * pt.p_gg - std::norm(pt.gamma));
            identity_gap = std::max(identity_gap, std::abs(lhs - rhs));
        }
    }
    o.require(trace_gap <= 10.0 * runs.tail_tol, bound("max |tr rho - 1|", trace_gap, "<=", 10.0 * runs.tail_tol));
    o.require(psd <= 1e-12, bound("most negative eigenvalue", -psd, ">=", -1e-12));
    o.require(eps_lo >= 0.0 && eps_hi <= 0.5,
              "eps range [" + sci(eps_lo) + ", " + sci(eps_hi) + "] inside [0, 1/2]");
    o.require(cs_excess <= 1e-12, bound("max |gamma|^2 - p_sym p_gg", cs_excess, "<=", 1e-12));
    o.require(identity_gap <= 1e-12,
              bound("max |1 - (p_sym^2 + p_gg^2 + 2|gamma|^2) - 2(p_sym p_gg - |gamma|^2)|", identity_gap, "<=",
                    1e-12));
    return o;
}

int run_cli(const std::string& cli, const std::string& args, const std::filesystem::path& log)
{
    const std::string cmd = "'" + cli + "' " + args + " > '" + log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

Outcome cli_determinism(const std::string& cli, const std::filesystem::path& work)
{
    Outcome o;
    const auto log = work / "cli.log";
    for (const auto id : cli::all_figures()) {
        const std::string name(cli::name(id));
        const auto first = work / (name + "_1.csv");
        const auto second = work / (name + "_2.csv");
        const int c1 = run_cli(cli, "figure " + name + " --out '" + first.string() + "'", log);
        const int c2 = run_cli(cli, "figure " + name + " --out '" + second.string() + "'", log);
        const auto a = slurp(first);
        const bool same = c1 == 0 && c2 == 0 && !a.empty() && a == slurp(second);
        o.require(same, "figure " + name + ": two runs byte-identical (" + std::to_string(a.size()) + " bytes)");
    }
    const int ok = run_cli(cli, "verify", log);
    o.require(ok == 0, "verify exits " + std::to_string(ok) + " (want 0)");
    const int broken = run_cli(cli, "verify --tol-scale 1e-9", log);
    o.require(broken == 2, "verify with tolerances scaled by 1e-9 exits " + std::to_string(broken) + " (want 2)");
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-rydjc-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const auto work = std::filesystem::temp_directory_path() / ("rydjc_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(work);

    struct Criterion {
        std::string name;
        double time_limit;  // seconds; <= 0 means none
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria{
        {"eigensystem correctness", 1.0, eigensystem_correctness},
        {"detuning amplitude", 1.0, detuning_amplitude},
        {"Fock closed forms vs oracle", 10.0, fock_oracle_equivalence},
        {"case C structure at resonance", 0.0, case_c_structure},
        {"complementarity identities", 0.0, complementarity},
        {"entangling time", 0.0, entangling_time_check},
        {"coherent collapse and revival", 60.0, [&] { return collapse_revival(work); }},
        {"density-matrix sanity", 0.0, density_sanity},
        {"CLI determinism and verify exit codes", 0.0, [&] { return cli_determinism(cli, work); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.require(false, std::string("threw: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0.0) {
            o.require(secs < c.time_limit, "runtime " + std::to_string(secs) + " s < " +
                                               std::to_string(c.time_limit) + " s");
        }
        std::printf("%s  %-40s %8.3f s\n", o.passed ? "PASS" : "FAIL", c.name.c_str(), secs);
        for (const auto& d : o.details) {
            std::printf("        %s\n", d.c_str());
        }
        failed += o.passed ? 0 : 1;
    }
    std::filesystem::remove_all(work);
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
