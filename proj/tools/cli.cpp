#include "cli.hpp"

#include "figures.hpp"
#include "scenarios.hpp"
#include "table.hpp"

#include "CLI11.hpp"

#include "rydjc/grid.hpp"
#include "rydjc/oracle.hpp"
#include "rydjc/verification.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace rydjc::cli {
namespace {

constexpr std::array<std::string_view, 7> kFigureNames{"fig4", "fig5", "fig6a", "fig6b", "fig7a", "fig7b", "fig7c"};

const std::map<std::string, FockCase> kCaseNames{
    {"A", FockCase::A}, {"B", FockCase::B}, {"C", FockCase::C}, {"beta", FockCase::Beta}, {"custom", FockCase::Custom}};

// Options collected before they are folded into a RunConfig.
struct RawOptions {
    std::optional<double> omega_f;
    std::optional<double> omega_0;
    std::optional<double> lambda;
    std::optional<double> delta;
    std::optional<double> t_start;
    std::optional<double> t_end;
    std::optional<std::size_t> t_points;
    std::optional<std::string> out;
    std::string format = "csv";

    unsigned n = 0;
    std::optional<unsigned> n_max;
    FockCase fock_case = FockCase::B;
    std::vector<double> state;
    bool normalize = false;

    std::optional<double> n_bar;
    std::optional<double> alpha_re;
    std::optional<double> alpha_im;
    std::optional<double> tail_tol;
    std::optional<unsigned> cutoff;
    std::optional<unsigned> photon_cap;
    std::string method = "series";

    std::string figure;
    double tol_scale = 1.0;
};

void add_model_options(CLI::App& app, RawOptions& raw)
{
    auto* omega_f = app.add_option("--omega-f", raw.omega_f, "Field frequency");
    app.add_option("--omega-0", raw.omega_0, "Atomic transition frequency");
    app.add_option("--lambda", raw.lambda, "Atom-field coupling");
    app.add_option("--delta", raw.delta, "Detuning omega_f - omega_0")->excludes(omega_f);
    app.add_option("--t-start", raw.t_start, "First time point");
    app.add_option("--t-end", raw.t_end, "Last time point");
    app.add_option("--t-points", raw.t_points, "Number of time points");
    app.add_option("--out", raw.out, "Output file (stdout when omitted)");
    app.add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

SubspaceState custom_state_from(const RawOptions& raw)
{
    if (raw.state.size() != 6) {
        throw UsageError("--state takes six numbers: re_mu im_mu re_nu im_nu re_xi im_xi");
    }
    SubspaceState s{{raw.state[0], raw.state[1]}, {raw.state[2], raw.state[3]}, {raw.state[4], raw.state[5]}};
    if (raw.normalize) {
        const double norm = std::sqrt(s.norm_squared());
        if (!(norm > 0.0)) {
            throw UsageError("--state is the zero vector");
        }
        s.mu /= norm;
        s.nu /= norm;
        s.xi /= norm;
    }
    return s;
}

RunConfig fold(const RawOptions& raw, Scenario scenario)
{
    RunConfig cfg;
    cfg.scenario = scenario;

    const double omega_0 = raw.omega_0.value_or(1.0);
    const double lambda = raw.lambda.value_or(1.0);
    if (raw.delta) {
        cfg.params = ModelParams::with_detuning(*raw.delta, omega_0, lambda);
    } else {
        cfg.params = ModelParams{raw.omega_f.value_or(omega_0), omega_0, lambda};
    }

    cfg.time.start = raw.t_start.value_or(cfg.time.start);
    cfg.time.end = raw.t_end.value_or(cfg.time.end);
    cfg.time.points = raw.t_points.value_or(cfg.time.points);

    if (raw.out) {
        cfg.out = *raw.out;
    }
    cfg.format = raw.format == "json" ? OutputFormat::json : OutputFormat::csv;

    cfg.n = raw.n;
    cfg.n_max = raw.n_max;
    cfg.fock_case = raw.fock_case;
    if (scenario == Scenario::fock) {
        if (raw.fock_case == FockCase::Custom) {
            cfg.custom_state = custom_state_from(raw);
        } else if (!raw.state.empty()) {
            throw UsageError("--state is only valid with --case custom");
        }
    }

    if (raw.n_bar) {
        if (!(*raw.n_bar >= 0.0)) {
            throw UsageError("--n-bar must be non-negative");
        }
        cfg.alpha = {std::sqrt(*raw.n_bar), 0.0};
    } else {
        cfg.alpha = {raw.alpha_re.value_or(0.0), raw.alpha_im.value_or(0.0)};
    }
    if (raw.cutoff) {
        cfg.truncation = Truncation::fixed(*raw.cutoff);
    }
    if (raw.tail_tol) {
        cfg.truncation.tail_tol = *raw.tail_tol;
    }
    cfg.method = raw.method == "oracle" ? CoherentMethod::oracle : CoherentMethod::series;
    cfg.photon_cap = raw.photon_cap;

    if (scenario == Scenario::figure) {
        const auto id = parse_figure_id(raw.figure);
        if (!id) {
            throw UsageError("unknown figure '" + raw.figure + "'");
        }
        cfg.figure = *id;
    }
    cfg.tol_scale = raw.tol_scale;
    return cfg;
}

std::ostream& open_output(const RunConfig& cfg, std::ostream& fallback, std::ofstream& file)
{
    if (!cfg.out) {
        return fallback;
    }
    file.open(*cfg.out, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + cfg.out->string() + " for writing");
    }
    return file;
}

void emit(const RunConfig& cfg, const Table& table, std::ostream& os)
{
    if (cfg.format == OutputFormat::json) {
        write_json(os, table);
    } else {
        write_csv(os, table);
    }
}

void finish(const RunConfig& cfg, std::ofstream& file)
{
    if (!cfg.out) {
        return;
    }
    file.close();
    if (!file) {
        throw IoError("failed writing " + cfg.out->string());
    }
}

}  // namespace

std::string_view name(FigureId id) noexcept { return kFigureNames[static_cast<std::size_t>(id)]; }

std::optional<FigureId> parse_figure_id(std::string_view text) noexcept
{
    for (std::size_t i = 0; i < kFigureNames.size(); ++i) {
        if (kFigureNames[i] == text) {
            return static_cast<FigureId>(i);
        }
    }
    return std::nullopt;
}

std::vector<double> TimeGrid::values() const { return linspace(start, end, points); }

void validate(const RunConfig& cfg)
{
    try {
        validate_params(cfg.params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool timed = cfg.scenario == Scenario::fock || cfg.scenario == Scenario::coherent;
    if (timed) {
        if (!std::isfinite(cfg.time.start) || !std::isfinite(cfg.time.end) || !(cfg.time.end > cfg.time.start)) {
            throw UsageError("--t-end must be greater than --t-start");
        }
        if (cfg.time.points < 2) {
            throw UsageError("--t-points must be at least 2");
        }
    }
    if (cfg.scenario == Scenario::eig && cfg.n_max && *cfg.n_max < cfg.n) {
        throw UsageError("--n-max must not be below --n");
    }
    if (cfg.scenario == Scenario::coherent) {
        try {
            validate(CoherentConfig{cfg.alpha, cfg.params, cfg.truncation});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (cfg.photon_cap && cfg.method != CoherentMethod::oracle) {
            throw UsageError("--photon-cap applies only to --method oracle");
        }
    }
    if (cfg.scenario == Scenario::fock && cfg.fock_case == FockCase::Custom) {
        try {
            require_normalized(cfg.custom_state);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string(e.what()) + "; pass --normalize to rescale");
        }
    }
    if (cfg.scenario == Scenario::verify && !(cfg.tol_scale > 0.0)) {
        throw UsageError("--tol-scale must be positive");
    }
}

RunConfig parse_config(std::span<const std::string> args)
{
    RawOptions raw;
    CLI::App app{"Two Rydberg-blockaded atoms coupled to a single field mode", "rydjc"};
    app.fallthrough();
    app.set_config("--config", "", "TOML or INI file; flags override its values");
    app.require_subcommand(1);
    add_model_options(app, raw);

    auto* eig = app.add_subcommand("eig", "Closed-form eigensystems of the subspace blocks");
    eig->add_option("--n", raw.n, "Photon number (first block)");
    eig->add_option("--n-max", raw.n_max, "Last block; defaults to --n");

    auto* fock = app.add_subcommand("fock", "Evolution with the field in a number state");
    fock->add_option("--n", raw.n, "Photon number of the block");
    fock->add_option("--case", raw.fock_case, "Initial state: A, B, C, beta or custom")
        ->transform(CLI::CheckedTransformer(kCaseNames));
    fock->add_option("--state", raw.state, "Custom amplitudes: re_mu im_mu re_nu im_nu re_xi im_xi")->expected(6);
    fock->add_flag("--normalize", raw.normalize, "Rescale --state to unit norm");

    auto* coherent = app.add_subcommand("coherent", "Evolution with the field in a coherent state");
    auto* n_bar = coherent->add_option("--n-bar", raw.n_bar, "Mean photon number (real alpha)");
    coherent->add_option("--alpha-re", raw.alpha_re, "Re alpha")->excludes(n_bar);
    coherent->add_option("--alpha-im", raw.alpha_im, "Im alpha")->excludes(n_bar);
    coherent->add_option("--tail-tol", raw.tail_tol, "Truncation error bound for the automatic cutoff");
    coherent->add_option("--cutoff", raw.cutoff, "Fixed photon-number cutoff M");
    coherent->add_option("--method", raw.method, "series or oracle")->check(CLI::IsMember({"series", "oracle"}));
    coherent->add_option("--photon-cap", raw.photon_cap, "Fock-space cap for --method oracle");

    auto* verify = app.add_subcommand("verify", "Check every closed form against the brute-force oracle");
    verify->add_option("--tol-scale", raw.tol_scale, "Multiply every tolerance");

    auto* figure = app.add_subcommand("figure", "Write a locked figure dataset");
    figure->add_option("id", raw.figure, "fig4, fig5, fig6a, fig6b, fig7a, fig7b or fig7c")->required();

    std::vector<const char*> argv{"rydjc"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Scenario scenario = Scenario::verify;
    const CLI::App* chosen = app.get_subcommands().front();
    if (chosen == eig) {
        scenario = Scenario::eig;
    } else if (chosen == fock) {
        scenario = Scenario::fock;
    } else if (chosen == coherent) {
        scenario = Scenario::coherent;
    } else if (chosen == figure) {
        scenario = Scenario::figure;
    }
    for (const CLI::App* sub : app.get_subcommands()) {
        if (sub != chosen) {
            throw UsageError("only one subcommand may be given");
        }
    }
    if (scenario == Scenario::figure) {
        const bool overridden = raw.omega_f || raw.omega_0 || raw.lambda || raw.delta || raw.t_start || raw.t_end ||
                                raw.t_points;
        if (overridden) {
            throw UsageError("figure presets are locked; model and time flags are not accepted");
        }
    }
    auto cfg = fold(raw, scenario);
    validate(cfg);
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out)
{
    std::ofstream file;
    switch (cfg.scenario) {
    case Scenario::verify: {
        const auto report = run_verification(cfg.tol_scale);
        auto& os = open_output(cfg, out, file);
        print_report(os, report);
        finish(cfg, file);
        return report.all_passed() ? exit_code::ok : exit_code::verification_failed;
    }
    case Scenario::eig: {
        const unsigned last = cfg.n_max.value_or(cfg.n);
        auto& os = open_output(cfg, out, file);
        if (cfg.format == OutputFormat::json) {
            write_eig_json(os, cfg.n, last, cfg.params);
        } else {
            write_csv(os, eig_table(cfg.n, last, cfg.params));
        }
        finish(cfg, file);
        return exit_code::ok;
    }
    case Scenario::fock: {
        FockScenario scenario{cfg.fock_case, cfg.n, cfg.params, cfg.custom_state};
        const auto table = fock_table(scenario, cfg.time.values());
        emit(cfg, table, open_output(cfg, out, file));
        finish(cfg, file);
        return exit_code::ok;
    }
    case Scenario::coherent: {
        const CoherentConfig cc{cfg.alpha, cfg.params, cfg.truncation};
        const auto grid = cfg.time.values();
        const auto table = cfg.method == CoherentMethod::oracle
                               ? coherent_oracle_table(cc, {cfg.photon_cap, std::nullopt}, grid)
                               : coherent_table(cc, grid);
        emit(cfg, table, open_output(cfg, out, file));
        finish(cfg, file);
        return exit_code::ok;
    }
    case Scenario::figure: {
        const auto table = figure_table(figure_preset(cfg.figure));
        emit(cfg, table, open_output(cfg, out, file));
        finish(cfg, file);
        return exit_code::ok;
    }
    }
    return exit_code::usage;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    try {
        return run(parse_config(args), out);
    } catch (const HelpRequested& h) {
        out << h.what();
        return exit_code::ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::io;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

}  // namespace rydjc::cli
