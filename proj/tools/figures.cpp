#include "figures.hpp"

#include "scenarios.hpp"

#include "rydjc/eigensystem.hpp"
#include "rydjc/grid.hpp"

#include <stdexcept>
#include <string>

namespace rydjc::cli {
namespace {

FigurePreset sweep_preset()
{
    FigurePreset p{};
    p.id = FigureId::fig4;
    p.kind = FigureKind::amplitude_sweep;
    p.params = ModelParams{1.0, 1.0, 1.0};  // omega_f replaced along the sweep
    p.photon_numbers = {0, 2, 10};
    p.axis_column = "delta_over_omega_0";
    p.axis_start = -4.0;
    p.axis_end = 4.0;
    p.points = 2001;
    return p;
}

FigurePreset fock_preset(FigureId id, double delta, unsigned n, std::string_view axis, double axis_end,
                         std::size_t points)
{
    FigurePreset p{};
    p.id = id;
    p.kind = FigureKind::fock;
    p.params = ModelParams::with_detuning(delta, 1.0, 1.0);
    p.photon_numbers = {n};
    p.fock_case = FockCase::C;
    p.axis_column = axis;
    p.axis_start = 0.0;
    p.axis_end = axis_end;
    p.points = points;
    return p;
}

FigurePreset coherent_preset(FigureId id, double n_bar)
{
    FigurePreset p{};
    p.id = id;
    p.kind = FigureKind::coherent;
    p.params = ModelParams{1.0, 1.0, 1.0};
    p.n_bar = n_bar;
    p.axis_column = "t_lambda";
    p.axis_start = 0.0;
    p.axis_end = 50.0;
    p.points = 2001;
    return p;
}

std::vector<FigurePreset> make_presets()
{
    std::vector<FigurePreset> out;
    out.push_back(sweep_preset());
    out.push_back(fock_preset(FigureId::fig5, 0.0, 0, "t_rabi", 4.0 * kPi, 2001));
    out.push_back(fock_preset(FigureId::fig6a, 0.2, 0, "t_omega_0", 60.0, 3001));
    out.push_back(fock_preset(FigureId::fig6b, 0.2, 10, "t_omega_0", 60.0, 3001));
    out.push_back(coherent_preset(FigureId::fig7a, 10.0));
    out.push_back(coherent_preset(FigureId::fig7b, 20.0));
    auto c = coherent_preset(FigureId::fig7c, 50.0);
    c.plateau = {5.0, 25.0};
    out.push_back(c);
    return out;
}

}  // namespace

const FigurePreset& figure_preset(FigureId id)
{
    static const std::vector<FigurePreset> presets = make_presets();
    return presets.at(static_cast<std::size_t>(id));
}

std::array<FigureId, 7> all_figures() noexcept
{
    return {FigureId::fig4, FigureId::fig5, FigureId::fig6a, FigureId::fig6b,
            FigureId::fig7a, FigureId::fig7b, FigureId::fig7c};
}

double axis_to_time(const FigurePreset& preset, double axis_value)
{
    switch (preset.kind) {
    case FigureKind::amplitude_sweep:
        throw std::logic_error("the detuning sweep has no time axis");
    case FigureKind::fock:
        if (preset.axis_column == "t_rabi") {
            return axis_value / rabi_frequency(preset.photon_numbers.front(), preset.params);
        }
        return axis_value / preset.params.omega_0;
    case FigureKind::coherent:
        return axis_value / preset.params.lambda;
    }
    throw std::logic_error("unknown figure kind");
}

Table figure_table(const FigurePreset& preset)
{
    const auto axis = linspace(preset.axis_start, preset.axis_end, preset.points);
    Table table{{std::string(preset.axis_column)}, {}};

    if (preset.kind == FigureKind::amplitude_sweep) {
        for (const unsigned n : preset.photon_numbers) {
            table.columns.push_back("sin2_2phi_n" + std::to_string(n));
        }
        for (const double x : axis) {
            const auto p = ModelParams::with_detuning(x * preset.params.omega_0, preset.params.omega_0,
                                                      preset.params.lambda);
            std::vector<double> row{x};
            for (const unsigned n : preset.photon_numbers) {
                row.push_back(sym_amplitude(n, p));
            }
            table.add_row(std::move(row));
        }
        return table;
    }

    std::vector<double> times;
    times.reserve(axis.size());
    for (const double x : axis) {
        times.push_back(axis_to_time(preset, x));
    }

    Table body;
    if (preset.kind == FigureKind::fock) {
        FockScenario scenario{preset.fock_case, preset.photon_numbers.front(), preset.params, {}};
        body = fock_table(scenario, times);
    } else {
        body = coherent_table(CoherentConfig::with_mean_photons(preset.n_bar, preset.params), times);
    }
    table.columns.insert(table.columns.end(), body.columns.begin(), body.columns.end());
    for (std::size_t i = 0; i < axis.size(); ++i) {
        std::vector<double> row{axis[i]};
        row.insert(row.end(), body.rows[i].begin(), body.rows[i].end());
        table.add_row(std::move(row));
    }
    return table;
}

}  // namespace rydjc::cli
