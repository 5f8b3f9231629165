#pragma once

#include "cli.hpp"
#include "table.hpp"

#include "rydjc/fock_dynamics.hpp"
#include "rydjc/model.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace rydjc::cli {

enum class FigureKind { amplitude_sweep, fock, coherent };

// Locked parameter set for one figure dataset. The first CSV column is the
// scaled axis `axis_column`; the rest follow the scenario's own schema.
struct FigurePreset {
    FigureId id;
    FigureKind kind;
    ModelParams params;
    std::vector<unsigned> photon_numbers;  // sweep curves, or the single Fock n
    FockCase fock_case = FockCase::C;
    double n_bar = 0.0;
    std::string_view axis_column;
    double axis_start = 0.0;
    double axis_end = 0.0;
    std::size_t points = 0;
    // Window where the collapsed p_sym sits at 1/2, in axis units.
    std::pair<double, double> plateau{0.0, 0.0};
};

const FigurePreset& figure_preset(FigureId id);
std::array<FigureId, 7> all_figures() noexcept;

// Time corresponding to a value on the preset's scaled axis.
double axis_to_time(const FigurePreset& preset, double axis_value);

Table figure_table(const FigurePreset& preset);

}  // namespace rydjc::cli
