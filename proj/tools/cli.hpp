#pragma once

#include "rydjc/coherent_dynamics.hpp"
#include "rydjc/fock_dynamics.hpp"
#include "rydjc/model.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rydjc::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int verification_failed = 2;
inline constexpr int io = 3;
}  // namespace exit_code

enum class Scenario { eig, fock, coherent, verify, figure };
enum class OutputFormat { csv, json };
enum class CoherentMethod { series, oracle };

enum class FigureId { fig4, fig5, fig6a, fig6b, fig7a, fig7b, fig7c };

std::string_view name(FigureId id) noexcept;
std::optional<FigureId> parse_figure_id(std::string_view text) noexcept;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by parse_config for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double start = 0.0;
    double end = 20.0;
    std::size_t points = 1001;

    [[nodiscard]] std::vector<double> values() const;
};

struct RunConfig {
    Scenario scenario = Scenario::verify;
    ModelParams params;
    TimeGrid time;

    // eig: records for n = n .. n_max
    unsigned n = 0;
    std::optional<unsigned> n_max;

    FockCase fock_case = FockCase::B;
    SubspaceState custom_state{};

    cplx alpha{0.0, 0.0};
    Truncation truncation;
    CoherentMethod method = CoherentMethod::series;
    std::optional<unsigned> photon_cap;

    FigureId figure = FigureId::fig4;

    double tol_scale = 1.0;

    std::optional<std::filesystem::path> out;
    OutputFormat format = OutputFormat::csv;
};

// Validates ranges and cross-field constraints; throws UsageError.
void validate(const RunConfig& cfg);

// `args` excludes the program name. Values from --config are overridden by
// flags given on the command line.
RunConfig parse_config(std::span<const std::string> args);

// Writes the scenario's output to cfg.out, or to `out` when unset. Returns an
// exit code; I/O failures throw IoError.
int run(const RunConfig& cfg, std::ostream& out);

// parse_config + run with every error mapped to its exit code.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rydjc::cli
