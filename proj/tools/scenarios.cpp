#include "scenarios.hpp"

#include "json.hpp"

#include "rydjc/eigensystem.hpp"

#include <ostream>
#include <string>

namespace rydjc::cli {

Table fock_table(const FockScenario& scenario, std::span<const double> t_grid)
{
    Table table{kFockColumns, {}};
    table.rows.reserve(t_grid.size());
    for (const auto& s : fock_series(scenario, t_grid)) {
        const auto& p = s.probs;
        const auto& a = s.amplitudes;
        table.add_row({p.t, p.p1, p.p2, p.p3, p.p_sym, p.p_asym, a.mu.real(), a.mu.imag(), a.nu.real(), a.nu.imag(),
                       a.xi.real(), a.xi.imag()});
    }
    return table;
}

Table coherent_table(const CoherentConfig& cfg, std::span<const double> t_grid)
{
    Table table{kCoherentColumns, {}};
    table.rows.reserve(t_grid.size());
    for (const auto& pt : time_series(cfg, t_grid)) {
        table.add_row({pt.t, pt.p_sym, pt.p_gg, pt.gamma.real(), pt.gamma.imag(), pt.epsilon});
    }
    return table;
}

Table coherent_oracle_table(const CoherentConfig& cfg, const oracle::FullSpaceOptions& opts,
                            std::span<const double> t_grid)
{
    const auto run = oracle::full_space_evolve(cfg, opts, t_grid);
    Table table{kCoherentColumns, {}};
    table.rows.reserve(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const auto reduced = oracle::partial_trace_atoms(run.states[i]);
        const auto rho = reduced.sym_block();
        if (!rho) {
            throw std::runtime_error("atoms left the {sym, gg} sector at t = " + std::to_string(t_grid[i]));
        }
        table.add_row({t_grid[i], rho->p_sym, rho->p_gg, rho->gamma.real(), rho->gamma.imag(), entanglement(*rho)});
    }
    return table;
}

Table eig_table(unsigned n_first, unsigned n_last, const ModelParams& p)
{
    Table table{{"n", "E_asym", "E_plus", "E_minus", "omega_n", "phi_n"}, {}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            table.columns.push_back("R" + std::to_string(r) + std::to_string(c));
        }
    }
    for (unsigned n = n_first; n <= n_last; ++n) {
        const auto e = eigen_system(n, p);
        std::vector<double> row{static_cast<double>(n), e.e_asym, e.e_plus, e.e_minus, e.omega_n, e.phi_n};
        for (const auto& r : e.rotation) {
            row.insert(row.end(), r.begin(), r.end());
        }
        table.add_row(std::move(row));
    }
    return table;
}

void write_eig_json(std::ostream& os, unsigned n_first, unsigned n_last, const ModelParams& p)
{
    auto records = nlohmann::ordered_json::array();
    for (unsigned n = n_first; n <= n_last; ++n) {
        const auto e = eigen_system(n, p);
        nlohmann::ordered_json rec;
        rec["n"] = n;
        rec["E_asym"] = e.e_asym;
        rec["E_plus"] = e.e_plus;
        rec["E_minus"] = e.e_minus;
        rec["omega_n"] = e.omega_n;
        rec["phi_n"] = e.phi_n;
        rec["R"] = e.rotation;
        records.push_back(std::move(rec));
    }
    os << records.dump(1) << '\n';
}

}  // namespace rydjc::cli
