#pragma once

#include "table.hpp"

#include "rydjc/coherent_dynamics.hpp"
#include "rydjc/fock_dynamics.hpp"
#include "rydjc/oracle.hpp"

#include <iosfwd>
#include <span>

namespace rydjc::cli {

inline const std::vector<std::string> kFockColumns{"t",     "p1",    "p2",    "p3",    "p_sym", "p_asym",
                                                   "re_mu", "im_mu", "re_nu", "im_nu", "re_xi", "im_xi"};
inline const std::vector<std::string> kCoherentColumns{"t", "p_sym", "p_gg", "re_gamma", "im_gamma", "epsilon"};

Table fock_table(const FockScenario& scenario, std::span<const double> t_grid);
Table coherent_table(const CoherentConfig& cfg, std::span<const double> t_grid);
// Same schema, evaluated by full-space evolution and a partial trace.
Table coherent_oracle_table(const CoherentConfig& cfg, const oracle::FullSpaceOptions& opts,
                            std::span<const double> t_grid);

// n, E_asym, E_plus, E_minus, omega_n, phi_n, then R row-major as R00..R22.
Table eig_table(unsigned n_first, unsigned n_last, const ModelParams& p);
// Records with R nested as a 3x3 array.
void write_eig_json(std::ostream& os, unsigned n_first, unsigned n_last, const ModelParams& p);

}  // namespace rydjc::cli
