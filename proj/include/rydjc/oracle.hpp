#pragma once

// Brute-force reference dynamics.
//
// Nothing here uses the closed-form spectrum: subspace blocks are written
// down entry by entry and diagonalized numerically, and the full truncated
// Hilbert space is assembled from single-atom and field operators. Blocks are
// exponentiated by spectral decomposition, so evolution to any t is exact up
// to rounding (no time stepping).

#include "rydjc/coherent_dynamics.hpp"
#include "rydjc/model.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace rydjc::oracle {

// Coupling of atom a and atom b to the mode. The analytic layer assumes they
// are equal; a standing-wave field with the atoms k*R apart gives
// lambda_b = lambda cos(kR).
struct Couplings {
    double lambda_a = 1.0;
    double lambda_b = 1.0;

    static Couplings equal(double lambda) noexcept { return {lambda, lambda}; }
    static Couplings standing_wave(double lambda, double k_times_r) noexcept
    {
        return {lambda, lambda * std::cos(k_times_r)};
    }
};

struct DenseHamiltonian {
    Eigen::MatrixXcd matrix;

    [[nodiscard]] Eigen::Index dim() const noexcept { return matrix.rows(); }
    // max |H - H^dagger| entry.
    [[nodiscard]] double hermiticity_defect() const;
};

// The 3x3 block over (|r,g,n>, |g,r,n>, |g,g,n+1>). Couplings default to
// lambda_a = lambda_b = p.lambda.
DenseHamiltonian subspace_hamiltonian(unsigned n, const ModelParams& p, std::optional<Couplings> couplings = {});

// exp(-i H t) by Hermitian eigendecomposition. Construction throws
// std::invalid_argument if H is not Hermitian within 1e-14 (relative to its
// largest entry when that exceeds 1).
class SpectralPropagator {
public:
    explicit SpectralPropagator(const DenseHamiltonian& h);

    [[nodiscard]] Eigen::VectorXcd evolve(const Eigen::VectorXcd& s0, double t) const;
    [[nodiscard]] const Eigen::VectorXd& eigenvalues() const noexcept { return energies_; }
    [[nodiscard]] const Eigen::MatrixXcd& eigenvectors() const noexcept { return vectors_; }

private:
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd vectors_;
};

Eigen::VectorXcd expm_evolve(const DenseHamiltonian& h, const Eigen::VectorXcd& s0, double t);

Eigen::VectorXcd to_vector(const SubspaceState& s);
SubspaceState to_subspace_state(const Eigen::VectorXcd& v);

// ---------------------------------------------------------------------------
// Full truncated space

// Atomic configurations kept under the blockade; |r,r> is excluded.
enum class AtomPair { gg = 0, rg = 1, gr = 2 };

// Amplitudes over |pair, m> for m = 0..photon_cap, stored at 3*m + pair.
struct FullSpaceState {
    unsigned photon_cap = 0;
    Eigen::VectorXcd amplitudes;

    static FullSpaceState zero(unsigned photon_cap);
    static Eigen::Index index(AtomPair pair, unsigned m) noexcept
    {
        return 3 * static_cast<Eigen::Index>(m) + static_cast<Eigen::Index>(pair);
    }
    [[nodiscard]] cplx& at(AtomPair pair, unsigned m) { return amplitudes[index(pair, m)]; }
    [[nodiscard]] cplx at(AtomPair pair, unsigned m) const { return amplitudes[index(pair, m)]; }
    [[nodiscard]] double norm_squared() const { return amplitudes.squaredNorm(); }
};

// |g,g> (x) |alpha> truncated at photon_cap, not renormalized.
FullSpaceState coherent_initial_state(cplx alpha, unsigned photon_cap);

// Places a subspace state of H_n into the full space (needs photon_cap >= n+1).
FullSpaceState embed(const SubspaceState& s, unsigned n, unsigned photon_cap);

class FullSpaceModel {
public:
    FullSpaceModel(const ModelParams& p, Couplings couplings, unsigned photon_cap);

    [[nodiscard]] const Eigen::MatrixXcd& hamiltonian() const noexcept { return hamiltonian_; }
    // Diagonal of a^dagger a - (sz_a + sz_b)/2 in the stored basis.
    [[nodiscard]] const Eigen::VectorXd& excitation_number() const noexcept { return excitation_; }
    // Largest |H_ij| between states of different excitation number.
    [[nodiscard]] double off_block_coupling() const noexcept { return off_block_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] unsigned photon_cap() const noexcept { return cap_; }

    [[nodiscard]] FullSpaceState evolve(const FullSpaceState& s0, double t) const;

private:
    struct Block {
        std::vector<Eigen::Index> members;
        Eigen::VectorXd energies;
        Eigen::MatrixXcd vectors;
    };

    unsigned cap_;
    Eigen::MatrixXcd hamiltonian_;
    Eigen::VectorXd excitation_;
    double off_block_ = 0.0;
    std::vector<Block> blocks_;
};

struct FullSpaceOptions {
    std::optional<unsigned> photon_cap;  // default: automatic Poisson cutoff + 10
    std::optional<Couplings> couplings;  // default: equal couplings
};

inline constexpr unsigned kPhotonCapMargin = 10;
inline constexpr double kMaxLeakage = 1e-10;

struct FullSpaceRun {
    unsigned photon_cap = 0;
    double leakage = 0.0;  // 1 - |psi(0)|^2: Poisson mass above the cap
    std::vector<FullSpaceState> states;
};

// Evolves |g,g>(x)|alpha>. Throws std::runtime_error if the Poisson mass above
// the cap exceeds kMaxLeakage.
FullSpaceRun full_space_evolve(const CoherentConfig& cfg, const FullSpaceOptions& opts, std::span<const double> t_grid);

// Atomic density matrix after tracing out the field, over (|g,g>, |r,g>, |g,r>).
struct AtomReducedState {
    Eigen::Matrix3cd rho;

    [[nodiscard]] double trace() const { return rho.trace().real(); }
    [[nodiscard]] double asym_population() const;
    // Largest |<asym|rho|x>| over x in {|sym>, |g,g>}.
    [[nodiscard]] double asym_coherence() const;
    // Ascending eigenvalues of the 3x3 matrix.
    [[nodiscard]] Eigen::Vector3d eigenvalues() const;
    // Restriction to {|sym>, |g,g>}; empty unless the |asym> row and column
    // are below `threshold`.
    [[nodiscard]] std::optional<AtomDensityMatrix> sym_block(double threshold = 1e-10) const;
};

AtomReducedState partial_trace_atoms(const FullSpaceState& s);

}  // namespace rydjc::oracle
