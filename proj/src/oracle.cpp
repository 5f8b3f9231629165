#include "rydjc/oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace rydjc::oracle {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;

// Single-atom operators in the basis {|g>, |r>}.
MatrixXcd sigma_z() { return (MatrixXcd(2, 2) << 1, 0, 0, -1).finished(); }
MatrixXcd sigma_plus() { return (MatrixXcd(2, 2) << 0, 0, 1, 0).finished(); }  // |r><g|
MatrixXcd projector_g() { return (MatrixXcd(2, 2) << 1, 0, 0, 0).finished(); }

MatrixXcd annihilation(unsigned cap)
{
    MatrixXcd a = MatrixXcd::Zero(cap + 1, cap + 1);
    for (unsigned m = 1; m <= cap; ++m) {
        a(m - 1, m) = std::sqrt(static_cast<double>(m));
    }
    return a;
}

MatrixXcd kron(const MatrixXcd& x, const MatrixXcd& y)
{
    MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Index i = 0; i < x.rows(); ++i) {
        for (Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

MatrixXcd kron3(const MatrixXcd& a, const MatrixXcd& b, const MatrixXcd& f) { return kron(kron(a, b), f); }

double max_abs(const MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_hermitian(const MatrixXcd& h)
{
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("Hamiltonian must be square");
    }
    const double scale = std::max(1.0, max_abs(h));
    const double defect = max_abs(h - h.adjoint());
    if (defect > 1e-14 * scale) {
        throw std::invalid_argument("Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

}  // namespace

double DenseHamiltonian::hermiticity_defect() const { return max_abs(matrix - matrix.adjoint()); }

DenseHamiltonian subspace_hamiltonian(unsigned n, const ModelParams& p, std::optional<Couplings> couplings)
{
    const auto c = couplings.value_or(Couplings::equal(p.lambda));
    const double root = std::sqrt(static_cast<double>(n) + 1.0);
    const double diag = p.omega_f * static_cast<double>(n);
    MatrixXcd h = MatrixXcd::Zero(3, 3);
    h(0, 0) = diag;
    h(1, 1) = diag;
    h(2, 2) = diag + p.delta();
    h(0, 2) = h(2, 0) = c.lambda_a * root;
    h(1, 2) = h(2, 1) = c.lambda_b * root;
    return {h};
}

SpectralPropagator::SpectralPropagator(const DenseHamiltonian& h)
{
    require_hermitian(h.matrix);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h.matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

Eigen::VectorXcd SpectralPropagator::evolve(const Eigen::VectorXcd& s0, double t) const
{
    if (s0.size() != vectors_.rows()) {
        throw std::invalid_argument("state dimension does not match the Hamiltonian");
    }
    Eigen::VectorXcd c = vectors_.adjoint() * s0;
    for (Index k = 0; k < c.size(); ++k) {
        c[k] *= std::polar(1.0, -energies_[k] * t);
    }
    return vectors_ * c;
}

Eigen::VectorXcd expm_evolve(const DenseHamiltonian& h, const Eigen::VectorXcd& s0, double t)
{
    return SpectralPropagator(h).evolve(s0, t);
}

Eigen::VectorXcd to_vector(const SubspaceState& s)
{
    Eigen::VectorXcd v(3);
    v << s.mu, s.nu, s.xi;
    return v;
}

SubspaceState to_subspace_state(const Eigen::VectorXcd& v)
{
    if (v.size() != 3) {
        throw std::invalid_argument("subspace vector must have 3 components");
    }
    return {v[0], v[1], v[2]};
}

FullSpaceState FullSpaceState::zero(unsigned photon_cap)
{
    return {photon_cap, Eigen::VectorXcd::Zero(3 * (static_cast<Index>(photon_cap) + 1))};
}

FullSpaceState coherent_initial_state(cplx alpha, unsigned photon_cap)
{
    auto s = FullSpaceState::zero(photon_cap);
    const double n_bar = std::norm(alpha);
    if (n_bar == 0.0) {
        s.at(AtomPair::gg, 0) = 1.0;
        return s;
    }
    const double log_r = std::log(std::abs(alpha));
    const double theta = std::arg(alpha);
    for (unsigned m = 0; m <= photon_cap; ++m) {
        const double md = static_cast<double>(m);
        const double log_mag = -0.5 * n_bar + md * log_r - 0.5 * std::lgamma(md + 1.0);
        s.at(AtomPair::gg, m) = std::polar(std::exp(log_mag), md * theta);
    }
    return s;
}

FullSpaceState embed(const SubspaceState& st, unsigned n, unsigned photon_cap)
{
    if (photon_cap < n + 1) {
        throw std::invalid_argument("photon cap too small to hold |g,g,n+1>");
    }
    auto s = FullSpaceState::zero(photon_cap);
    s.at(AtomPair::rg, n) = st.mu;
    s.at(AtomPair::gr, n) = st.nu;
    s.at(AtomPair::gg, n + 1) = st.xi;
    return s;
}

FullSpaceModel::FullSpaceModel(const ModelParams& p, Couplings couplings, unsigned photon_cap) : cap_(photon_cap)
{
    validate_params(p);
    const Index field_dim = static_cast<Index>(photon_cap) + 1;
    const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
    const MatrixXcd idf = MatrixXcd::Identity(field_dim, field_dim);
    const MatrixXcd a = annihilation(photon_cap);
    const MatrixXcd ad = a.adjoint();
    const MatrixXcd sz = sigma_z();
    const MatrixXcd sp = sigma_plus();
    const MatrixXcd sm = sp.adjoint();
    const MatrixXcd pg = projector_g();

    // Product space ordering: (atom a) x (atom b) x field, atoms in {g, r}.
    const MatrixXcd field_energy = p.omega_f * kron3(id2, id2, ad * a);
    const MatrixXcd atom_energy = -0.5 * p.omega_0 * (kron3(sz, id2, idf) + kron3(id2, sz, idf));
    const MatrixXcd coupling_a = couplings.lambda_a * (kron3(sp, pg, a) + kron3(sm, pg, ad));
    const MatrixXcd coupling_b = couplings.lambda_b * (kron3(pg, sp, a) + kron3(pg, sm, ad));
    const MatrixXcd h_product = field_energy + atom_energy + coupling_a + coupling_b;
    const MatrixXcd n_product = kron3(id2, id2, ad * a) - 0.5 * (kron3(sz, id2, idf) + kron3(id2, sz, idf));

    // Keep |g,g>, |r,g>, |g,r>; drop the blockaded |r,r>.
    const Index dim = 3 * field_dim;
    std::vector<Index> source(static_cast<std::size_t>(dim));
    for (unsigned m = 0; m <= photon_cap; ++m) {
        const Index fm = static_cast<Index>(m);
        source[FullSpaceState::index(AtomPair::gg, m)] = (0 * 2 + 0) * field_dim + fm;
        source[FullSpaceState::index(AtomPair::rg, m)] = (1 * 2 + 0) * field_dim + fm;
        source[FullSpaceState::index(AtomPair::gr, m)] = (0 * 2 + 1) * field_dim + fm;
    }
    hamiltonian_.resize(dim, dim);
    excitation_.resize(dim);
    for (Index i = 0; i < dim; ++i) {
        excitation_[i] = n_product(source[i], source[i]).real();
        for (Index j = 0; j < dim; ++j) {
            hamiltonian_(i, j) = h_product(source[i], source[j]);
        }
    }
    require_hermitian(hamiltonian_);

    std::map<long, std::vector<Index>> groups;
    for (Index i = 0; i < dim; ++i) {
        groups[std::lround(excitation_[i])].push_back(i);
    }
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            if (std::lround(excitation_[i]) != std::lround(excitation_[j])) {
                off_block_ = std::max(off_block_, std::abs(hamiltonian_(i, j)));
            }
        }
    }

    for (auto& [number, members] : groups) {
        const Index size = static_cast<Index>(members.size());
        MatrixXcd sub(size, size);
        for (Index i = 0; i < size; ++i) {
            for (Index j = 0; j < size; ++j) {
                sub(i, j) = hamiltonian_(members[i], members[j]);
            }
        }
        Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(sub);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("block eigendecomposition failed");
        }
        blocks_.push_back({std::move(members), solver.eigenvalues(), solver.eigenvectors()});
    }
}

FullSpaceState FullSpaceModel::evolve(const FullSpaceState& s0, double t) const
{
    if (s0.photon_cap != cap_) {
        throw std::invalid_argument("state photon cap does not match the model");
    }
    auto out = FullSpaceState::zero(cap_);
    for (const auto& b : blocks_) {
        const Index size = static_cast<Index>(b.members.size());
        Eigen::VectorXcd x(size);
        for (Index i = 0; i < size; ++i) {
            x[i] = s0.amplitudes[b.members[i]];
        }
        Eigen::VectorXcd c = b.vectors.adjoint() * x;
        for (Index k = 0; k < size; ++k) {
            c[k] *= std::polar(1.0, -b.energies[k] * t);
        }
        const Eigen::VectorXcd y = b.vectors * c;
        for (Index i = 0; i < size; ++i) {
            out.amplitudes[b.members[i]] = y[i];
        }
    }
    return out;
}

FullSpaceRun full_space_evolve(const CoherentConfig& cfg, const FullSpaceOptions& opts, std::span<const double> t_grid)
{
    validate(cfg);
    FullSpaceRun run;
    if (opts.photon_cap) {
        run.photon_cap = *opts.photon_cap;
    } else {
        const auto pw = poisson_weights(cfg.n_bar(), Truncation::automatic(cfg.truncation.tail_tol));
        run.photon_cap = pw.cutoff + kPhotonCapMargin;
    }
    const auto psi0 = coherent_initial_state(cfg.alpha, run.photon_cap);
    run.leakage = std::max(0.0, 1.0 - psi0.norm_squared());
    if (run.leakage > kMaxLeakage) {
        throw std::runtime_error("coherent state leaks " + std::to_string(run.leakage) + " above photon cap " +
                                 std::to_string(run.photon_cap) + "; raise the cap");
    }
    const FullSpaceModel model(cfg.params, opts.couplings.value_or(Couplings::equal(cfg.params.lambda)),
                               run.photon_cap);
    run.states.reserve(t_grid.size());
    for (const double t : t_grid) {
        run.states.push_back(model.evolve(psi0, t));
    }
    return run;
}

AtomReducedState partial_trace_atoms(const FullSpaceState& s)
{
    AtomReducedState out;
    out.rho.setZero();
    const AtomPair pairs[3] = {AtomPair::gg, AtomPair::rg, AtomPair::gr};
    for (unsigned m = 0; m <= s.photon_cap; ++m) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                out.rho(i, j) += s.at(pairs[i], m) * std::conj(s.at(pairs[j], m));
            }
        }
    }
    return out;
}

namespace {

Eigen::Vector3cd sym_vector() { return Eigen::Vector3cd(0.0, kInvSqrt2, kInvSqrt2); }
Eigen::Vector3cd asym_vector() { return Eigen::Vector3cd(0.0, kInvSqrt2, -kInvSqrt2); }
Eigen::Vector3cd gg_vector() { return Eigen::Vector3cd(1.0, 0.0, 0.0); }

cplx element(const Eigen::Matrix3cd& rho, const Eigen::Vector3cd& bra, const Eigen::Vector3cd& ket)
{
    return bra.dot(rho * ket);  // dot() conjugates its left operand
}

}  // namespace

double AtomReducedState::asym_population() const { return element(rho, asym_vector(), asym_vector()).real(); }

double AtomReducedState::asym_coherence() const
{
    return std::max(std::abs(element(rho, asym_vector(), sym_vector())),
                    std::abs(element(rho, asym_vector(), gg_vector())));
}

Eigen::Vector3d AtomReducedState::eigenvalues() const
{
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::optional<AtomDensityMatrix> AtomReducedState::sym_block(double threshold) const
{
    if (std::abs(asym_population()) > threshold || asym_coherence() > threshold) {
        return std::nullopt;
    }
    AtomDensityMatrix out;
    out.p_sym = element(rho, sym_vector(), sym_vector()).real();
    out.p_gg = element(rho, gg_vector(), gg_vector()).real();
    out.gamma = element(rho, sym_vector(), gg_vector());
    return out;
}

}  // namespace rydjc::oracle
