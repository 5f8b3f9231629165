#include "rydjc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rydjc {

ModelParams validate_params(const ModelParams& p)
{
    if (!std::isfinite(p.omega_f) || !std::isfinite(p.omega_0) || !std::isfinite(p.lambda)) {
        throw std::invalid_argument("model parameters must be finite");
    }
    if (p.omega_0 <= 0.0) {
        throw std::invalid_argument("omega_0 must be positive, got " + std::to_string(p.omega_0));
    }
    if (p.lambda < 0.0) {
        throw std::invalid_argument("lambda must be non-negative, got " + std::to_string(p.lambda));
    }
    return p;
}

void require_normalized(const SubspaceState& s, double tol)
{
    const double n2 = s.norm_squared();
    if (!(std::abs(n2 - 1.0) <= tol)) {
        throw std::invalid_argument("subspace state is not normalized (|s|^2 = " + std::to_string(n2) + ")");
    }
}

}  // namespace rydjc
