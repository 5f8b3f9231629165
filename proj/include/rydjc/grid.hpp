#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rydjc {

// `points` uniformly spaced values from start to stop inclusive.
inline std::vector<double> linspace(double start, double stop, std::size_t points)
{
    if (points == 0) {
        throw std::invalid_argument("linspace needs at least one point");
    }
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        out[i] = start + step * static_cast<double>(i);
    }
    out.back() = stop;
    return out;
}

}  // namespace rydjc
