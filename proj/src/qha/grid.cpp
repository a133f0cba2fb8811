#include "qha/grid.hpp"

#include <cmath>
#include <string>

namespace qha {

GridSpec make_grid(int n) {
    if (n < 8) throw std::invalid_argument("make_grid: n must be >= 8, got " + std::to_string(n));
    if (n % 2 != 0) throw std::invalid_argument("make_grid: n must be even, got " + std::to_string(n));
    return GridSpec{n, 1.0 / std::sqrt(static_cast<double>(n))};
}

double lattice_radius(const GridSpec& grid, int m, int k) {
    return grid.h * std::sqrt(static_cast<double>(m) * m + static_cast<double>(k) * k);
}

double rho_max(const GridSpec& grid) {
    return lattice_radius(grid, -grid.n / 2, -grid.n / 2);
}

}  // namespace qha
