#include "qha/rng.hpp"

#include <cmath>
#include <numbers>

namespace qha {

double SplitMix64::normal() {
    double u = uniform();
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace qha
