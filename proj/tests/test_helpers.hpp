#pragma once

#include <complex>
#include <random>

#include "pwclock/quantum_state.hpp"
#include "pwclock/types.hpp"

namespace pwclock::testing {

inline bool approx_eq(Complex actual, Complex expected, double tolerance = 1e-12) {
    return std::abs(actual - expected) <= tolerance;
}

inline PureState random_state(Index dim, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector raw(dim);
    for (Index i = 0; i < dim; ++i) {
        raw(i) = Complex(gauss(rng), gauss(rng));
    }
    return PureState::normalized(std::move(raw));
}

}  // namespace pwclock::testing
