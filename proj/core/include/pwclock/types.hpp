#pragma once

#include <complex>

#include <Eigen/Core>

namespace pwclock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

namespace tol {

/// Operator construction / operator-equality tolerance (max-abs-entry norm),
/// sized for dense complex arithmetic up to d = 16.
inline constexpr double kOperator = 1e-12;

/// State normalization tolerance.
inline constexpr double kState = 1e-10;

/// Amplitude floor below which a relative phase is considered undefined.
inline constexpr double kAmplitudeFloor = 1e-9;

/// Root-of-unity self-consistency tolerance.
inline constexpr double kRootOfUnity = 1e-14;

}  // namespace tol

/// Largest entry magnitude of a complex matrix (the norm used for all
/// operator-equality checks).
inline double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    return max_abs(a - b);
}

}  // namespace pwclock
