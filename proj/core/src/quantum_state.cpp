#include "pwclock/quantum_state.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace pwclock {

PureState::PureState(CVector amps) : amps_(std::move(amps)) {
    if (amps_.size() < 2) {
        throw InvalidDimension("PureState: dimension must be >= 2");
    }
    const double norm_err = std::abs(amps_.norm() - 1.0);
    if (norm_err > tol::kState) {
        throw Error("PureState: vector is not normalized (|norm - 1| = " +
                    std::to_string(norm_err) + ")");
    }
}

PureState PureState::normalized(CVector raw) {
    if (raw.size() < 2) {
        throw InvalidDimension("PureState::normalized: dimension must be >= 2");
    }
    const double norm = raw.norm();
    if (norm <= 1e-14) {
        throw ZeroState("PureState::normalized: cannot normalize the zero vector");
    }
    return PureState(CVector(raw / norm), unchecked_t{});
}

PureState PureState::basis_state(Index dim, Index index) {
    if (dim < 2) {
        throw InvalidDimension("PureState::basis_state: dimension must be >= 2");
    }
    if (index < 0 || index >= dim) {
        throw IndexOutOfRange("PureState::basis_state: index out of range");
    }
    CVector amps = CVector::Zero(dim);
    amps(index) = 1.0;
    return PureState(std::move(amps), unchecked_t{});
}

Complex PureState::amp(Index i) const {
    if (i < 0 || i >= dim()) {
        throw IndexOutOfRange("PureState::amp: index out of range");
    }
    return amps_(i);
}

BasisLabel BasisLabel::of(Index dim, Index index) {
    if (dim < 2) {
        throw InvalidDimension("BasisLabel: dimension must be >= 2");
    }
    if (index < 0 || index >= dim) {
        throw IndexOutOfRange("BasisLabel: index out of range");
    }
    BasisLabel label;
    label.index = index;
    // Power-of-two dims decompose into qubit helicities, MSB first.
    Index bits = 0;
    while ((Index{1} << bits) < dim) {
        ++bits;
    }
    if ((Index{1} << bits) == dim) {
        label.helicities.reserve(static_cast<std::size_t>(bits));
        for (Index b = bits - 1; b >= 0; --b) {
            label.helicities.push_back((index >> b) & 1 ? +1 : -1);
        }
    }
    return label;
}

std::string BasisLabel::to_string() const {
    if (helicities.empty()) {
        return "|" + std::to_string(index) + ">";
    }
    std::string out = "|";
    for (std::size_t i = 0; i < helicities.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += helicities[i] > 0 ? "+1" : "-1";
    }
    out += ">";
    return out;
}

PureState apply(const OperatorMatrix& u, const PureState& psi) {
    if (!u.unitary_verified()) {
        throw UnverifiedOperator("apply: operator lacks the verified-unitary tag");
    }
    if (u.dim() != psi.dim()) {
        throw DimMismatch("apply: operator dim " + std::to_string(u.dim()) +
                          " vs state dim " + std::to_string(psi.dim()));
    }
    return PureState(CVector(u.entries() * psi.amps()));
}

Eigen::VectorXd probabilities(const PureState& psi) {
    return psi.amps().cwiseAbs2();
}

Complex overlap(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("overlap: dims " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
    }
    // Fixed left-to-right summation; see header.
    Complex acc{0.0, 0.0};
    for (Index i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amps()(i)) * b.amps()(i);
    }
    return acc;
}

std::optional<double> relative_phase(const PureState& psi, Index i, Index j, double eps) {
    if (i < 0 || i >= psi.dim() || j < 0 || j >= psi.dim()) {
        throw IndexOutOfRange("relative_phase: component index out of range");
    }
    const Complex ai = psi.amps()(i);
    const Complex aj = psi.amps()(j);
    if (std::abs(ai) <= eps || std::abs(aj) <= eps) {
        return std::nullopt;
    }
    return wrap_phase(std::arg(ai) - std::arg(aj));
}

bool global_phase_equivalent(const PureState& a, const PureState& b, double tolerance) {
    return std::abs(std::abs(overlap(a, b)) - 1.0) <= tolerance;
}

double wrap_phase(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    while (angle > std::numbers::pi) {
        angle -= two_pi;
    }
    while (angle <= -std::numbers::pi) {
        angle += two_pi;
    }
    return angle;
}

}  // namespace pwclock
