#include "pwclock/weylheis_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/SVD>

namespace pwclock {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(Index dim, const char* who) {
    if (dim < 2) {
        throw InvalidDimension(std::string(who) + ": dimension must be >= 2, got " +
                               std::to_string(dim));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity RootOfUnity::of(Index dim) {
    require_dim(dim, "RootOfUnity");
    RootOfUnity root;
    root.dim = dim;
    root.value = std::polar(1.0, 2.0 * kPi / static_cast<double>(dim));
    root.half_root = std::polar(1.0, kPi / static_cast<double>(dim));
    return root;
}

Complex RootOfUnity::power(std::int64_t e) const {
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(e) / static_cast<double>(dim));
}

Complex RootOfUnity::half_power(std::int64_t e) const {
    return std::polar(1.0, kPi * static_cast<double>(e) / static_cast<double>(dim));
}

// ---------------------------------------------------------------------------
// PhaseMatrix

PhaseMatrix::PhaseMatrix(RMatrix phi) : phi_(std::move(phi)) {
    if (phi_.rows() != phi_.cols()) {
        throw InvalidDimension("PhaseMatrix: matrix must be square");
    }
    require_dim(phi_.rows(), "PhaseMatrix");
    if (!phi_.allFinite()) {
        throw Error("PhaseMatrix: entries must be finite");
    }
}

PhaseMatrix PhaseMatrix::zero(Index dim) {
    require_dim(dim, "PhaseMatrix::zero");
    return PhaseMatrix(RMatrix::Zero(dim, dim));
}

PhaseMatrix PhaseMatrix::constant(Index dim, double value) {
    require_dim(dim, "PhaseMatrix::constant");
    return PhaseMatrix(RMatrix::Constant(dim, dim, value));
}

double PhaseMatrix::at(Index r, Index s) const {
    if (r < 0 || r >= dim() || s < 0 || s >= dim()) {
        throw IndexOutOfRange("PhaseMatrix::at: index out of range");
    }
    return phi_(r, s);
}

// ---------------------------------------------------------------------------
// OperatorMatrix

OperatorMatrix::OperatorMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw InvalidDimension("OperatorMatrix: matrix must be square");
    }
    if (entries_.rows() < 1) {
        throw InvalidDimension("OperatorMatrix: empty matrix");
    }
}

OperatorMatrix::OperatorMatrix(CMatrix entries, double verified_tol)
    : entries_(std::move(entries)), unitary_verified_(true), verified_tol_(verified_tol) {}

double OperatorMatrix::unitary_deviation() const {
    CMatrix gram = entries_.adjoint() * entries_;
    gram -= CMatrix::Identity(dim(), dim());
    return max_abs(gram);
}

OperatorMatrix OperatorMatrix::verified(double tolerance) const {
    const double dev = unitary_deviation();
    if (dev > tolerance) {
        throw NotUnitarizable("operator is not unitary: max-abs(U†U - I) = " +
                                  std::to_string(dev) + " > " + std::to_string(tolerance),
                              dev);
    }
    return OperatorMatrix(entries_, tolerance);
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out{CMatrix(entries_.adjoint())};
    if (unitary_verified_) {
        out.unitary_verified_ = true;
        out.verified_tol_ = verified_tol_;
    }
    return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("operator product: dimensions " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
    }
    OperatorMatrix out{CMatrix(a.entries_ * b.entries_)};
    if (a.unitary_verified_ && b.unitary_verified_) {
        const double tolerance = std::max(a.verified_tol_, b.verified_tol_);
        if (out.unitary_deviation() <= tolerance) {
            out.unitary_verified_ = true;
            out.verified_tol_ = tolerance;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factories

OperatorMatrix make_identity(Index dim) {
    require_dim(dim, "make_identity");
    return OperatorMatrix(CMatrix::Identity(dim, dim)).verified();
}

OperatorMatrix make_shift(Index dim) {
    require_dim(dim, "make_shift");
    CMatrix p = CMatrix::Zero(dim, dim);
    for (Index l = 0; l < dim; ++l) {
        p((l + 1) % dim, l) = 1.0;
    }
    return OperatorMatrix(std::move(p)).verified();
}

OperatorMatrix make_clock(Index dim) {
    require_dim(dim, "make_clock");
    const auto root = RootOfUnity::of(dim);
    CMatrix q = CMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        q(k, k) = root.power(k);
    }
    return OperatorMatrix(std::move(q)).verified();
}

OperatorMatrix make_dft(Index dim) {
    require_dim(dim, "make_dft");
    const auto root = RootOfUnity::of(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    CMatrix f(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        for (Index l = 0; l < dim; ++l) {
            f(k, l) = scale * root.power(static_cast<std::int64_t>(k) * l);
        }
    }
    return OperatorMatrix(std::move(f)).verified();
}

OperatorMatrix make_parity(Index dim) {
    require_dim(dim, "make_parity");
    CMatrix pi = CMatrix::Zero(dim, dim);
    for (Index l = 0; l < dim; ++l) {
        pi((dim - l) % dim, l) = 1.0;
    }
    return OperatorMatrix(std::move(pi)).verified();
}

OperatorMatrix monomial(Index dim, Index r, Index s) {
    require_dim(dim, "monomial");
    if (r < 0 || r >= dim || s < 0 || s >= dim) {
        throw IndexOutOfRange("monomial: require 0 <= r, s < dim, got r=" +
                              std::to_string(r) + " s=" + std::to_string(s) +
                              " dim=" + std::to_string(dim));
    }
    const auto root = RootOfUnity::of(dim);
    const Complex cocycle = root.half_power(static_cast<std::int64_t>(r) * s);
    CMatrix d = CMatrix::Zero(dim, dim);
    for (Index l = 0; l < dim; ++l) {
        // [P^r Q^s] e_l = omega^{s*l} e_{(l+r) mod d}
        d((l + r) % dim, l) = cocycle * root.power(static_cast<std::int64_t>(s) * l);
    }
    return OperatorMatrix(std::move(d)).verified();
}

OperatorMatrix build_u_phi(const PhaseMatrix& phi, UPhiMode mode, double tolerance) {
    const Index dim = phi.dim();
    const auto root = RootOfUnity::of(dim);

    CMatrix a = CMatrix::Zero(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        for (Index s = 0; s < dim; ++s) {
            const Complex weight =
                std::polar(1.0, 2.0 * std::numbers::pi * phi.at(r, s) / static_cast<double>(dim));
            const Complex cocycle = root.half_power(static_cast<std::int64_t>(r) * s);
            for (Index l = 0; l < dim; ++l) {
                a((l + r) % dim, l) +=
                    weight * cocycle * root.power(static_cast<std::int64_t>(s) * l);
            }
        }
    }

    if (mode == UPhiMode::Strict) {
        const CMatrix gram = a.adjoint() * a;
        const double lambda = gram.real().trace() / static_cast<double>(dim);
        CMatrix residual = gram;
        residual -= lambda * CMatrix::Identity(dim, dim);
        const double deviation = max_abs(residual);
        // Scale-relative test: deviation/lambda <= tolerance guarantees the
        // rescaled operator passes verification at the same tolerance.
        if (lambda <= 0.0 || deviation > tolerance * lambda) {
            throw NotUnitarizable(
                "build_u_phi: A†A is not a scalar matrix (max-abs deviation " +
                    std::to_string(deviation) + " from lambda*I, lambda = " +
                    std::to_string(lambda) + ")",
                deviation);
        }
        return OperatorMatrix(CMatrix(a / std::sqrt(lambda))).verified(tolerance);
    }

    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smallest = svd.singularValues().minCoeff();
    if (smallest < 1e-12) {
        throw SingularExpansion("build_u_phi: expansion numerically singular (sigma_min = " +
                                std::to_string(smallest) + ")");
    }
    CMatrix u = svd.matrixU() * svd.matrixV().adjoint();
    return OperatorMatrix(std::move(u)).verified(tolerance);
}

OperatorMatrix operator_power(const OperatorMatrix& u, std::uint64_t n,
                              std::optional<std::uint64_t> known_order) {
    if (known_order && *known_order > 0) {
        n %= *known_order;
    }
    const Index dim = u.dim();
    CMatrix result = CMatrix::Identity(dim, dim);
    CMatrix base = u.entries();
    std::uint64_t e = n;
    while (e > 0) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1u;
        if (e > 0) {
            base = base * base;
        }
    }
    OperatorMatrix out{std::move(result)};
    if (u.unitary_verified()) {
        const double tolerance = u.verified_tol();
        if (out.unitary_deviation() <= tolerance) {
            out = out.verified(tolerance);
        }
    }
    return out;
}

std::optional<int> order_of(const OperatorMatrix& u, int max_order, bool up_to_phase,
                            double tolerance) {
    if (!u.unitary_verified()) {
        throw UnverifiedOperator("order_of: operator lacks the verified-unitary tag");
    }
    const Index dim = u.dim();
    const CMatrix identity = CMatrix::Identity(dim, dim);
    CMatrix power = identity;
    for (int n = 1; n <= max_order; ++n) {
        power = power * u.entries();
        if (up_to_phase) {
            const Complex z = power(0, 0);
            // A unit-modulus scalar matrix has every diagonal entry on the
            // unit circle; anything far inside cannot be e^{i*theta} I.
            if (std::abs(z) > 0.5 && max_abs_diff(power, z * identity) <= tolerance) {
                return n;
            }
        } else if (max_abs_diff(power, identity) <= tolerance) {
            return n;
        }
    }
    return std::nullopt;
}

CMatrix weyl_coefficients(const OperatorMatrix& u) {
    const Index dim = u.dim();
    CMatrix coeffs(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        for (Index s = 0; s < dim; ++s) {
            const OperatorMatrix d = monomial(dim, r, s);
            coeffs(r, s) =
                (d.entries().adjoint() * u.entries()).trace() / static_cast<double>(dim);
        }
    }
    return coeffs;
}

PhaseMatrix quadratic_phase(Index dim) {
    require_dim(dim, "quadratic_phase");
    RMatrix phi(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        for (Index s = 0; s < dim; ++s) {
            phi(r, s) = 0.5 * static_cast<double>(r * r + r * s + s * s);
        }
    }
    return PhaseMatrix(std::move(phi));
}

}  // namespace pwclock
