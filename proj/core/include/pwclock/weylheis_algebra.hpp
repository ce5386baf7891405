#pragma once

/**
 * @file
 * Finite Weyl-Heisenberg operators on a d-dimensional qudit: the cyclic
 * shift P, the clock Q, their cocycle-dressed monomials, the discrete
 * Fourier transform F, and unitaries assembled from phase-weighted
 * monomial expansions.
 */

#include <cstdint>
#include <optional>

#include "pwclock/errors.hpp"
#include "pwclock/types.hpp"

namespace pwclock {

/**
 * @brief Primitive d-th root of unity together with its principal half root.
 *
 * The half root tau = exp(i*pi/d) fixes the branch of the cocycle
 * omega^{rs/2} = tau^{rs} attached to shift/clock monomials.
 */
struct RootOfUnity {
    Index dim;
    Complex value;      ///< omega_d = exp(2*pi*i/d)
    Complex half_root;  ///< tau_d  = exp(pi*i/d), tau^2 = omega

    static RootOfUnity of(Index dim);

    /// omega_d^e evaluated as a single complex exponential (no error
    /// accumulation from repeated multiplication).
    Complex power(std::int64_t e) const;

    /// tau_d^e, the cocycle phase for exponent e.
    Complex half_power(std::int64_t e) const;
};

/// Real d x d matrix of expansion phases phi[r][s]; all entries finite.
class PhaseMatrix {
  public:
    explicit PhaseMatrix(RMatrix phi);

    static PhaseMatrix zero(Index dim);
    static PhaseMatrix constant(Index dim, double value);

    Index dim() const { return phi_.rows(); }
    const RMatrix& phi() const { return phi_; }
    double at(Index r, Index s) const;

  private:
    RMatrix phi_;
};

/**
 * @brief Dense d x d complex operator with an optional verified-unitary tag.
 *
 * The tag is honest: it is only ever set after an explicit check
 * max-abs(U†U - I) <= tol, and the tolerance it was checked at travels with
 * the value. Instances are immutable; products and powers return new values.
 */
class OperatorMatrix {
  public:
    /// Wraps a square matrix without any unitarity claim.
    explicit OperatorMatrix(CMatrix entries);

    Index dim() const { return entries_.rows(); }
    const CMatrix& entries() const { return entries_; }
    Complex entry(Index k, Index l) const { return entries_(k, l); }

    bool unitary_verified() const { return unitary_verified_; }

    /// Tolerance the unitary tag was established at (meaningful only when
    /// unitary_verified() is true).
    double verified_tol() const { return verified_tol_; }

    /// max-abs-entry of U†U - I.
    double unitary_deviation() const;

    /// Returns a copy carrying the verified-unitary tag.
    /// @throws NotUnitarizable if the deviation exceeds the tolerance.
    OperatorMatrix verified(double tolerance = tol::kOperator) const;

    /// Conjugate transpose; keeps the verification tag (the adjoint of a
    /// unitary has the same deviation, entrywise transposed).
    OperatorMatrix adjoint() const;

    /// Matrix product. When both factors are verified the product is
    /// re-checked at the looser of the two tolerances, so the tag on the
    /// result is again backed by a measurement.
    friend OperatorMatrix operator*(const OperatorMatrix& a,
                                    const OperatorMatrix& b);

  private:
    OperatorMatrix(CMatrix entries, double verified_tol);

    CMatrix entries_;
    bool unitary_verified_ = false;
    double verified_tol_ = 0.0;
};

enum class UPhiMode {
    Strict,  ///< require A†A = lambda*I and return A/sqrt(lambda)
    Polar,   ///< return the unitary polar factor of A (nearest unitary)
};

/// Identity operator, verified.
OperatorMatrix make_identity(Index dim);

/// One-step cyclic shift P: e_l -> e_{l+1 mod d}. Entries delta_{k,l+1 mod d}.
OperatorMatrix make_shift(Index dim);

/// Clock operator Q = diag(omega^k), k = 0..d-1.
OperatorMatrix make_clock(Index dim);

/// Discrete Fourier transform F with entries omega^{kl} / sqrt(d).
OperatorMatrix make_dft(Index dim);

/// Parity involution with entries delta_{k, -l mod d} (equals F^2).
OperatorMatrix make_parity(Index dim);

/**
 * @brief Cocycle-dressed monomial D(r,s) = tau^{rs} P^r Q^s.
 *
 * Entries: tau^{rs} * omega^{s*l} * delta_{k, (l+r) mod d}. The d^2
 * monomials are trace-orthogonal, Tr(D(r,s)† D(r',s')) = d * delta * delta,
 * which makes them an expansion basis for arbitrary d x d operators.
 *
 * @throws IndexOutOfRange unless 0 <= r, s < dim.
 */
OperatorMatrix monomial(Index dim, Index r, Index s);

/**
 * @brief Assemble U(phi) from the expansion
 *        A = sum_{r,s} exp(2*pi*i*phi[r][s]/d) * D(r,s).
 *
 * Strict mode demands A†A = lambda*I for a real scalar lambda (checked at
 * `tolerance` relative to lambda) and returns A/sqrt(lambda); the overall
 * scale of the expansion is thereby fixed instead of assumed. Polar mode
 * returns the unitary polar factor of A, the nearest unitary in Frobenius
 * norm, computed from the SVD.
 *
 * Not every real phi admits a strict-mode unitary. phi = const fails (the
 * Gram deviation at d = 4 is ~20.9); phi[r][s] = (r^2 + r*s + s^2)/2 + a*r
 * + b*s + c succeeds for every even d.
 *
 * @throws NotUnitarizable (strict) when A†A is not a scalar matrix.
 * @throws SingularExpansion (polar) when the smallest singular value of A
 *         is below 1e-12.
 */
OperatorMatrix build_u_phi(const PhaseMatrix& phi, UPhiMode mode,
                           double tolerance = tol::kOperator);

/**
 * @brief U^n by repeated squaring; U^0 is the identity.
 *
 * When the order m of U is known, n is first reduced mod m. A verified
 * input yields a verified (re-checked) result.
 */
OperatorMatrix operator_power(const OperatorMatrix& u, std::uint64_t n,
                              std::optional<std::uint64_t> known_order = {});

/**
 * @brief Smallest n <= max_order with U^n = I (or U^n = e^{i*theta} I when
 *        up_to_phase), or nullopt if none is found.
 *
 * @throws UnverifiedOperator if `u` lacks the verified-unitary tag.
 */
std::optional<int> order_of(const OperatorMatrix& u, int max_order,
                            bool up_to_phase,
                            double tolerance = tol::kOperator);

/// Expansion coefficients c[r][s] = Tr(D(r,s)† U) / d of U over the
/// monomial basis.
CMatrix weyl_coefficients(const OperatorMatrix& u);

/// Phase matrix whose strict-mode expansion succeeds for every even d:
/// phi[r][s] = (r^2 + r*s + s^2) / 2.
PhaseMatrix quadratic_phase(Index dim);

}  // namespace pwclock
