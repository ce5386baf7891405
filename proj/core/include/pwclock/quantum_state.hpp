#pragma once

/**
 * @file
 * Normalized pure states of a d-level system, their probabilities,
 * overlaps, relative phases and global-phase equivalence.
 */

#include <optional>
#include <string>
#include <vector>

#include "pwclock/errors.hpp"
#include "pwclock/types.hpp"
#include "pwclock/weylheis_algebra.hpp"

namespace pwclock {

/// Unit-norm complex amplitude vector. Immutable; the normalization
/// invariant (||amps|| = 1 within 1e-10) is checked at every construction.
class PureState {
  public:
    /// Wraps an already-normalized amplitude vector.
    /// @throws Error if the norm is off by more than tol::kState.
    explicit PureState(CVector amps);

    /// Scales an arbitrary nonzero vector to unit norm.
    /// @throws ZeroState for vectors of norm <= 1e-14.
    static PureState normalized(CVector raw);

    static PureState basis_state(Index dim, Index index);

    Index dim() const { return amps_.size(); }
    const CVector& amps() const { return amps_; }
    Complex amp(Index i) const;
    double norm() const { return amps_.norm(); }

  private:
    struct unchecked_t {};
    PureState(CVector amps, unchecked_t) : amps_(std::move(amps)) {}

    CVector amps_;
};

/// Basis index together with its helicity labels. For d = 2^m the index
/// bits map MSB-first to per-photon helicities, 0 -> -1 and 1 -> +1, so at
/// d = 4: 0 <-> (-1,-1), 1 <-> (-1,+1), 2 <-> (+1,-1), 3 <-> (+1,+1).
/// Dimensions that are not powers of two carry no helicity decomposition.
struct BasisLabel {
    Index index = 0;
    std::vector<int> helicities;

    static BasisLabel of(Index dim, Index index);

    /// Renders as "|-1,+1>"; falls back to "|k>" when no helicity labels
    /// exist.
    std::string to_string() const;
};

/// psi' = U psi.
/// @throws UnverifiedOperator unless `u` carries the verified-unitary tag.
/// @throws DimMismatch on dimension mismatch.
PureState apply(const OperatorMatrix& u, const PureState& psi);

/// |amps[i]|^2 for each component; sums to 1 within 1e-10.
Eigen::VectorXd probabilities(const PureState& psi);

/// <a|b> = sum_i conj(a_i) b_i. Computed as a plain left-to-right loop so
/// that overlap(a,b) == conj(overlap(b,a)) holds exactly, not just to
/// rounding.
Complex overlap(const PureState& a, const PureState& b);

/// arg(amps[i]) - arg(amps[j]) wrapped to (-pi, pi], or nullopt when either
/// amplitude modulus is at or below `eps` (a vanishing component has no
/// well-defined phase).
std::optional<double> relative_phase(const PureState& psi, Index i, Index j,
                                     double eps = tol::kAmplitudeFloor);

/// True iff b = e^{i*theta} a for some real theta, i.e. ||<a|b>| - 1| is
/// within tolerance. This is the U(1) quotient under which probabilities
/// and relative phases are the surviving observables.
bool global_phase_equivalent(const PureState& a, const PureState& b,
                             double tolerance = tol::kState);

/// Wraps an angle to (-pi, pi].
double wrap_phase(double angle);

}  // namespace pwclock
