#pragma once

/**
 * @file
 * The two-photon clock run: prepare (cos w, 0, 0, sin w), evolve under a
 * one-step unitary, record amplitudes, probabilities and the overlap with
 * the buffered initial state, and decide whether the record can tell time.
 */

#include <optional>
#include <string>
#include <vector>

#include "pwclock/quantum_state.hpp"
#include "pwclock/types.hpp"
#include "pwclock/weylheis_algebra.hpp"

namespace pwclock {

/// Mixing angle w of the initial state, in radians. (This is the state
/// preparation angle, not the root of unity.)
struct ClockInitParams {
    double theta_omega = 0.0;
};

struct ClockStep {
    int n = 0;
    CVector amps;
    Eigen::VectorXd probs;
    double overlap_sq = 1.0;  ///< |<psi_0|psi_n>|^2
};

struct ClockTrace {
    std::string operator_name;
    ClockInitParams init;
    std::vector<ClockStep> steps;  ///< indices 0..n_steps inclusive

    std::size_t size() const { return steps.size(); }
    const ClockStep& step(int n) const;
};

/// (cos w, 0, 0, sin w) in the two-photon helicity basis (d = 4).
PureState initial_state(const ClockInitParams& params);

/// Generalization to arbitrary d: cos w on the first component, sin w on
/// the last, zeros between. Coincides with the d = 4 state above.
PureState initial_state(const ClockInitParams& params, Index dim);

/// Applies `u` step by step, recording every state from 0 to n_steps. The
/// initial state is retained through a SnapshotBuffer copy, which is what
/// makes the per-step overlap computable at all once psi has been
/// overwritten by the evolution.
ClockTrace run_clock(const OperatorMatrix& u, const PureState& psi0,
                     int n_steps, std::string operator_name = "custom",
                     ClockInitParams init = {});

/// Closed-form coefficients c_i(k) of F^k (cos w, 0, 0, sin w) at d = 4,
/// for i = 1..4 (rows 0..3) and k = 0..3 (columns). Written directly from
/// the known reduction of DFT powers -- independent of the matrix pipeline,
/// and used as its golden oracle:
///
///   k=0: (c, 0, 0, s)
///   k=1: ((c+s)/2, e^{-iw}/2, (c-s)/2, e^{+iw}/2)
///   k=2: (c, s, 0, 0)
///   k=3: ((c+s)/2, e^{+iw}/2, (c-s)/2, e^{-iw}/2)
Eigen::Matrix4cd coefficient_table(double omega);

/// True iff the probability of `component` varies across the recorded
/// steps by more than `threshold`. A flat line cannot serve as a clock.
bool can_tell_time(const ClockTrace& trace, Index component,
                   double threshold = 1e-9);

/// Smallest period p with probs[component] equal at steps n and n+p for
/// every recorded n, within `tolerance`; nullopt when no p <= steps/2
/// works.
std::optional<int> detect_period(const ClockTrace& trace, Index component,
                                 double tolerance = 1e-10);

}  // namespace pwclock
