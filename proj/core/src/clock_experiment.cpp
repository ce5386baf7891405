#include "pwclock/clock_experiment.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pwclock/snapshot_buffer.hpp"

namespace pwclock {

const ClockStep& ClockTrace::step(int n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= steps.size()) {
        throw IndexOutOfRange("ClockTrace::step: no record for step " + std::to_string(n));
    }
    return steps[static_cast<std::size_t>(n)];
}

PureState initial_state(const ClockInitParams& params) {
    return initial_state(params, 4);
}

PureState initial_state(const ClockInitParams& params, Index dim) {
    if (dim < 2) {
        throw InvalidDimension("initial_state: dimension must be >= 2");
    }
    CVector amps = CVector::Zero(dim);
    amps(0) = std::cos(params.theta_omega);
    amps(dim - 1) = std::sin(params.theta_omega);
    return PureState::normalized(std::move(amps));
}

ClockTrace run_clock(const OperatorMatrix& u, const PureState& psi0, int n_steps,
                     std::string operator_name, ClockInitParams init) {
    if (!u.unitary_verified()) {
        throw UnverifiedOperator("run_clock: operator lacks the verified-unitary tag");
    }
    if (u.dim() != psi0.dim()) {
        throw DimMismatch("run_clock: operator dim " + std::to_string(u.dim()) +
                          " vs state dim " + std::to_string(psi0.dim()));
    }
    if (n_steps < 1) {
        throw Error("run_clock: n_steps must be >= 1");
    }

    // The evolution overwrites psi in place; the overlap against the start
    // needs a retained copy, which the buffer provides.
    SnapshotBuffer buffer;
    buffer.store(0, psi0);

    ClockTrace trace;
    trace.operator_name = std::move(operator_name);
    trace.init = init;
    trace.steps.reserve(static_cast<std::size_t>(n_steps) + 1);

    PureState psi = psi0;
    for (int n = 0; n <= n_steps; ++n) {
        if (n > 0) {
            psi = apply(u, psi);
        }
        ClockStep record;
        record.n = n;
        record.amps = psi.amps();
        record.probs = probabilities(psi);
        record.overlap_sq = buffer.compare(0, psi);
        trace.steps.push_back(std::move(record));
    }
    return trace;
}

Eigen::Matrix4cd coefficient_table(double omega) {
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    const Complex e_plus = std::polar(0.5, omega);    // e^{+iw}/2
    const Complex e_minus = std::polar(0.5, -omega);  // e^{-iw}/2

    Eigen::Matrix4cd table;
    // columns k = 0..3; rows are components c_1..c_4
    table.col(0) << c, 0.0, 0.0, s;
    table.col(1) << 0.5 * (c + s), e_minus, 0.5 * (c - s), e_plus;
    table.col(2) << c, s, 0.0, 0.0;
    table.col(3) << 0.5 * (c + s), e_plus, 0.5 * (c - s), e_minus;
    return table;
}

bool can_tell_time(const ClockTrace& trace, Index component, double threshold) {
    if (trace.steps.empty()) {
        return false;
    }
    if (component < 0 || component >= trace.steps.front().probs.size()) {
        throw IndexOutOfRange("can_tell_time: component out of range");
    }
    double lo = trace.steps.front().probs(component);
    double hi = lo;
    for (const auto& step : trace.steps) {
        const double p = step.probs(component);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return (hi - lo) > threshold;
}

std::optional<int> detect_period(const ClockTrace& trace, Index component,
                                 double tolerance) {
    if (trace.steps.empty()) {
        return std::nullopt;
    }
    if (component < 0 || component >= trace.steps.front().probs.size()) {
        throw IndexOutOfRange("detect_period: component out of range");
    }
    const int last = static_cast<int>(trace.steps.size()) - 1;
    for (int p = 1; p <= last / 2; ++p) {
        bool periodic = true;
        for (int n = 0; n + p <= last; ++n) {
            const double a = trace.steps[static_cast<std::size_t>(n)].probs(component);
            const double b = trace.steps[static_cast<std::size_t>(n + p)].probs(component);
            if (std::abs(a - b) > tolerance) {
                periodic = false;
                break;
            }
        }
        if (periodic) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace pwclock
