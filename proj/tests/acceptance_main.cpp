// Acceptance suite: the quantitative exit gate for the library. Each
// criterion runs at its stated tolerance and runtime budget and prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pwclock/clock_experiment.hpp"
#include "pwclock/quantum_state.hpp"
#include "pwclock/snapshot_buffer.hpp"
#include "pwclock/weylheis_algebra.hpp"

using namespace pwclock;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    double worst = 0.0;
    std::string detail;

    void bound(double value, double limit) {
        worst = std::max(worst, value);
        if (value > limit) {
            pass = false;
        }
    }

    void expect(bool condition, const std::string& why) {
        if (!condition) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += why;
        }
    }
};

PureState prepared_state(double omega) {
    return initial_state(ClockInitParams{omega});
}

PureState seeded_random_state(Index dim, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector raw(dim);
    for (Index i = 0; i < dim; ++i) {
        raw(i) = Complex(gauss(rng), gauss(rng));
    }
    return PureState::normalized(std::move(raw));
}

// 01: closed-form coefficient table vs F^k on the prepared state,
// 32 omegas, k = 0..3, per amplitude within 1e-12.
Outcome crit_golden_table() {
    Outcome out;
    const auto f = make_dft(4);
    for (int j = 0; j < 32; ++j) {
        const double omega = kPi * j / 32.0;
        const auto table = coefficient_table(omega);
        const auto psi0 = prepared_state(omega);
        for (int k = 0; k < 4; ++k) {
            const auto psi_k = apply(operator_power(f, static_cast<std::uint64_t>(k)), psi0);
            for (Index i = 0; i < 4; ++i) {
                out.bound(std::abs(psi_k.amp(i) - table(i, k)), 1e-12);
            }
        }
    }
    return out;
}

// 02: figure-level behavior of |c_1(n)|^2 for w/pi in {0.25, 0.2, 0.5}.
Outcome crit_figure_branches() {
    Outcome out;
    const auto f = make_dft(4);

    {
        const ClockInitParams init{0.25 * kPi};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        for (const auto& step : trace.steps) {
            out.bound(std::abs(step.probs(0) - 0.5), 1e-12);
        }
    }
    {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        for (const auto& step : trace.steps) {
            const double expected = step.n % 2 == 0 ? 0.654508497 : 0.487764129;
            out.bound(std::abs(step.probs(0) - expected), 1e-9);
        }
    }
    {
        const ClockInitParams init{0.5 * kPi};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        for (const auto& step : trace.steps) {
            const double expected = step.n % 2 == 0 ? 0.0 : 0.25;
            out.bound(std::abs(step.probs(0) - expected), 1e-12);
        }
    }
    return out;
}

// 03: operator identities at d = 4.
Outcome crit_operator_identities() {
    Outcome out;
    const auto p = make_shift(4);
    const auto q = make_clock(4);
    const auto f = make_dft(4);
    const CMatrix identity = CMatrix::Identity(4, 4);

    out.bound(max_abs_diff(operator_power(f, 4).entries(), identity), 1e-12);
    out.bound(max_abs_diff(operator_power(p, 4).entries(), identity), 1e-12);
    out.bound(max_abs_diff(operator_power(q, 4).entries(), identity), 1e-12);
    out.bound(max_abs_diff((f * p).entries(), (q * f).entries()), 1e-12);
    out.bound(max_abs_diff(operator_power(f, 2).entries(), make_parity(4).entries()),
              1e-12);
    return out;
}

// 04: Weyl relation QP = omega PQ for d = 2..16.
Outcome crit_weyl_sweep() {
    Outcome out;
    for (Index d = 2; d <= 16; ++d) {
        const auto p = make_shift(d);
        const auto q = make_clock(d);
        const Complex omega = RootOfUnity::of(d).value;
        out.bound(max_abs_diff((q * p).entries(), CMatrix(omega * (p * q).entries())),
                  1e-12);
    }
    return out;
}

// 05: norm drift after 1e4 sequential DFT applications.
Outcome crit_norm_conservation() {
    Outcome out;
    std::mt19937 rng(2026);
    PureState psi = seeded_random_state(4, rng);
    const auto f = make_dft(4);
    for (int n = 0; n < 10'000; ++n) {
        psi = apply(f, psi);
    }
    out.bound(std::abs(psi.norm() - 1.0), 1e-9);
    return out;
}

// 06: |<psi0|F psi0>|^2 = 0.625 at w = pi/4, by a raw matrix-vector oracle
// and by the trace pipeline.
Outcome crit_overlap_spot() {
    Outcome out;
    const double omega = kPi / 4.0;

    // oracle: hand DFT entries i^{kl}/2, explicit loops only
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    const Complex psi0[4] = {c, 0.0, 0.0, s};
    Complex psi1[4];
    const Complex i_unit(0, 1);
    for (int k = 0; k < 4; ++k) {
        psi1[k] = 0.0;
        for (int l = 0; l < 4; ++l) {
            Complex w = 1.0;
            for (int e = 0; e < (k * l) % 4; ++e) {
                w *= i_unit;
            }
            psi1[k] += 0.5 * w * psi0[l];
        }
    }
    Complex inner = 0.0;
    for (int k = 0; k < 4; ++k) {
        inner += std::conj(psi0[k]) * psi1[k];
    }
    out.bound(std::abs(std::norm(inner) - 0.625), 1e-12);

    // pipeline: run_clock overlap record at step 1
    const ClockInitParams init{omega};
    const auto trace = run_clock(make_dft(4), initial_state(init), 1, "dft", init);
    out.bound(std::abs(trace.step(1).overlap_sq - 0.625), 1e-12);
    return out;
}

// 07: shift-evolution negative control over 32 steps.
Outcome crit_shift_control() {
    Outcome out;
    const ClockInitParams init{0.2 * kPi};
    const auto trace = run_clock(make_shift(4), initial_state(init), 32, "shift", init);

    const auto phase0 = relative_phase(PureState(trace.step(0).amps), 3, 0);
    out.expect(phase0.has_value(), "initial relative phase undefined");
    for (const auto& step : trace.steps) {
        const Index a = (3 + step.n) % 4;
        const Index b = (0 + step.n) % 4;
        const auto phase = relative_phase(PureState(step.amps), a, b);
        out.expect(phase.has_value(), "tracked relative phase undefined");
        if (phase && phase0) {
            out.bound(std::abs(wrap_phase(*phase - *phase0)), 1e-12);
        }
    }

    // multiset reading: sorted per-step probabilities never move, so the
    // variation stays under any sane tell-time threshold
    auto sorted0 = trace.step(0).probs;
    std::sort(sorted0.begin(), sorted0.end());
    double variation = 0.0;
    for (const auto& step : trace.steps) {
        auto sorted = step.probs;
        std::sort(sorted.begin(), sorted.end());
        variation = std::max(variation, (sorted - sorted0).cwiseAbs().maxCoeff());
    }
    out.expect(variation <= 1e-9, "probability multiset drifted");
    out.worst = std::max(out.worst, variation);
    return out;
}

// 08: strict-mode rejection of phi = 0 and polar-mode recovery.
Outcome crit_strict_rejection() {
    Outcome out;
    try {
        build_u_phi(PhaseMatrix::zero(4), UPhiMode::Strict);
        out.expect(false, "strict mode accepted phi = 0");
    } catch (const NotUnitarizable& e) {
        out.expect(e.deviation() > 0.1, "deviation unexpectedly small");
        out.detail = "strict deviation " + std::to_string(e.deviation());
    }
    const auto u = build_u_phi(PhaseMatrix::zero(4), UPhiMode::Polar);
    out.bound(u.unitary_deviation(), 1e-12);
    return out;
}

// 09: repeated squaring vs naive multiplication for n <= 64.
Outcome crit_power_oracle() {
    Outcome out;
    for (Index d : {Index{2}, Index{4}, Index{8}}) {
        for (const auto& u : {make_shift(d), make_clock(d), make_dft(d)}) {
            CMatrix naive = CMatrix::Identity(d, d);
            for (int n = 0; n <= 64; ++n) {
                if (n > 0) {
                    CMatrix next = CMatrix::Zero(d, d);
                    for (Index i = 0; i < d; ++i) {
                        for (Index j = 0; j < d; ++j) {
                            for (Index k = 0; k < d; ++k) {
                                next(i, j) += naive(i, k) * u.entries()(k, j);
                            }
                        }
                    }
                    naive = std::move(next);
                }
                out.bound(
                    max_abs_diff(operator_power(u, static_cast<std::uint64_t>(n)).entries(),
                                 naive),
                    1e-10);
            }
        }
    }
    return out;
}

// 10: global-phase quotient: probabilities and pairwise |overlap| are
// invariant under e^{i theta} on 100 random states.
Outcome crit_global_phase() {
    Outcome out;
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> angle(-kPi, kPi);

    std::vector<PureState> states;
    std::vector<PureState> rotated;
    states.reserve(100);
    rotated.reserve(100);
    for (int i = 0; i < 100; ++i) {
        states.push_back(seeded_random_state(4, rng));
        rotated.push_back(PureState::normalized(
            CVector(std::polar(1.0, angle(rng)) * states.back().amps())));
    }

    for (std::size_t i = 0; i < states.size(); ++i) {
        out.bound(
            (probabilities(states[i]) - probabilities(rotated[i])).cwiseAbs().maxCoeff(),
            1e-12);
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const double plain = std::abs(overlap(states[i], states[j]));
            const double twisted = std::abs(overlap(rotated[i], rotated[j]));
            out.bound(std::abs(plain - twisted), 1e-12);
        }
    }
    return out;
}

// 11: two figure1 CLI invocations produce byte-identical CSV.
Outcome crit_determinism() {
    Outcome out;
    auto capture = [&out]() -> std::string {
        FILE* pipe = popen(PWCLOCK_CLI_PATH " figure1 2>/dev/null", "r");
        if (pipe == nullptr) {
            out.expect(false, "popen failed");
            return {};
        }
        std::string text;
        char buf[4096];
        std::size_t got = 0;
        while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
            text.append(buf, got);
        }
        const int status = pclose(pipe);
        out.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "figure1 exited nonzero");
        return text;
    };
    const std::string first = capture();
    const std::string second = capture();
    out.expect(!first.empty(), "empty CSV");
    out.expect(first == second, "outputs differ between runs");
    return out;
}

struct Criterion {
    const char* name;
    double budget_ms;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"01 eq10-golden-table", 50.0, crit_golden_table},
        {"02 figure1-branches", 50.0, crit_figure_branches},
        {"03 operator-identities", 10.0, crit_operator_identities},
        {"04 weyl-relation-sweep", 100.0, crit_weyl_sweep},
        {"05 norm-conservation", 100.0, crit_norm_conservation},
        {"06 overlap-spot-value", 10.0, crit_overlap_spot},
        {"07 shift-negative-control", 10.0, crit_shift_control},
        {"08 strict-mode-rejection", 10.0, crit_strict_rejection},
        {"09 power-oracle", 100.0, crit_power_oracle},
        {"10 global-phase-quotient", 50.0, crit_global_phase},
        {"11 figure1-determinism", 100.0, crit_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        const bool in_budget = elapsed_ms < criterion.budget_ms;
        const bool pass = outcome.pass && in_budget;
        std::printf("[%s] %-26s %8.2f ms (budget %5.0f ms)  worst %.3e%s%s\n",
                    pass ? "PASS" : "FAIL", criterion.name, elapsed_ms,
                    criterion.budget_ms, outcome.worst,
                    outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
        if (!pass) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
        return 1;
    }
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
}
