#include <cmath>
#include <numbers>

#include <doctest.h>

#include "pwclock/clock_experiment.hpp"
#include "pwclock/quantum_state.hpp"
#include "pwclock/weylheis_algebra.hpp"
#include "test_helpers.hpp"

using namespace pwclock;
using pwclock::testing::approx_eq;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("initial_state") {
    SUBCASE("w = 0 is the first basis state") {
        const auto psi = initial_state({0.0});
        CHECK(approx_eq(psi.amp(0), 1.0));
        CHECK(approx_eq(psi.amp(3), 0.0));
    }

    SUBCASE("w = pi/4 splits evenly") {
        const auto psi = initial_state({kPi / 4.0});
        CHECK(approx_eq(psi.amp(0), 1.0 / std::sqrt(2.0), 1e-15));
        CHECK(approx_eq(psi.amp(3), 1.0 / std::sqrt(2.0), 1e-15));
        CHECK(approx_eq(psi.amp(1), 0.0));
        CHECK(approx_eq(psi.amp(2), 0.0));
    }

    SUBCASE("w = pi/2 leaves only the last component") {
        const auto psi = initial_state({kPi / 2.0});
        CHECK(std::abs(psi.amp(0)) <= 1e-16);
        CHECK(approx_eq(psi.amp(3), 1.0, 1e-15));
    }

    SUBCASE("generalized dimension puts cos first, sin last") {
        const auto psi = initial_state({0.3}, 6);
        CHECK(approx_eq(psi.amp(0), std::cos(0.3), 1e-15));
        CHECK(approx_eq(psi.amp(5), std::sin(0.3), 1e-15));
        CHECK(approx_eq(psi.amp(2), 0.0));
    }
}

TEST_CASE("coefficient_table columns") {
    const double w = 0.37;  // nothing special
    const double c = std::cos(w);
    const double s = std::sin(w);
    const auto table = coefficient_table(w);

    SUBCASE("k = 0 column is the initial state") {
        CHECK(approx_eq(table(0, 0), c, 1e-15));
        CHECK(approx_eq(table(1, 0), 0.0));
        CHECK(approx_eq(table(2, 0), 0.0));
        CHECK(approx_eq(table(3, 0), s, 1e-15));
    }

    SUBCASE("k = 1 column") {
        CHECK(approx_eq(table(0, 1), 0.5 * (c + s), 1e-15));
        CHECK(approx_eq(table(1, 1), 0.5 * std::exp(Complex(0, -w)), 1e-15));
        CHECK(approx_eq(table(2, 1), 0.5 * (c - s), 1e-15));
        CHECK(approx_eq(table(3, 1), 0.5 * std::exp(Complex(0, w)), 1e-15));
    }

    SUBCASE("k = 2 column swaps the populations") {
        CHECK(approx_eq(table(0, 2), c, 1e-15));
        CHECK(approx_eq(table(1, 2), s, 1e-15));
        CHECK(approx_eq(table(2, 2), 0.0));
        CHECK(approx_eq(table(3, 2), 0.0));
    }

    SUBCASE("k = 3 column conjugates the k = 1 phases") {
        CHECK(approx_eq(table(1, 3), 0.5 * std::exp(Complex(0, w)), 1e-15));
        CHECK(approx_eq(table(3, 3), 0.5 * std::exp(Complex(0, -w)), 1e-15));
    }
}

TEST_CASE("run_clock against the closed-form table") {
    const auto f = make_dft(4);

    SUBCASE("32-point omega sweep, per-amplitude agreement") {
        for (int j = 0; j < 32; ++j) {
            const double w = kPi * j / 32.0;
            const ClockInitParams init{w};
            const auto trace = run_clock(f, initial_state(init), 8, "dft", init);
            const auto table = coefficient_table(w);
            for (const auto& step : trace.steps) {
                for (Index i = 0; i < 4; ++i) {
                    CHECK(std::abs(step.amps(i) - table(i, step.n % 4)) < 1e-12);
                }
            }
        }
    }

    SUBCASE("frozen step probabilities at w = 0.2 pi") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(f, initial_state(init), 4, "dft", init);
        // k = 1: ((c+s)/2)^2, 1/4, ((c-s)/2)^2, 1/4
        CHECK(trace.step(1).probs(0) == doctest::Approx(0.4877641290737884).epsilon(1e-12));
        CHECK(trace.step(1).probs(1) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(trace.step(1).probs(2) ==
              doctest::Approx(0.012235870926211609).epsilon(1e-12));
        CHECK(trace.step(1).probs(3) == doctest::Approx(0.25).epsilon(1e-12));
        // k = 2: (c^2, s^2, 0, 0)
        CHECK(trace.step(2).probs(0) == doctest::Approx(0.6545084971874737).epsilon(1e-12));
        CHECK(trace.step(2).probs(1) == doctest::Approx(0.3454915028125263).epsilon(1e-12));
        CHECK(trace.step(2).probs(2) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(trace.step(2).probs(3) == doctest::Approx(0.0).epsilon(1e-12));
    }

    SUBCASE("step 4 reproduces step 0") {
        for (double w : {0.0, 0.1 * kPi, 0.2 * kPi, 0.45 * kPi, 0.8 * kPi}) {
            const ClockInitParams init{w};
            const auto trace = run_clock(f, initial_state(init), 4, "dft", init);
            CHECK((trace.step(4).amps - trace.step(0).amps).cwiseAbs().maxCoeff() <
                  1e-13);
        }
    }
}

TEST_CASE("run_clock record invariants") {
    const ClockInitParams init{0.2 * kPi};
    const auto trace = run_clock(make_dft(4), initial_state(init), 12, "dft", init);

    CHECK(trace.size() == 13);
    CHECK(trace.operator_name == "dft");
    CHECK(trace.step(0).overlap_sq == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((trace.step(0).amps - initial_state(init).amps()).cwiseAbs().maxCoeff() == 0.0);
    for (const auto& step : trace.steps) {
        CHECK(step.probs.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("overlap against the pinned start at w = pi/4") {
        const ClockInitParams half_mix{kPi / 4.0};
        const auto t = run_clock(make_dft(4), initial_state(half_mix), 1, "dft", half_mix);
        CHECK(t.step(1).overlap_sq == doctest::Approx(0.625).epsilon(1e-12));
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(run_clock(make_dft(2), initial_state(init), 4), DimMismatch);
        const OperatorMatrix raw(CMatrix(CMatrix::Identity(4, 4)));
        CHECK_THROWS_AS(run_clock(raw, initial_state(init), 4), UnverifiedOperator);
        CHECK_THROWS_AS(run_clock(make_dft(4), initial_state(init), 0), Error);
        CHECK_THROWS_AS(trace.step(13), IndexOutOfRange);
    }
}

TEST_CASE("can_tell_time") {
    const auto f = make_dft(4);

    SUBCASE("flat at w = pi/4") {
        const ClockInitParams init{0.25 * kPi};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        CHECK_FALSE(can_tell_time(trace, 0));
    }

    SUBCASE("two-valued at w = 0.2 pi") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        CHECK(can_tell_time(trace, 0));
    }

    SUBCASE("w = 3pi/4 is NOT flat: |c_1| alternates 1/2 and 0") {
        // c = -1/sqrt(2), s = +1/sqrt(2): the odd-step value ((c+s)/2)^2
        // vanishes while the even-step value c^2 = 1/2, so this state can
        // tell time even though w = pi/4 (mod pi/2).
        const ClockInitParams init{0.75 * kPi};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        CHECK(can_tell_time(trace, 0));
        CHECK(trace.step(0).probs(0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(trace.step(1).probs(0) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(detect_period(trace, 0) == 2);
    }

    SUBCASE("component bounds") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(f, initial_state(init), 4, "dft", init);
        CHECK_THROWS_AS(can_tell_time(trace, 4), IndexOutOfRange);
    }

    SUBCASE("shift evolution: populations permute, relative phase frozen") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace =
            run_clock(make_shift(4), initial_state(init), 32, "shift", init);
        const auto phase0 = relative_phase(PureState(trace.step(0).amps), 3, 0);
        REQUIRE(phase0.has_value());
        for (const auto& step : trace.steps) {
            const Index a = (3 + step.n) % 4;
            const Index b = (0 + step.n) % 4;
            const auto phase = relative_phase(PureState(step.amps), a, b);
            REQUIRE(phase.has_value());
            CHECK(std::abs(wrap_phase(*phase - *phase0)) < 1e-12);
        }
    }
}

TEST_CASE("detect_period") {
    SUBCASE("DFT at w = 0.2 pi alternates with period 2") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(make_dft(4), initial_state(init), 16, "dft", init);
        CHECK(detect_period(trace, 0) == 2);
    }

    SUBCASE("DFT at w = 0.25 pi is constant: period 1") {
        const ClockInitParams init{0.25 * kPi};
        const auto trace = run_clock(make_dft(4), initial_state(init), 16, "dft", init);
        CHECK(detect_period(trace, 0) == 1);
    }

    SUBCASE("shift evolution has period 4") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace =
            run_clock(make_shift(4), initial_state(init), 16, "shift", init);
        CHECK(detect_period(trace, 0) == 4);
    }

    SUBCASE("no period detectable in a too-short trace") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace =
            run_clock(make_shift(4), initial_state(init), 2, "shift", init);
        CHECK(detect_period(trace, 0) == std::nullopt);
    }

    SUBCASE("component bounds") {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(make_dft(4), initial_state(init), 4, "dft", init);
        CHECK_THROWS_AS(detect_period(trace, -1), IndexOutOfRange);
    }
}
