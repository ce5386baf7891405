#include "pwclock/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "pwclock/clock_experiment.hpp"
#include "pwclock/quantum_state.hpp"
#include "pwclock/snapshot_buffer.hpp"
#include "pwclock/weylheis_algebra.hpp"

namespace pwclock {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> omega_grid(int points) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        grid.push_back(kPi * static_cast<double>(j) / static_cast<double>(points));
    }
    return grid;
}

PureState random_state(Index dim, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector raw(dim);
    for (Index i = 0; i < dim; ++i) {
        raw(i) = Complex(gauss(rng), gauss(rng));
    }
    return PureState::normalized(std::move(raw));
}

struct Checker {
    const CheckOptions& opt;
    std::vector<CheckResult> results;

    void record(std::string name, double worst, double tolerance, std::string detail = "") {
        results.push_back(
            {std::move(name), worst <= tolerance, worst, tolerance, std::move(detail)});
    }

    void report(std::string name, std::string detail) {
        results.push_back({std::move(name), true, 0.0, 0.0, std::move(detail)});
    }
};

void check_root_of_unity(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kRootOfUnity);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= c.opt.dim_max; ++d) {
        const auto root = RootOfUnity::of(d);
        Complex pow = 1.0;
        for (Index k = 0; k < d; ++k) {
            pow *= root.value;
        }
        worst = std::max(worst, std::abs(pow - Complex{1.0, 0.0}));
        worst = std::max(worst, std::abs(root.half_root * root.half_root - root.value));
    }
    c.record("root-of-unity", worst, tolerance);
}

void check_construction_unitarity(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= c.opt.dim_max; ++d) {
        worst = std::max(worst, make_shift(d).unitary_deviation());
        worst = std::max(worst, make_clock(d).unitary_deviation());
        worst = std::max(worst, make_dft(d).unitary_deviation());
    }
    c.record("construction-unitarity", worst, tolerance, "P, Q, F over the dim sweep");
}

void check_intertwining(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= c.opt.dim_max; ++d) {
        const auto p = make_shift(d);
        const auto q = make_clock(d);
        const auto f = make_dft(d);
        worst = std::max(
            worst, max_abs_diff((f * p).entries(), (q * f).entries()));
    }
    c.record("dft-intertwining", worst, tolerance, "FP = QF");
}

void check_orders(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= c.opt.dim_max; ++d) {
        const CMatrix identity = CMatrix::Identity(d, d);
        worst = std::max(worst, max_abs_diff(
            operator_power(make_shift(d), static_cast<std::uint64_t>(d)).entries(), identity));
        worst = std::max(worst, max_abs_diff(
            operator_power(make_clock(d), static_cast<std::uint64_t>(d)).entries(), identity));
        worst = std::max(worst,
                         max_abs_diff(operator_power(make_dft(d), 4).entries(), identity));
        worst = std::max(worst, max_abs_diff(operator_power(make_dft(d), 2).entries(),
                                             make_parity(d).entries()));
    }
    c.record("operator-orders", worst, tolerance, "P^d = Q^d = I, F^2 = parity, F^4 = I");
}

void check_weyl_commutation(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= c.opt.dim_max; ++d) {
        const auto p = make_shift(d);
        const auto q = make_clock(d);
        const Complex omega = RootOfUnity::of(d).value;
        worst = std::max(worst, max_abs_diff((q * p).entries(),
                                             CMatrix(omega * (p * q).entries())));
    }
    c.record("weyl-commutation", worst, tolerance, "QP = omega PQ");
}

void check_monomial_composition(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    const Index hi = std::min<Index>(c.opt.dim_max, 6);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= hi; ++d) {
        for (Index r = 0; r < d; ++r) {
            for (Index s = 0; s < d; ++s) {
                for (Index rp = 0; rp < d; ++rp) {
                    for (Index sp = 0; sp < d; ++sp) {
                        const CMatrix prod =
                            (monomial(d, r, s) * monomial(d, rp, sp)).entries();
                        const CMatrix target =
                            monomial(d, (r + rp) % d, (s + sp) % d).entries();
                        // column 0 of a monomial is nonzero exactly at row r+r'
                        const Index row = (r + rp) % d;
                        const Complex z = prod(row, 0) / target(row, 0);
                        worst = std::max(worst, std::abs(std::abs(z) - 1.0));
                        worst = std::max(worst, max_abs_diff(prod, CMatrix(z * target)));
                    }
                }
            }
        }
    }
    c.record("monomial-composition", worst, tolerance,
             "D(r,s) D(r',s') = phase * D(r+r', s+s')");
}

void check_power_oracle(Checker& c) {
    const double tolerance = c.opt.tolerance_or(1e-10);
    double worst = 0.0;
    for (Index d : {Index{2}, Index{4}, Index{8}}) {
        if (d < c.opt.dim_min || d > c.opt.dim_max) {
            continue;
        }
        for (const auto& u : {make_shift(d), make_clock(d), make_dft(d)}) {
            CMatrix naive = CMatrix::Identity(d, d);
            for (int n = 0; n <= c.opt.power_max; ++n) {
                if (n > 0) {
                    naive = naive * u.entries();
                }
                worst = std::max(
                    worst,
                    max_abs_diff(
                        operator_power(u, static_cast<std::uint64_t>(n)).entries(), naive));
            }
        }
    }
    c.record("power-oracle", worst, tolerance,
             "repeated squaring vs naive n-fold product");
}

void check_strict_equal_modulus(Checker& c) {
    const double tolerance = c.opt.tolerance_or(1e-10);
    double worst = 0.0;
    for (Index d = c.opt.dim_min; d <= c.opt.dim_max; ++d) {
        if (d % 2 != 0) {
            continue;  // the quadratic family unitarizes only for even d
        }
        const auto u = build_u_phi(quadratic_phase(d), UPhiMode::Strict);
        const CMatrix coeffs = weyl_coefficients(u);
        const double expect = 1.0 / static_cast<double>(d);
        for (Index r = 0; r < d; ++r) {
            for (Index s = 0; s < d; ++s) {
                worst = std::max(worst, std::abs(std::abs(coeffs(r, s)) - expect));
            }
        }
    }
    c.record("strict-equal-modulus", worst, tolerance,
             "strict U(phi): all expansion coefficients share one modulus");
}

void check_strict_order_report(Checker& c) {
    if (c.opt.dim_min > 4 || c.opt.dim_max < 4) {
        return;
    }
    const auto u = build_u_phi(quadratic_phase(4), UPhiMode::Strict);
    const auto exact = order_of(u, 8, false);
    const auto phase = order_of(u, 8, true);
    const double dev4 = max_abs_diff(operator_power(u, 4).entries(),
                                     CMatrix(CMatrix::Identity(4, 4)));
    std::ostringstream detail;
    detail << "strict U(phi) at d=4: order "
           << (exact ? std::to_string(*exact) : std::string("none<=8")) << " (up to phase "
           << (phase ? std::to_string(*phase) : std::string("none<=8"))
           << "); |U^4 - I| = " << dev4 << " -- the family is NOT order-4 in general";
    c.report("strict-order-report", detail.str());
}

void check_norm_conservation(Checker& c) {
    const double tolerance = c.opt.tolerance_or(1e-9);
    std::mt19937 rng(0x5eed);
    const auto f = make_dft(4);
    PureState psi = random_state(4, rng);
    for (int n = 0; n < 10'000; ++n) {
        psi = apply(f, psi);
    }
    c.record("norm-conservation", std::abs(psi.norm() - 1.0), tolerance,
             "1e4 sequential DFT applications");
}

void check_global_phase_invariance(Checker& c) {
    const double tolerance = c.opt.tolerance_or(1e-12);
    std::mt19937 rng(0xfeed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst = 0.0;
    std::vector<PureState> states;
    for (int i = 0; i < 24; ++i) {
        states.push_back(random_state(4, rng));
    }
    for (const auto& psi : states) {
        const double theta = angle(rng);
        const PureState rotated =
            PureState::normalized(CVector(std::polar(1.0, theta) * psi.amps()));
        worst = std::max(worst,
                         (probabilities(psi) - probabilities(rotated)).cwiseAbs().maxCoeff());
        const auto rp = relative_phase(psi, 0, 1);
        const auto rp_rot = relative_phase(rotated, 0, 1);
        if (rp && rp_rot) {
            worst = std::max(worst, std::abs(wrap_phase(*rp - *rp_rot)));
        }
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const double theta_i = angle(rng);
            const double theta_j = angle(rng);
            const PureState a = PureState::normalized(
                CVector(std::polar(1.0, theta_i) * states[i].amps()));
            const PureState b = PureState::normalized(
                CVector(std::polar(1.0, theta_j) * states[j].amps()));
            worst = std::max(worst, std::abs(std::abs(overlap(a, b)) -
                                             std::abs(overlap(states[i], states[j]))));
        }
    }
    c.record("global-phase-invariance", worst, tolerance,
             "probabilities, relative phases, pairwise |overlap|");
}

void check_overlap_conjugation(Checker& c) {
    std::mt19937 rng(0xabcd);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PureState a = random_state(4, rng);
        const PureState b = random_state(4, rng);
        const Complex lhs = overlap(a, b);
        const Complex rhs = std::conj(overlap(b, a));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    c.record("overlap-conjugation", worst, c.opt.tolerance_or(0.0),
             "overlap(a,b) == conj(overlap(b,a)) exactly as computed");
}

void check_isometry(Checker& c) {
    const double tolerance = c.opt.tolerance_or(1e-11);
    std::mt19937 rng(0xdead);
    double worst = 0.0;
    const std::vector<OperatorMatrix> ops = {
        make_shift(4), make_clock(4), make_dft(4),
        build_u_phi(quadratic_phase(4), UPhiMode::Strict)};
    for (const auto& u : ops) {
        for (int i = 0; i < 12; ++i) {
            const PureState a = random_state(4, rng);
            const PureState b = random_state(4, rng);
            worst = std::max(worst,
                             std::abs(overlap(apply(u, a), apply(u, b)) - overlap(a, b)));
        }
    }
    c.record("unitary-isometry", worst, tolerance, "overlap(Ua, Ub) = overlap(a, b)");
}

void check_golden_table(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    const auto f = make_dft(4);
    double worst = 0.0;
    for (double omega : omega_grid(c.opt.omega_grid)) {
        const ClockInitParams init{omega};
        const auto trace = run_clock(f, initial_state(init), 8, "dft", init);
        const Eigen::Matrix4cd table = coefficient_table(omega);
        for (const auto& step : trace.steps) {
            const auto col = table.col(step.n % 4);
            for (Index i = 0; i < 4; ++i) {
                worst = std::max(worst, std::abs(step.amps(i) - col(i)));
            }
        }
    }
    c.record("clock-golden-table", worst, tolerance,
             "run_clock(F) vs closed-form coefficients over the omega grid");
}

void check_prob_sum(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kState);
    double worst = 0.0;
    for (const auto& u : {make_shift(4), make_clock(4), make_dft(4)}) {
        for (double omega : omega_grid(c.opt.omega_grid)) {
            const ClockInitParams init{omega};
            const auto trace = run_clock(u, initial_state(init), 16, "op", init);
            for (const auto& step : trace.steps) {
                worst = std::max(worst, std::abs(step.probs.sum() - 1.0));
            }
        }
    }
    c.record("clock-prob-sum", worst, tolerance, "per-step probability sums");
}

void check_tell_time_grid(Checker& c) {
    const auto f = make_dft(4);
    int mismatches = 0;
    std::ostringstream detail;
    for (int j = 0; j < c.opt.omega_grid; ++j) {
        const double omega = kPi * static_cast<double>(j) / static_cast<double>(c.opt.omega_grid);
        const ClockInitParams init{omega};
        const auto trace = run_clock(f, initial_state(init), 32, "dft", init);
        const bool told = can_tell_time(trace, 0);
        // |c_1(n)|^2 only takes the values c^2 (n even) and ((c+s)/2)^2
        // (n odd), so the line is flat exactly when those coincide, i.e.
        // tan w = 1 or tan w = -3. On the default grid that is w = pi/4
        // alone; w = 3pi/4 is NOT flat ((c+s)/2 = 0 there while c^2 = 1/2).
        const double even_value = std::pow(std::cos(omega), 2);
        const double odd_value = std::pow(0.5 * (std::cos(omega) + std::sin(omega)), 2);
        const bool expect_flat = std::abs(even_value - odd_value) <= 1e-12;
        if (told == expect_flat) {
            ++mismatches;
            detail << " w/pi=" << omega / kPi;
        }
    }
    c.record("clock-tell-time-grid", static_cast<double>(mismatches), 0.0,
             mismatches == 0 ? "flat exactly where the closed-form branches coincide"
                             : "mismatches at" + detail.str());
}

void check_shift_control(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    const auto p = make_shift(4);
    double worst = 0.0;
    for (double omega : {0.2 * kPi, 0.3 * kPi}) {
        const ClockInitParams init{omega};
        const auto trace = run_clock(p, initial_state(init), 32, "shift", init);

        // probability multiset is carried along unchanged
        auto sorted0 = trace.steps.front().probs;
        std::sort(sorted0.begin(), sorted0.end());
        for (const auto& step : trace.steps) {
            auto sorted = step.probs;
            std::sort(sorted.begin(), sorted.end());
            worst = std::max(worst, (sorted - sorted0).cwiseAbs().maxCoeff());
        }

        // the relative phase of the two populated components never moves
        const auto phase0 = relative_phase(PureState(trace.steps.front().amps), 3, 0);
        for (const auto& step : trace.steps) {
            const Index a = (3 + step.n) % 4;
            const Index b = (0 + step.n) % 4;
            const auto phase = relative_phase(PureState(step.amps), a, b);
            if (!phase || !phase0) {
                worst = std::max(worst, 1.0);
                continue;
            }
            worst = std::max(worst, std::abs(wrap_phase(*phase - *phase0)));
        }
    }
    c.record("clock-shift-control", worst, tolerance,
             "shift evolution permutes probabilities, fixed relative phase");
}

void check_period4(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    double worst = 0.0;
    for (const auto& u : {make_shift(4), make_clock(4), make_dft(4)}) {
        const ClockInitParams init{0.2 * kPi};
        const auto trace = run_clock(u, initial_state(init), 32, "op", init);
        for (const auto& step : trace.steps) {
            if (step.n % 4 == 0) {
                worst = std::max(
                    worst,
                    (step.amps - trace.steps.front().amps).cwiseAbs().maxCoeff());
            }
        }
    }
    c.record("clock-period4", worst, tolerance, "steps 4m reproduce step 0 for P, Q, F");
}

void check_buffer(Checker& c) {
    const double tolerance = c.opt.tolerance_or(tol::kOperator);
    std::mt19937 rng(0xbeef);
    double worst = 0.0;

    SnapshotBuffer bounded(3);
    const PureState psi0 = random_state(4, rng);
    bounded.store(0, psi0);
    for (int step = 1; step <= 10; ++step) {
        bounded.store(step, random_state(4, rng));
    }
    if (!bounded.contains(0) || bounded.size() > 3) {
        worst = std::max(worst, 1.0);
    }
    worst = std::max(worst, std::abs(bounded.compare(0, psi0) - 1.0));

    for (int i = 0; i < 20; ++i) {
        const PureState a = random_state(4, rng);
        const PureState b = random_state(4, rng);
        const double ab = std::norm(overlap(a, b));
        const double ba = std::norm(overlap(b, a));
        worst = std::max(worst, std::abs(ab - ba));
    }
    c.record("buffer-semantics", worst, tolerance,
             "step-0 pinning, compare symmetry, store/compare round trip");
}

}  // namespace

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
    Checker c{options, {}};
    check_root_of_unity(c);
    check_construction_unitarity(c);
    check_intertwining(c);
    check_orders(c);
    check_weyl_commutation(c);
    check_monomial_composition(c);
    check_power_oracle(c);
    check_strict_equal_modulus(c);
    check_strict_order_report(c);
    check_norm_conservation(c);
    check_global_phase_invariance(c);
    check_overlap_conjugation(c);
    check_isometry(c);
    check_golden_table(c);
    check_prob_sum(c);
    check_tell_time_grid(c);
    check_shift_control(c);
    check_period4(c);
    check_buffer(c);
    return c.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace pwclock
