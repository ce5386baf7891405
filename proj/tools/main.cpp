// pwclock command-line harness.
//
// Subcommands:
//   figure1  two-photon DFT clock sweep, CSV of |c_1(n)|^2 per step
//   evolve   arbitrary one-step evolution, full trace as CSV or JSON
//   ops      print an operator matrix as JSON (plus identity checks for dft)
//   verify   run the library's invariant suite
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 strict-mode expansion not unitarizable.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwclock/clock_experiment.hpp"
#include "pwclock/quantum_state.hpp"
#include "pwclock/selfcheck.hpp"
#include "pwclock/serialize.hpp"
#include "pwclock/snapshot_buffer.hpp"
#include "pwclock/weylheis_algebra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotUnitarizable = 3;

struct RunConfig {
    pwclock::Index dim = 4;
    std::string operator_spec = "dft";
    std::string phi_file;
    std::string phi_mode = "strict";
    std::vector<double> omega_list;  // fractions of pi
    int steps = 32;
    std::string format = "csv";
    std::string out_path;
    double tolerance = pwclock::tol::kOperator;
    pwclock::Index dim_max = 16;
};

// Output sink: file when --out is given, stdout otherwise.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw pwclock::Error("cannot open output file: " + path);
            }
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

pwclock::OperatorMatrix build_operator(const RunConfig& config) {
    using namespace pwclock;
    std::string name = config.operator_spec;
    std::string phi_path = config.phi_file;
    if (name.rfind("phi:", 0) == 0) {
        phi_path = name.substr(4);
        name = "phi";
    }
    if (name == "dft") {
        return make_dft(config.dim);
    }
    if (name == "shift") {
        return make_shift(config.dim);
    }
    if (name == "clock") {
        return make_clock(config.dim);
    }
    if (name == "phi") {
        if (phi_path.empty()) {
            throw Error("operator 'phi' requires a file (--operator phi:<path> or --phi-file)");
        }
        const PhaseMatrix phi = load_phase_matrix(phi_path);
        const UPhiMode mode =
            config.phi_mode == "polar" ? UPhiMode::Polar : UPhiMode::Strict;
        return build_u_phi(phi, mode, config.tolerance);
    }
    throw Error("unknown operator: " + config.operator_spec +
                " (expected dft, shift, clock, or phi:<path>)");
}

pwclock::ClockTrace run_trace(const RunConfig& config, const pwclock::OperatorMatrix& op,
                              double omega_over_pi) {
    using namespace pwclock;
    const ClockInitParams init{omega_over_pi * std::numbers::pi};
    return run_clock(op, initial_state(init, config.dim), config.steps,
                     config.operator_spec, init);
}

void print_basis_line(std::ostream& os, pwclock::Index dim) {
    os << "basis:";
    for (pwclock::Index k = 0; k < dim; ++k) {
        os << ' ' << pwclock::BasisLabel::of(dim, k).to_string();
    }
    os << '\n';
}

int cmd_figure1(const RunConfig& config) {
    using namespace pwclock;
    if (config.operator_spec != "dft") {
        std::cerr << "figure1 runs the dft operator only\n";
        return kExitUsage;
    }
    if (config.format != "csv") {
        std::cerr << "figure1 emits CSV only\n";
        return kExitUsage;
    }
    const auto op = make_dft(config.dim);
    OutputSink sink(config.out_path);
    write_trace_csv_header(sink.stream());
    for (double omega_over_pi : config.omega_list) {
        const auto trace = run_trace(config, op, omega_over_pi);
        write_trace_csv_rows(sink.stream(), trace, Index{0});
    }
    sink.stream().flush();
    return kExitOk;
}

int cmd_evolve(const RunConfig& config) {
    using namespace pwclock;
    if (config.omega_list.size() != 1) {
        std::cerr << "evolve expects exactly one --omega value\n";
        return kExitUsage;
    }
    const auto op = build_operator(config);
    const auto trace = run_trace(config, op, config.omega_list.front());

    if (config.dim == 4) {
        std::cerr << "initial state: cos(w) " << BasisLabel::of(4, 0).to_string()
                  << " + sin(w) " << BasisLabel::of(4, 3).to_string()
                  << ", w/pi = " << format_omega_over_pi(config.omega_list.front())
                  << '\n';
    }

    OutputSink sink(config.out_path);
    if (config.format == "json") {
        sink.stream() << to_json_string(trace, 2) << '\n';
    } else {
        write_trace_csv(sink.stream(), trace);
    }
    sink.stream().flush();
    return kExitOk;
}

int cmd_ops(const RunConfig& config) {
    using namespace pwclock;
    const auto op = build_operator(config);
    OutputSink sink(config.out_path);
    sink.stream() << to_json_string(op, 2) << '\n';
    sink.stream().flush();

    print_basis_line(std::cerr, config.dim);
    std::string name = config.operator_spec;
    if (name.rfind("phi:", 0) == 0) {
        name = "phi";
    }
    if (name == "dft") {
        const auto p = make_shift(config.dim);
        const auto q = make_clock(config.dim);
        std::cerr << "check FP = QF: max-abs deviation "
                  << max_abs_diff((op * p).entries(), (q * op).entries()) << '\n';
        std::cerr << "check F^4 = I: max-abs deviation "
                  << max_abs_diff(operator_power(op, 4).entries(),
                                  CMatrix(CMatrix::Identity(config.dim, config.dim)))
                  << '\n';
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& config, bool tolerance_set) {
    using namespace pwclock;
    CheckOptions options;
    options.dim_max = config.dim_max;
    if (tolerance_set) {
        options.tolerance_override = config.tolerance;
    }
    const auto results = run_all_checks(options);
    int failures = 0;
    for (const auto& result : results) {
        std::printf("[%s] %-24s worst %.3e  tol %.3e  %s\n",
                    result.passed ? "PASS" : "FAIL", result.name.c_str(), result.worst,
                    result.tolerance, result.detail.c_str());
        if (!result.passed) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu checks failed\n", failures, results.size());
        return kExitVerifyFailed;
    }
    std::printf("all %zu checks passed\n", results.size());
    return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--dim", config.dim, "Qudit dimension")->check(CLI::Range(2, 64));
    cmd->add_option("--out", config.out_path, "Output file (default: stdout)");
    cmd->add_option("--tolerance", config.tolerance,
                    "Unitarity verification tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qudit clock simulator: finite Weyl-Heisenberg operators, DFT "
                 "evolution, relative-phase clock readout"};
    app.require_subcommand(1);

    RunConfig config;
    bool tolerance_set = false;

    auto* figure1 = app.add_subcommand(
        "figure1", "DFT clock sweep: CSV of |c_1(n)|^2 per step and omega");
    config.omega_list = {0.2, 0.25, 0.5};
    add_common_options(figure1, config);
    figure1->add_option("--omega", config.omega_list,
                        "Omega values as fractions of pi (comma-separated)")
        ->delimiter(',')
        ->check(CLI::Number);
    figure1->add_option("--steps", config.steps, "Number of evolution steps")
        ->check(CLI::PositiveNumber);
    figure1->add_option("--operator", config.operator_spec, "Evolution operator");
    figure1->add_option("--format", config.format, "Output format (csv)");

    auto* evolve = app.add_subcommand(
        "evolve", "Evolve the (cos w, 0, ..., 0, sin w) state and emit the trace");
    add_common_options(evolve, config);
    evolve->add_option("--operator", config.operator_spec,
                       "dft | shift | clock | phi:<path>");
    evolve->add_option("--phi-file", config.phi_file, "Phase-matrix JSON file");
    evolve->add_option("--phi-mode", config.phi_mode, "strict | polar")
        ->check(CLI::IsMember({"strict", "polar"}));
    evolve
        ->add_option("--omega", config.omega_list,
                     "Omega as a fraction of pi (exactly one value)")
        ->delimiter(',')
        ->check(CLI::Number)
        ->required();
    evolve->add_option("--steps", config.steps, "Number of evolution steps")
        ->check(CLI::PositiveNumber);
    evolve->add_option("--format", config.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* ops = app.add_subcommand("ops", "Print an operator matrix as JSON");
    add_common_options(ops, config);
    ops->add_option("--show", config.operator_spec, "dft | shift | clock | phi:<path>")
        ->required();
    ops->add_option("--phi-mode", config.phi_mode, "strict | polar")
        ->check(CLI::IsMember({"strict", "polar"}));

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--dim-max", config.dim_max, "Largest dimension in the sweep")
        ->check(CLI::Range(2, 64));
    verify
        ->add_option_function<double>(
            "--tolerance",
            [&config, &tolerance_set](double value) {
                config.tolerance = value;
                tolerance_set = true;
            },
            "Override every check's tolerance")
        ->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (figure1->parsed()) {
            return cmd_figure1(config);
        }
        if (evolve->parsed()) {
            return cmd_evolve(config);
        }
        if (ops->parsed()) {
            return cmd_ops(config);
        }
        if (verify->parsed()) {
            return cmd_verify(config, tolerance_set);
        }
    } catch (const pwclock::NotUnitarizable& e) {
        std::cerr << "not unitarizable: " << e.what()
                  << " (deviation " << e.deviation() << ")\n";
        return kExitNotUnitarizable;
    } catch (const pwclock::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
