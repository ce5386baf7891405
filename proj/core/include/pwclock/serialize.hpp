#pragma once

/**
 * @file
 * JSON and CSV wire formats.
 *
 * Operators:    { "dim": d, "re": [[..]], "im": [[..]] }
 * States:       { "dim": d, "re": [..], "im": [..] }
 * PhaseMatrix:  { "dim": d, "phi": [[..]] }
 * ClockTrace:   { "operator": str, "omega_over_pi": num,
 *                 "steps": [ { "n", "amps", "probs", "overlap_sq" } ] }
 * Buffer dump:  [ { "step": n, "state": <state JSON> } ]
 * Trace CSV:    header `n,omega_over_pi,component,prob`, one row per
 *               (step, component), probabilities with 9 digits.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "pwclock/clock_experiment.hpp"
#include "pwclock/quantum_state.hpp"
#include "pwclock/snapshot_buffer.hpp"
#include "pwclock/weylheis_algebra.hpp"

namespace pwclock {

std::string to_json_string(const OperatorMatrix& op, int indent = -1);
std::string to_json_string(const PureState& psi, int indent = -1);
std::string to_json_string(const ClockTrace& trace, int indent = -1);
std::string to_json_string(const SnapshotBuffer& buf, int indent = -1);

/// @throws Error on malformed JSON or a shape that is not a finite real
/// dim x dim "phi" matrix.
PhaseMatrix parse_phase_matrix(std::string_view json_text);

/// Reads and parses a phase-matrix JSON file.
/// @throws Error on I/O failure or malformed content.
PhaseMatrix load_phase_matrix(const std::string& path);

/// Writes the pinned CSV schema. A component filter restricts rows to that
/// component (the figure emitter uses component 0). Output is locale-free
/// and byte-deterministic for identical inputs.
void write_trace_csv(std::ostream& os, const ClockTrace& trace,
                     std::optional<Index> component = {});

/// Header line only (`n,omega_over_pi,component,prob`).
void write_trace_csv_header(std::ostream& os);

/// Data rows only; lets several traces share one header.
void write_trace_csv_rows(std::ostream& os, const ClockTrace& trace,
                          std::optional<Index> component = {});

/// Probability formatting used by the CSV writer: fixed, 9 digits after
/// the decimal point ("0.654508497", "0.000000000").
std::string format_probability(double p);

/// Compact deterministic rendering of omega/pi ("0.2", "0.25").
std::string format_omega_over_pi(double omega_over_pi);

}  // namespace pwclock
