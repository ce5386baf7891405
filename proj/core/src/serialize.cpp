#include "pwclock/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace pwclock {

namespace {

using nlohmann::json;

json matrix_to_json(const CMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (Index k = 0; k < m.rows(); ++k) {
        json re_row = json::array();
        json im_row = json::array();
        for (Index l = 0; l < m.cols(); ++l) {
            re_row.push_back(m(k, l).real());
            im_row.push_back(m(k, l).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json vector_to_json(const CVector& v) {
    json re = json::array();
    json im = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        re.push_back(v(i).real());
        im.push_back(v(i).imag());
    }
    return json{{"dim", v.size()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

std::string dump(const json& j, int indent) {
    return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace

std::string to_json_string(const OperatorMatrix& op, int indent) {
    return dump(matrix_to_json(op.entries()), indent);
}

std::string to_json_string(const PureState& psi, int indent) {
    return dump(vector_to_json(psi.amps()), indent);
}

std::string to_json_string(const ClockTrace& trace, int indent) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json probs = json::array();
        for (Index i = 0; i < step.probs.size(); ++i) {
            probs.push_back(step.probs(i));
        }
        steps.push_back(json{{"n", step.n},
                             {"amps", vector_to_json(step.amps)},
                             {"probs", std::move(probs)},
                             {"overlap_sq", step.overlap_sq}});
    }
    json j{{"operator", trace.operator_name},
           {"omega_over_pi", trace.init.theta_omega / std::numbers::pi},
           {"steps", std::move(steps)}};
    return dump(j, indent);
}

std::string to_json_string(const SnapshotBuffer& buf, int indent) {
    json j = json::array();
    for (const auto& [step, state] : buf.entries()) {
        j.push_back(json{{"step", step}, {"state", vector_to_json(state.amps())}});
    }
    return dump(j, indent);
}

PhaseMatrix parse_phase_matrix(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) {
        throw Error("phase matrix: malformed JSON");
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("phi")) {
        throw Error("phase matrix: expected an object with \"dim\" and \"phi\"");
    }
    if (!j["dim"].is_number_integer()) {
        throw Error("phase matrix: \"dim\" must be an integer");
    }
    const auto dim = j["dim"].get<Index>();
    if (dim < 2) {
        throw InvalidDimension("phase matrix: dim must be >= 2");
    }
    const json& rows = j["phi"];
    if (!rows.is_array() || static_cast<Index>(rows.size()) != dim) {
        throw Error("phase matrix: \"phi\" must be a dim x dim array");
    }
    RMatrix phi(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
            throw Error("phase matrix: \"phi\" must be a dim x dim array");
        }
        for (Index s = 0; s < dim; ++s) {
            const json& cell = row[static_cast<std::size_t>(s)];
            if (!cell.is_number()) {
                throw Error("phase matrix: entries must be real numbers");
            }
            phi(r, s) = cell.get<double>();
        }
    }
    return PhaseMatrix(std::move(phi));
}

PhaseMatrix load_phase_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("phase matrix: cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_phase_matrix(buffer.str());
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9f", p);
    return buf;
}

std::string format_omega_over_pi(double omega_over_pi) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", omega_over_pi);
    return buf;
}

void write_trace_csv_header(std::ostream& os) {
    os << "n,omega_over_pi,component,prob\n";
}

void write_trace_csv_rows(std::ostream& os, const ClockTrace& trace,
                          std::optional<Index> component) {
    const std::string omega = format_omega_over_pi(trace.init.theta_omega / std::numbers::pi);
    for (const auto& step : trace.steps) {
        for (Index i = 0; i < step.probs.size(); ++i) {
            if (component && *component != i) {
                continue;
            }
            os << step.n << ',' << omega << ',' << i << ','
               << format_probability(step.probs(i)) << '\n';
        }
    }
}

void write_trace_csv(std::ostream& os, const ClockTrace& trace,
                     std::optional<Index> component) {
    write_trace_csv_header(os);
    write_trace_csv_rows(os, trace, component);
}

}  // namespace pwclock
