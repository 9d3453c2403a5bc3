#include "uncdyn/scenario_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace uncdyn {

namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const std::vector<std::string>& allowed,
                        const char* where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const std::string& key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument(std::string("scenario: unknown key \"") + item.key() +
                                        "\" in " + where);
        }
    }
}

const json& require_key(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw std::invalid_argument(std::string("scenario: missing key \"") + key + "\" in " +
                                    where);
    }
    return *it;
}

double as_number(const json& value, const char* key) {
    if (!value.is_number()) {
        throw std::invalid_argument(std::string("scenario: \"") + key + "\" must be a number");
    }
    return value.get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
    auto it = obj.find(key);
    return it == obj.end() ? fallback : as_number(*it, key);
}

std::size_t as_count(const json& value, const char* key) {
    if (!value.is_number_unsigned()) {
        throw std::invalid_argument(std::string("scenario: \"") + key +
                                    "\" must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

complexd as_complex(const json& value, const char* key) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        throw std::invalid_argument(std::string("scenario: \"") + key +
                                    "\" entries must be [re, im] pairs");
    }
    return complexd(value[0].get<double>(), value[1].get<double>());
}

std::vector<complexd> as_complex_vector(const json& value, const char* key) {
    if (!value.is_array()) {
        throw std::invalid_argument(std::string("scenario: \"") + key + "\" must be an array");
    }
    std::vector<complexd> out;
    out.reserve(value.size());
    for (const json& entry : value) out.push_back(as_complex(entry, key));
    return out;
}

ComplexMatrix as_matrix(const json& value, const char* key) {
    if (!value.is_array() || value.empty()) {
        throw std::invalid_argument(std::string("scenario: \"") + key +
                                    "\" must be a non-empty array of rows");
    }
    const std::size_t n = value.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = value[i];
        if (!row.is_array() || row.size() != n) {
            throw std::invalid_argument(std::string("scenario: \"") + key + "\" row " +
                                        std::to_string(i) + " must have " + std::to_string(n) +
                                        " entries");
        }
        for (std::size_t j = 0; j < n; ++j) m(i, j) = as_complex(row[j], key);
    }
    return m;
}

GridSpec parse_grid(const json& value, const char* key) {
    if (!value.is_object()) {
        throw std::invalid_argument(std::string("scenario: \"") + key + "\" must be an object");
    }
    require_known_keys(value, {"start", "stop", "count"}, key);
    GridSpec grid;
    grid.start = as_number(require_key(value, "start", key), "start");
    grid.stop = as_number(require_key(value, "stop", key), "stop");
    grid.count = as_count(require_key(value, "count", key), "count");
    return grid;
}

Observable parse_observable(const json& value, const char* key) {
    if (value.is_string()) {
        const std::string s = value.get<std::string>();
        if (s == "Sx") return Observable::Sx;
        if (s == "Sy") return Observable::Sy;
        if (s == "X") return Observable::X;
        if (s == "P") return Observable::P;
    }
    throw std::invalid_argument(std::string("scenario: \"") + key +
                                "\" members must be one of \"Sx\", \"Sy\", \"X\", \"P\"");
}

ObservablePair parse_pair(const json& value, ModelKind kind) {
    if (!value.is_array() || value.size() != 2) {
        throw std::invalid_argument("scenario: \"pair\" must be a two-element array");
    }
    return ObservablePair{parse_observable(value[0], "pair"), parse_observable(value[1], "pair"),
                          kind};
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    const json doc = json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("scenario: document must be a JSON object");

    Scenario scenario;

    const std::string model = require_key(doc, "model", "scenario").get<std::string>();
    if (model == "spin") {
        scenario.kind = ModelKind::spin;
        require_known_keys(doc, {"model", "params", "pair", "t1_grid", "t2_grid", "tolerances"},
                           "scenario");
    } else if (model == "oscillator") {
        scenario.kind = ModelKind::oscillator;
        require_known_keys(
            doc, {"model", "params", "state", "pair", "t1_grid", "t2_grid", "tolerances"},
            "scenario");
    } else if (model == "custom") {
        scenario.kind = ModelKind::custom;
        require_known_keys(doc,
                           {"model", "params", "hamiltonian", "observable_a", "observable_b",
                            "state", "t1_grid", "t2_grid", "tolerances"},
                           "scenario");
    } else {
        throw std::invalid_argument("scenario: \"model\" must be \"spin\", \"oscillator\" or "
                                    "\"custom\", got \"" +
                                    model + "\"");
    }

    const json params = doc.contains("params") ? doc.at("params") : json::object();
    if (!params.is_object()) throw std::invalid_argument("scenario: \"params\" must be an object");

    switch (scenario.kind) {
        case ModelKind::spin: {
            require_known_keys(params, {"omega", "hbar", "theta"}, "params");
            scenario.spin.omega = number_or(params, "omega", 1.0);
            scenario.spin.hbar = number_or(params, "hbar", 1.0);
            scenario.spin.theta = number_or(params, "theta", 0.0);
            scenario.pair = parse_pair(require_key(doc, "pair", "scenario"), ModelKind::spin);
            break;
        }
        case ModelKind::oscillator: {
            require_known_keys(params, {"mass", "omega", "hbar", "fock_dim"}, "params");
            scenario.oscillator.mass = number_or(params, "mass", 1.0);
            scenario.oscillator.omega = number_or(params, "omega", 1.0);
            scenario.oscillator.hbar = number_or(params, "hbar", 1.0);
            if (params.contains("fock_dim")) {
                scenario.oscillator.fock_dim = as_count(params.at("fock_dim"), "fock_dim");
            }
            if (doc.contains("state")) {
                scenario.oscillator_state = as_complex_vector(doc.at("state"), "state");
            }
            scenario.pair = parse_pair(require_key(doc, "pair", "scenario"), ModelKind::oscillator);
            break;
        }
        case ModelKind::custom: {
            require_known_keys(params, {"hbar"}, "params");
            CustomSystem custom;
            custom.hbar = number_or(params, "hbar", 1.0);
            custom.hamiltonian = as_matrix(require_key(doc, "hamiltonian", "scenario"),
                                           "hamiltonian");
            custom.observable_a = as_matrix(require_key(doc, "observable_a", "scenario"),
                                            "observable_a");
            custom.observable_b = as_matrix(require_key(doc, "observable_b", "scenario"),
                                            "observable_b");
            custom.state = as_complex_vector(require_key(doc, "state", "scenario"), "state");
            scenario.custom = std::move(custom);
            break;
        }
    }

    scenario.t1_grid = parse_grid(require_key(doc, "t1_grid", "scenario"), "t1_grid");
    scenario.t2_grid = parse_grid(require_key(doc, "t2_grid", "scenario"), "t2_grid");

    if (doc.contains("tolerances")) {
        const json& tol = doc.at("tolerances");
        if (!tol.is_object()) {
            throw std::invalid_argument("scenario: \"tolerances\" must be an object");
        }
        require_known_keys(tol, {"ineq", "oracle"}, "tolerances");
        scenario.tolerances.ineq = number_or(tol, "ineq", scenario.tolerances.ineq);
        scenario.tolerances.oracle = number_or(tol, "oracle", scenario.tolerances.oracle);
    }

    validate(scenario);
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("scenario: cannot open file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

namespace {

// 17 significant digits round-trip a double exactly; std::to_chars is
// locale-independent.
void append_number(std::string& out, double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

}  // namespace

std::string emit_csv(const SweepReport& report) {
    std::string out =
        "t1,t2,delta_a_t1,delta_b_t2,lhs,rhs,slack,commutator_im,analytic_lhs,analytic_rhs,"
        "lhs_err,rhs_err\n";
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        const TwoTimeUncertaintyRecord& rec = report.records[k];
        append_number(out, rec.t1);
        out.push_back(',');
        append_number(out, rec.t2);
        out.push_back(',');
        append_number(out, rec.delta_a_t1);
        out.push_back(',');
        append_number(out, rec.delta_b_t2);
        out.push_back(',');
        append_number(out, rec.lhs);
        out.push_back(',');
        append_number(out, rec.rhs);
        out.push_back(',');
        append_number(out, rec.slack);
        out.push_back(',');
        append_number(out, rec.commutator_expectation.imag());
        out.push_back(',');
        if (report.has_oracle) {
            append_number(out, report.analytic_lhs[k]);
            out.push_back(',');
            append_number(out, report.analytic_rhs[k]);
            out.push_back(',');
            append_number(out, std::abs(rec.lhs - report.analytic_lhs[k]));
            out.push_back(',');
            append_number(out, std::abs(rec.rhs - report.analytic_rhs[k]));
        } else {
            out.append(",,,");
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<std::pair<std::string, Scenario>> demo_scenarios() {
    const GridSpec grid{0.0, 2.0 * std::numbers::pi, 21};
    std::vector<std::pair<std::string, Scenario>> out;

    auto add = [&](const std::string& name, ModelKind kind, Observable first, Observable second) {
        Scenario s;
        s.kind = kind;
        s.spin.theta = std::numbers::pi / 3.0;
        s.pair = ObservablePair{first, second, kind};
        s.t1_grid = grid;
        s.t2_grid = grid;
        out.emplace_back(name, std::move(s));
    };

    add("spin_Sx_Sy", ModelKind::spin, Observable::Sx, Observable::Sy);
    add("spin_Sy_Sx", ModelKind::spin, Observable::Sy, Observable::Sx);
    add("spin_Sx_Sx", ModelKind::spin, Observable::Sx, Observable::Sx);
    add("spin_Sy_Sy", ModelKind::spin, Observable::Sy, Observable::Sy);
    add("oscillator_X_P", ModelKind::oscillator, Observable::X, Observable::P);
    add("oscillator_P_X", ModelKind::oscillator, Observable::P, Observable::X);
    add("oscillator_X_X", ModelKind::oscillator, Observable::X, Observable::X);
    add("oscillator_P_P", ModelKind::oscillator, Observable::P, Observable::P);
    return out;
}

}  // namespace uncdyn
