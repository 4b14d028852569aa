#include "thermolen/config.hpp"
#include "thermolen/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace thermolen {

namespace {

std::string trim(std::string_view s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string_view::npos) return {};
    const auto to = s.find_last_not_of(" \t\r");
    return std::string(s.substr(from, to - from + 1));
}

double parse_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    const char* end = value.data() + value.size();
    auto [p, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || p != end)
        throw ConfigError("invalid number '" + value + "' for key '" + key + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    const char* end = value.data() + value.size();
    auto [p, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || p != end)
        throw ConfigError("invalid integer '" + value + "' for key '" + key + "'");
    return v;
}

double parse_positive(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (!(v > 0.0)) throw ConfigError(key + " must be positive");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

} // namespace

const char* column_name(Column c) {
    switch (c) {
    case Column::QStar: return "qstar";
    case Column::Omega1: return "omega1";
    case Column::Tau: return "tau";
    case Column::Sigma: return "sigma";
    case Column::SBures: return "s_bures";
    case Column::LeadingBures: return "leading_bures";
    case Column::BuresDistanceSq: return "bures_distance_sq";
    case Column::STrace: return "s_trace";
    case Column::UpperEigenvalue: return "upper_eigenvalue";
    case Column::UpperPopulation: return "upper_population";
    case Column::Fidelity: return "fidelity";
    }
    return "";
}

RunConfig parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key in '" + t + "'");
        if (!kv.emplace(key, value).second) throw ConfigError("duplicate key '" + key + "'");
    }

    RunConfig cfg;
    bool have_beta = false, have_w0 = false, have_w1 = false;
    bool sweep_var = false, sweep_from = false, sweep_to = false, sweep_steps = false;
    SweepSpec sweep;

    for (const auto& [key, value] : kv) {
        if (key == "params.hbar") {
            cfg.params.hbar = parse_positive(key, value);
        } else if (key == "params.mass") {
            cfg.params.mass = parse_positive(key, value);
        } else if (key == "params.beta") {
            cfg.params.beta = parse_positive(key, value);
            have_beta = true;
        } else if (key == "params.omega0") {
            cfg.params.omega0 = parse_positive(key, value);
            have_w0 = true;
        } else if (key == "params.omega1") {
            cfg.params.omega1 = parse_positive(key, value);
            have_w1 = true;
        } else if (key == "protocol.kind") {
            if (value == "sudden") cfg.protocol.kind = ProtocolKind::Sudden;
            else if (value == "linear") cfg.protocol.kind = ProtocolKind::Linear;
            else if (value == "smoothstep") cfg.protocol.kind = ProtocolKind::Smoothstep;
            else if (value == "tabulated") cfg.protocol.kind = ProtocolKind::Tabulated;
            else throw ConfigError("unknown protocol.kind '" + value + "'");
        } else if (key == "protocol.tau") {
            cfg.protocol.tau = parse_double(key, value);
            if (cfg.protocol.tau < 0.0) throw ConfigError("protocol.tau must be >= 0");
        } else if (key == "protocol.table") {
            for (const std::string& pair : split(value, ',')) {
                const auto colon = pair.find(':');
                if (colon == std::string::npos)
                    throw ConfigError("protocol.table entries must look like t:omega");
                cfg.protocol.table.emplace_back(
                    parse_double(key, trim(pair.substr(0, colon))),
                    parse_double(key, trim(pair.substr(colon + 1))));
            }
        } else if (key == "protocol.interpolation") {
            if (value == "pchip") cfg.protocol.linear_interp = false;
            else if (value == "linear") cfg.protocol.linear_interp = true;
            else throw ConfigError("protocol.interpolation must be pchip or linear");
        } else if (key == "grid.n_points") {
            cfg.grid.n_points = parse_int(key, value);
            if (cfg.grid.n_points < 64) throw ConfigError("grid.n_points must be >= 64");
        } else if (key == "grid.half_width_mult") {
            cfg.grid.half_width_mult = parse_positive(key, value);
        } else if (key == "sweep.variable") {
            if (value == "qstar") sweep.variable = SweepVariable::QStar;
            else if (value == "omega1") sweep.variable = SweepVariable::Omega1;
            else if (value == "tau") sweep.variable = SweepVariable::Tau;
            else throw ConfigError("unknown sweep.variable '" + value + "'");
            sweep_var = true;
        } else if (key == "sweep.from") {
            sweep.from = parse_double(key, value);
            sweep_from = true;
        } else if (key == "sweep.to") {
            sweep.to = parse_double(key, value);
            sweep_to = true;
        } else if (key == "sweep.steps") {
            sweep.steps = parse_int(key, value);
            sweep_steps = true;
        } else if (key == "outputs") {
            cfg.outputs.clear();
            for (const std::string& tok : split(value, ',')) {
                if (tok == "sigma") cfg.outputs.push_back(OutputQuantity::Sigma);
                else if (tok == "bounds") cfg.outputs.push_back(OutputQuantity::Bounds);
                else if (tok == "fidelity") cfg.outputs.push_back(OutputQuantity::Fidelity);
                else if (tok == "trace_distance")
                    cfg.outputs.push_back(OutputQuantity::TraceDistance);
                else if (tok == "upper_bound") cfg.outputs.push_back(OutputQuantity::UpperBound);
                else throw ConfigError("unknown output quantity '" + tok + "'");
            }
            if (cfg.outputs.empty()) throw ConfigError("outputs must not be empty");
            auto sorted = cfg.outputs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ConfigError("outputs lists a quantity twice");
        } else if (key == "out_path") {
            if (value.empty()) throw ConfigError("out_path must not be empty");
            cfg.out_path = value;
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    if (!have_beta) throw ConfigError("missing required key params.beta");
    if (!have_w0) throw ConfigError("missing required key params.omega0");
    if (!have_w1) throw ConfigError("missing required key params.omega1");

    if (sweep_var || sweep_from || sweep_to || sweep_steps) {
        if (!(sweep_var && sweep_from && sweep_to && sweep_steps))
            throw ConfigError("a sweep needs sweep.variable, sweep.from, sweep.to, sweep.steps");
        if (sweep.steps < 2) throw ConfigError("sweep.steps must be >= 2");
        if (sweep.from > sweep.to) throw ConfigError("sweep.from must not exceed sweep.to");
        if (sweep.variable == SweepVariable::QStar && sweep.from < 1.0)
            throw ConfigError("sweep.from must be >= 1 for qstar sweeps");
        if (sweep.variable == SweepVariable::Omega1 && sweep.from <= 0.0)
            throw ConfigError("sweep.from must be positive for omega1 sweeps");
        if (sweep.variable == SweepVariable::Tau && sweep.from < 0.0)
            throw ConfigError("sweep.from must be >= 0 for tau sweeps");
        cfg.sweep = sweep;
    }

    if (cfg.protocol.kind == ProtocolKind::Tabulated && cfg.protocol.table.size() < 2)
        throw ConfigError("tabulated protocol needs protocol.table with at least 2 samples");
    if (cfg.protocol.kind != ProtocolKind::Tabulated && !cfg.protocol.table.empty())
        throw ConfigError("protocol.table is only valid for protocol.kind=tabulated");
    if (cfg.protocol.kind == ProtocolKind::Tabulated && !cfg.protocol.table.empty())
        cfg.protocol.tau = cfg.protocol.table.back().first;

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

std::vector<Column> plan_columns(const RunConfig& cfg) {
    if (cfg.columns) return *cfg.columns;
    const bool qstar_sweep = cfg.sweep && cfg.sweep->variable == SweepVariable::QStar;
    std::vector<Column> cols;
    if (!cfg.sweep || qstar_sweep) {
        cols.push_back(Column::QStar);
    } else if (cfg.sweep->variable == SweepVariable::Omega1) {
        cols.push_back(Column::Omega1);
        cols.push_back(Column::QStar);
    } else {
        cols.push_back(Column::Tau);
        cols.push_back(Column::QStar);
    }
    for (const OutputQuantity q : cfg.outputs) {
        switch (q) {
        case OutputQuantity::Sigma:
            cols.push_back(Column::Sigma);
            break;
        case OutputQuantity::Bounds:
            cols.push_back(Column::SBures);
            cols.push_back(Column::LeadingBures);
            cols.push_back(Column::BuresDistanceSq);
            break;
        case OutputQuantity::Fidelity:
            cols.push_back(Column::Fidelity);
            break;
        case OutputQuantity::TraceDistance:
            if (qstar_sweep)
                throw ConfigError("trace_distance needs a concrete protocol, not a qstar sweep");
            cols.push_back(Column::STrace);
            break;
        case OutputQuantity::UpperBound:
            cols.push_back(Column::UpperEigenvalue);
            if (!qstar_sweep) cols.push_back(Column::UpperPopulation);
            break;
        }
    }
    return cols;
}

RunConfig figure1_config() {
    RunConfig cfg;
    cfg.params = {1.0, 1.0, 1.2, 0.9, 0.5};
    cfg.protocol = Protocol::sudden();
    cfg.sweep = SweepSpec{SweepVariable::QStar, 1.0, 5.0, 200};
    cfg.outputs = {OutputQuantity::Sigma, OutputQuantity::Bounds};
    cfg.out_path = "figure1.csv";
    cfg.columns = {{Column::QStar, Column::Sigma, Column::SBures, Column::LeadingBures}};
    return cfg;
}

RunConfig figure2_config() {
    RunConfig cfg;
    cfg.params = {1.0, 1.0, 4.8, 0.9, 0.3};
    cfg.protocol = Protocol::sudden();
    cfg.sweep = SweepSpec{SweepVariable::Omega1, 0.3, 0.9, 25};
    cfg.outputs = {OutputQuantity::Sigma, OutputQuantity::Bounds, OutputQuantity::TraceDistance};
    cfg.out_path = "figure2.csv";
    cfg.columns = {
        {Column::Omega1, Column::QStar, Column::Sigma, Column::SBures, Column::STrace}};
    return cfg;
}

} // namespace thermolen
