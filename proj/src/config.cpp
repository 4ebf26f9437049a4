// config.cpp

#include "rabi/config.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "rabi/presets.hpp"

namespace rabi {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& v, int line) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigParseError("line " + std::to_string(line) + ": expected a number, got '" +
                               v + "'");
    }
}

int parse_int(const std::string& v, int line) {
    try {
        size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                               v + "'");
    }
}

const std::set<std::string> kObservableNames = {"survival", "n", "sz", "parity",
                                                "logneg", "g2"};

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool model_set = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError("line " + std::to_string(line) + ": expected key=value");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigParseError("line " + std::to_string(line) + ": empty key or value");
        if (!seen.insert(key).second)
            throw ConfigParseError("line " + std::to_string(line) + ": duplicate key '" + key +
                                   "'");

        if (key == "model") {
            if (val == "full") cfg.model = ModelKind::full;
            else if (val == "effective") cfg.model = ModelKind::effective;
            else if (val == "semiclassical") cfg.model = ModelKind::semiclassical;
            else
                throw ConfigParseError("line " + std::to_string(line) + ": unknown model '" +
                                       val + "'");
            model_set = true;
        } else if (key == "preset") {
            cfg.preset = val;
        } else if (key == "g_cav") {
            cfg.g_cav = parse_double(val, line);
        } else if (key == "omega1") {
            cfg.omega1 = parse_double(val, line);
        } else if (key == "omega2") {
            cfg.omega2 = parse_double(val, line);
        } else if (key == "delta1") {
            cfg.delta1 = parse_double(val, line);
        } else if (key == "delta2") {
            cfg.delta2 = parse_double(val, line);
        } else if (key == "delta") {
            cfg.delta = parse_double(val, line);
        } else if (key == "delta_cav") {
            cfg.delta_cav = parse_double(val, line);
        } else if (key == "kappa") {
            cfg.kappa = parse_double(val, line);
        } else if (key == "gamma") {
            cfg.gamma = parse_double(val, line);
        } else if (key == "n_max") {
            cfg.n_max = parse_int(val, line);
            if (*cfg.n_max < 2)
                throw ConfigParseError("line " + std::to_string(line) + ": n_max must be >= 2");
        } else if (key == "t_max") {
            cfg.t_max = parse_double(val, line);
            if (cfg.t_max <= 0.0)
                throw ConfigParseError("line " + std::to_string(line) + ": t_max must be > 0");
        } else if (key == "sample_dt") {
            cfg.sample_dt = parse_double(val, line);
            if (cfg.sample_dt <= 0.0)
                throw ConfigParseError("line " + std::to_string(line) +
                                       ": sample_dt must be > 0");
        } else if (key == "init") {
            if (val != "g0" && val != "e0" && val != "default")
                throw ConfigParseError("line " + std::to_string(line) + ": init must be g0 or e0");
            cfg.init = val;
        } else if (key == "observables") {
            std::istringstream obs(val);
            std::string item;
            while (std::getline(obs, item, ',')) {
                item = trim(item);
                if (!kObservableNames.count(item))
                    throw ConfigParseError("line " + std::to_string(line) +
                                           ": unknown observable '" + item + "'");
                cfg.observables.push_back(item);
            }
        } else if (key == "out") {
            cfg.out = val;
        } else if (key == "svg") {
            if (val == "true" || val == "1") cfg.svg = true;
            else if (val == "false" || val == "0") cfg.svg = false;
            else
                throw ConfigParseError("line " + std::to_string(line) + ": svg must be boolean");
        } else {
            throw ConfigParseError("line " + std::to_string(line) + ": unknown key '" + key +
                                   "'");
        }
    }

    std::vector<std::string> missing;
    if (!model_set) missing.push_back("model");
    const bool explicit_params = cfg.g_cav && cfg.omega1 && cfg.omega2 && cfg.delta1 &&
        cfg.delta2 && cfg.delta && cfg.delta_cav;
    if (!cfg.preset && !explicit_params && cfg.model != ModelKind::semiclassical)
        missing.push_back("preset (or the full explicit parameter set)");
    if (!missing.empty()) {
        std::string msg = "missing required keys:";
        for (const auto& k : missing) msg += " " + k;
        throw ConfigParseError(msg);
    }
    return cfg;
}

PhysicalParams resolve_physical(const RunConfig& cfg) {
    PhysicalParams p;
    if (cfg.preset) {
        p = find_preset(*cfg.preset).phys;
    } else {
        if (!(cfg.g_cav && cfg.omega1 && cfg.omega2 && cfg.delta1 && cfg.delta2 && cfg.delta &&
              cfg.delta_cav))
            throw ConfigParseError("explicit runs need g_cav, omega1, omega2, delta1, delta2, "
                                   "delta, delta_cav");
        p.g_cav = *cfg.g_cav;
        p.Omega1 = *cfg.omega1;
        p.Omega2 = *cfg.omega2;
        p.Delta1 = *cfg.delta1;
        p.Delta2 = *cfg.delta2;
        p.delta = *cfg.delta;
        p.delta_cav = *cfg.delta_cav;
        p.kappa = 0.1;
    }
    if (cfg.kappa) p.kappa = *cfg.kappa;
    if (cfg.gamma) p.gamma = *cfg.gamma;
    return p;
}

}  // namespace rabi
