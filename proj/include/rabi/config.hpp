// config.hpp — key=value run configuration with fail-closed parsing.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rabi/models.hpp"

namespace rabi {

struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelKind { full, effective, semiclassical };

/// A validated run request. Physical parameters come either from a preset or
/// from explicit keys; kappa/gamma/n_max act as overrides.
struct RunConfig {
    ModelKind model = ModelKind::effective;
    std::optional<std::string> preset;
    std::optional<double> g_cav, omega1, omega2, delta1, delta2, delta, delta_cav;
    std::optional<double> kappa, gamma;
    std::optional<int> n_max;
    double t_max = 1.0;
    double sample_dt = 0.01;
    std::string init = "default";  // default | g0 | e0
    std::vector<std::string> observables;  // subset of {survival,n,sz,parity,logneg,g2}
    std::string out;
    bool svg = false;
};

/// Parses '#'-commented key=value text. Unknown keys, malformed lines, and
/// missing required keys (model; preset or full explicit parameter set) are
/// errors carrying the line number.
RunConfig parse_config(const std::string& text);

/// Resolve the physical parameters requested by a config (preset plus
/// overrides, or explicit values).
PhysicalParams resolve_physical(const RunConfig& cfg);

}  // namespace rabi
