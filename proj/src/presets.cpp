// presets.cpp

#include "rabi/presets.hpp"

#include <stdexcept>

namespace rabi {

namespace {

Preset make_preset(std::string name, DesignTargets targets, double g_cav, double Delta2,
                   bool negate) {
    Preset p;
    p.name = std::move(name);
    p.targets = targets;
    p.g_cav = g_cav;
    p.Delta2 = Delta2;
    p.negate = negate;
    p.phys = design_physical(targets, g_cav, Delta2);
    const EffectiveResult r = effective_params(p.phys);
    const double sign = negate ? -1.0 : 1.0;
    p.expected_eff.omega0 = sign * r.params.omega0;
    p.expected_eff.omega = sign * r.params.omega;
    p.expected_eff.g_eff = sign * r.params.g_eff;
    p.expected_eff.U = sign * r.params.U;
    p.expected_eff.kappa = p.phys.kappa;
    p.expected_eff.negate_hamiltonian = negate;
    return p;
}

}  // namespace

const std::vector<Preset>& preset_registry() {
    static const std::vector<Preset> registry = [] {
        std::vector<Preset> v;
        v.push_back(make_preset("Ia", {0.0, 1.0, 0.5}, 200.0, -20000.0, false));
        v.push_back(make_preset("IIa", {0.0, 1.0, 1.0}, 200.0, -20000.0, false));
        v.push_back(make_preset("IIIa", {0.0, 1.0, 2.0}, 200.0, -20000.0, false));
        v.push_back(make_preset("Ib", {0.0, 1.0, 0.5}, 200.0, -11000.0, false));
        v.push_back(make_preset("IIb", {0.0, 1.0, 1.0}, 200.0, -11000.0, false));
        v.push_back(make_preset("IIIb", {0.0, 1.0, 2.0}, 200.0, -11000.0, false));
        v.push_back(make_preset("T3-I", {0.0, 1.0, 0.5}, 50.0, -10000.0, false));
        v.push_back(make_preset("T3-II", {0.0, 1.0, 1.0}, 50.0, -10000.0, false));
        v.push_back(make_preset("T3-III", {0.0, 1.0, 2.0}, 50.0, -10000.0, false));
        v.push_back(make_preset("T4-I", {1.0, 1.0, 1.0}, 200.0, -3700.0, false));
        v.push_back(make_preset("T4-II", {1.0, 1.0, 1.0}, 200.0, -4800.0, false));
        v.push_back(make_preset("T4-III", {1.0, 1.0, 1.0}, 200.0, -20000.0, false));
        v.push_back(make_preset("T4-IV", {-1.0, -1.0, -1.0}, 200.0, -4800.0, true));
        v.push_back(make_preset("T4-V", {-1.0, -1.0, -1.0}, 200.0, -3700.0, true));
        return v;
    }();
    return registry;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : preset_registry())
        if (p.name == name) return p;
    throw std::out_of_range("unknown preset: " + name);
}

}  // namespace rabi
