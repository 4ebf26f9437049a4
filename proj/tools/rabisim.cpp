// rabisim.cpp — command-line front end: parameter maps, master-equation runs,
// steady-state scans, Wigner maps, mean-field trajectories, spectra.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rabi/config.hpp"
#include "rabi/dynamics.hpp"
#include "rabi/observables.hpp"
#include "rabi/output.hpp"
#include "rabi/presets.hpp"
#include "rabi/semiclassical.hpp"

namespace {

using namespace rabi;

struct EffFlags {
    double omega0 = 0.0, omega = 1.0, geff = 1.0, u = 0.0, kappa = 0.1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--omega0", omega0, "qubit frequency, MHz");
        cmd->add_option("--omega", omega, "oscillator frequency, MHz");
        cmd->add_option("--geff", geff, "coupling, MHz");
        cmd->add_option("--u", u, "nonlinear coupling, MHz");
        cmd->add_option("--kappa", kappa, "cavity decay, MHz");
    }
    EffectiveParams params() const { return {omega0, omega, geff, u, kappa, false}; }
};

int default_n_max(const EffectiveParams& eff) {
    return (std::abs(eff.g_eff) >= 2.0 * std::abs(eff.omega)) ? 50 : 16;
}

void emit(const Table& table, const std::string& out, bool svg) {
    if (out.empty()) {
        write_csv(std::cout, table);
    } else {
        write_csv_file(out, table);
        std::cerr << "wrote " << out << "\n";
        if (svg) {
            for (size_t c = 1; c < table.columns.size(); ++c) {
                const std::string path = out + "." + table.columns[c] + ".svg";
                write_svg_plot(path, table, c);
                std::cerr << "wrote " << path << "\n";
            }
        }
    }
}

Vector basis_state(int dim, int index) {
    Vector v = Vector::Zero(dim);
    v[index] = 1.0;
    return v;
}

int cmd_params(const std::string& preset_name, std::optional<double> design_omega0,
               std::optional<double> design_omega, std::optional<double> design_geff,
               double g_cav, double delta2) {
    PhysicalParams phys;
    bool negate = false;
    if (!preset_name.empty()) {
        const Preset& p = find_preset(preset_name);
        phys = p.phys;
        negate = p.negate;
    } else if (design_omega0 && design_omega && design_geff) {
        phys = design_physical({*design_omega0, *design_omega, *design_geff}, g_cav, delta2);
    } else {
        std::cerr << "params needs --preset or all of --omega0/--omega/--geff\n";
        return 2;
    }
    const EffectiveResult r = effective_params(phys);
    std::printf("g_cav     = %12.6f MHz\n", phys.g_cav);
    std::printf("Omega1    = %12.6f MHz\n", phys.Omega1);
    std::printf("Omega2    = %12.6f MHz\n", phys.Omega2);
    std::printf("Delta1    = %12.4f MHz\n", phys.Delta1);
    std::printf("Delta2    = %12.4f MHz\n", phys.Delta2);
    std::printf("delta     = %12.6f MHz\n", phys.delta);
    std::printf("delta_cav = %12.6f MHz\n", phys.delta_cav);
    std::printf("kappa     = %12.6f MHz   gamma = %.3f MHz\n", phys.kappa, phys.gamma);
    std::printf("-- effective --\n");
    const double s = negate ? -1.0 : 1.0;
    std::printf("omega0    = %12.6f MHz\n", s * r.params.omega0);
    std::printf("omega     = %12.6f MHz\n", s * r.params.omega);
    std::printf("g_eff     = %12.6f MHz  (g1 = %.6f, g2 = %.6f%s)\n", s * r.params.g_eff,
                r.g1.real(), r.g2.real(), r.balanced ? "" : "; unbalanced");
    std::printf("U         = %12.6f MHz\n", s * r.params.U);
    if (negate) std::printf("(realized with H -> -H)\n");
    if (!r.balanced)
        std::fprintf(stderr, "warning: Raman couplings are unbalanced (|g1-g2| = %.3g MHz)\n",
                     std::abs(r.g1 - r.g2));
    return 0;
}

struct EvolveArgs {
    std::string config_path, preset, model = "effective", init = "default", out;
    double t_max = 1.0, sample_dt = 0.01;
    std::optional<double> kappa, gamma;
    std::optional<int> n_max;
    std::vector<std::string> observables;
    bool svg = false;
    bool no_fock_guard = false;
};

int cmd_evolve(const EvolveArgs& a) {
    RunConfig cfg;
    if (!a.config_path.empty()) {
        std::ifstream f(a.config_path);
        if (!f) {
            std::cerr << "cannot read " << a.config_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        cfg = parse_config(ss.str());
    } else {
        cfg.model = ModelKind::effective;
    }
    if (!a.preset.empty()) cfg.preset = a.preset;
    if (a.model == "full") cfg.model = ModelKind::full;
    else if (a.model == "effective") cfg.model = ModelKind::effective;
    else {
        std::cerr << "evolve model must be full or effective\n";
        return 2;
    }
    if (a.kappa) cfg.kappa = a.kappa;
    if (a.gamma) cfg.gamma = a.gamma;
    if (a.n_max) cfg.n_max = a.n_max;
    if (a.init != "default") cfg.init = a.init;
    if (a.t_max > 0) cfg.t_max = a.t_max;
    if (a.sample_dt > 0) cfg.sample_dt = a.sample_dt;
    if (!a.observables.empty()) cfg.observables = a.observables;
    if (!a.out.empty()) cfg.out = a.out;
    cfg.svg = cfg.svg || a.svg;
    if (!cfg.preset && cfg.model == ModelKind::effective && !cfg.g_cav) {
        std::cerr << "evolve needs --preset or --config with parameters\n";
        return 2;
    }

    std::vector<std::string> obs = cfg.observables;
    if (obs.empty()) obs = {"survival", "n", "sz", "parity"};
    const bool need_snapshots =
        std::any_of(obs.begin(), obs.end(),
                    [](const std::string& o) { return o == "logneg" || o == "g2"; });

    std::vector<double> grid;
    for (double t = 0.0; t <= cfg.t_max + 1e-12; t += cfg.sample_dt) grid.push_back(t);

    // default initial state: the sigma_z = -1 pole (|1,-1> in the full model)
    const bool init_e = (cfg.init == "e0");
    const std::string survival_name = init_e ? "P_e0" : "P_g0";

    Table table;
    table.columns.push_back("t_us");

    if (cfg.model == ModelKind::effective) {
        EffectiveParams eff;
        PhysicalParams phys;
        if (cfg.preset) {
            const Preset& p = find_preset(*cfg.preset);
            eff = p.expected_eff;
        } else {
            phys = resolve_physical(cfg);
            eff = effective_params(phys).params;
        }
        if (cfg.kappa) eff.kappa = *cfg.kappa;
        const int n_max = cfg.n_max.value_or(default_n_max(eff));
        TimeDependentGenerator gen = build_effective(eff, n_max);

        auto [a_op, num] = fock_ops(n_max);
        SpaceLayout ql = SpaceLayout::single(kQubitLabel, 2);
        Matrix sz2(2, 2);
        sz2 << -1, 0, 0, 1;
        SpMat id2(2, 2);
        id2.setIdentity();
        SpMat idf(n_max, n_max);
        idf.setIdentity();
        Operator id_q(ql, id2);
        Operator id_f(SpaceLayout::single("fock", n_max), idf);
        Operator n_op = tensor(id_q, num);
        Operator sz_op = tensor(Operator(ql, sz2), id_f);

        const Vector psi0 = basis_state(2 * n_max, init_e ? n_max : 0);
        DensityMatrix rho0 = DensityMatrix::from_pure(gen.layout, psi0);

        std::vector<NamedObservable> named;
        for (const auto& o : obs) {
            if (o == "survival")
                named.push_back({survival_name,
                                 Operator(gen.layout, Matrix(psi0 * psi0.adjoint()))});
            else if (o == "n") named.push_back({"n", n_op});
            else if (o == "sz") named.push_back({"sz", sz_op});
            else if (o == "parity") ;  // from snapshots or diagonal op below
        }
        // parity is diagonal; build it as an operator
        if (std::find(obs.begin(), obs.end(), "parity") != obs.end()) {
            Matrix par = Matrix::Zero(2 * n_max, 2 * n_max);
            for (int q = 0; q < 2; ++q)
                for (int n = 0; n < n_max; ++n) {
                    const double sz = q == 0 ? -1.0 : 1.0;
                    const double pn = n % 2 == 0 ? 1.0 : -1.0;
                    par(q * n_max + n, q * n_max + n) = -sz * pn;
                }
            named.push_back({"parity", Operator(gen.layout, par)});
        }

        SolverOptions sopts;
        sopts.method = SolverOptions::Method::adaptive_rk45;
        sopts.fock_guard = !a.no_fock_guard;
        Trajectory traj =
            evolve(gen, rho0, grid, sopts, named, need_snapshots);

        for (const auto& o : obs)
            table.columns.push_back(o == "survival" ? survival_name : o);
        for (size_t i = 0; i < traj.times.size(); ++i) {
            std::vector<double> row{traj.times[i]};
            for (const auto& o : obs) {
                if (o == "logneg")
                    row.push_back(log_negativity(traj.snapshots[i].second, kQubitLabel));
                else if (o == "g2") {
                    double v = 0.0;
                    try {
                        v = g2_zero(traj.snapshots[i].second);
                    } catch (const UndefinedCorrelationError&) {
                        v = std::numeric_limits<double>::quiet_NaN();
                    }
                    row.push_back(v);
                } else
                    row.push_back(traj.series(o == "survival" ? survival_name : o)[i]);
            }
            table.rows.push_back(std::move(row));
        }
    } else {
        PhysicalParams phys = resolve_physical(cfg);
        const int n_max = cfg.n_max.value_or(8);
        TimeDependentGenerator gen = build_full(phys, n_max);
        const int dim = gen.layout.total_dim();
        const Vector psi0 = basis_state(
            dim, init_e ? full_index_qubit_e(n_max) : full_index_qubit_g(n_max));
        DensityMatrix rho0 = DensityMatrix::from_pure(gen.layout, psi0);

        auto embed_diag = [&](auto&& weight) {
            Matrix m = Matrix::Zero(dim, dim);
            for (int l = 0; l < kAtomDim; ++l)
                for (int n = 0; n < n_max; ++n)
                    m(l * n_max + n, l * n_max + n) = weight(l, n);
            return Operator(gen.layout, m);
        };
        const int ig = level_index(Manifold::ground, 1, -1);
        const int ie = level_index(Manifold::ground, 2, -2);
        std::vector<NamedObservable> named;
        named.push_back({survival_name, Operator(gen.layout, Matrix(psi0 * psi0.adjoint()))});
        named.push_back({"n", embed_diag([](int, int n) { return double(n); })});
        named.push_back({"sz", embed_diag([&](int l, int) {
            return l == ie ? 1.0 : (l == ig ? -1.0 : 0.0);
        })});
        named.push_back({"subspace", embed_diag([&](int l, int) {
            return (l == ie || l == ig) ? 1.0 : 0.0;
        })});

        SolverOptions sopts;
        sopts.method = SolverOptions::Method::fixed_rk4;
        sopts.fock_guard = false;  // cutoff adequacy judged from the report below
        Trajectory traj = evolve(gen, rho0, grid, sopts, named, false);
        table.columns = {"t_us", survival_name, "n", "sz", "subspace"};
        for (size_t i = 0; i < traj.times.size(); ++i)
            table.rows.push_back({traj.times[i], traj.series(survival_name)[i],
                                  traj.series("n")[i], traj.series("sz")[i],
                                  traj.series("subspace")[i]});
    }

    emit(table, cfg.out, cfg.svg);
    return 0;
}

int cmd_steady(const EffFlags& eff, double u_from, double u_to, int u_steps, int n_max,
               const std::string& out, bool svg) {
    Table table;
    table.columns = {"U", "sz", "n", "g2"};
    for (int k = 0; k < u_steps; ++k) {
        EffectiveParams p = eff.params();
        p.U = (u_steps == 1) ? u_from : u_from + (u_to - u_from) * k / (u_steps - 1);
        TimeDependentGenerator gen = build_effective(p, n_max);
        SteadyStateResult ss = steady_state(gen);
        if (ss.method == SteadyStateResult::Method::time_marched)
            std::cerr << "U = " << p.U << ": direct solve residual too large, time-marched\n";
        double g2 = std::numeric_limits<double>::quiet_NaN();
        try {
            g2 = g2_zero(ss.rho);
        } catch (const UndefinedCorrelationError&) {
        }
        table.rows.push_back({p.U, atomic_inversion(ss.rho), mean_photon_number(ss.rho), g2});
        const double guard = top_two_fock_population(ss.rho);
        if (guard > 1e-6)
            std::cerr << "U = " << p.U << ": top-two Fock population " << guard
                      << "; raise --n-max\n";
    }
    emit(table, out, svg);
    return 0;
}

int cmd_wigner(const EffFlags& eff, int n_max, double extent, int points,
               std::optional<double> at_time, const std::string& init,
               const std::string& out) {
    EffectiveParams p = eff.params();
    TimeDependentGenerator gen = build_effective(p, n_max);
    DensityMatrix rho_cav{SpaceLayout::single("fock", 2), Matrix::Identity(2, 2)};
    if (at_time) {
        const bool init_e = (init == "e0");
        const Vector psi0 = basis_state(2 * n_max, init_e ? n_max : 0);
        DensityMatrix rho0 = DensityMatrix::from_pure(gen.layout, psi0);
        std::vector<double> grid{0.0, *at_time};
        SolverOptions sopts;
        Trajectory traj = evolve(gen, rho0, grid, sopts, {}, true);
        rho_cav = partial_trace(traj.snapshots.back().second, "fock");
    } else {
        SteadyStateResult ss = steady_state(gen);
        rho_cav = partial_trace(ss.rho, "fock");
    }
    WignerSpec spec;
    spec.x_min = spec.y_min = -extent;
    spec.x_max = spec.y_max = extent;
    spec.nx = spec.ny = points;
    WignerGrid grid = wigner(rho_cav, spec);
    Table table;
    table.columns = {"x", "y", "W"};
    for (size_t iy = 0; iy < grid.y_axis.size(); ++iy)
        for (size_t ix = 0; ix < grid.x_axis.size(); ++ix)
            table.rows.push_back({grid.x_axis[ix], grid.y_axis[iy], grid.values[iy][ix]});
    emit(table, out, false);
    const auto peaks = grid.local_maxima();
    std::cerr << peaks.size() << " local maxima above 10% of peak; integral = "
              << grid.integral() << "\n";
    return 0;
}

int cmd_semi(double g, double omega, double omega0, double kappa, double u, double t_max,
             double sample_dt, double a_re, double a_im, double b_re, double b_im, double w0,
             const std::string& out, bool svg) {
    SemiParams p{omega, omega0, g, u, kappa};
    SemiState s0{{a_re, a_im}, {b_re, b_im}, w0};
    std::vector<double> grid;
    for (double t = 0.0; t <= t_max + 1e-12; t += sample_dt) grid.push_back(t);
    const auto states = semi_integrate(s0, p, grid);
    Table table;
    table.columns = {"t_us", "re_alpha", "im_alpha", "re_beta", "im_beta", "w"};
    for (size_t i = 0; i < states.size(); ++i)
        table.rows.push_back({grid[i], states[i].alpha.real(), states[i].alpha.imag(),
                              states[i].beta.real(), states[i].beta.imag(), states[i].w});
    emit(table, out, svg);
    return 0;
}

int cmd_spectrum(const EffFlags& eff, int n_max, int k, const std::string& out) {
    const std::vector<double> levels = rabi_spectrum(eff.params(), n_max, k);
    Table table;
    table.columns = {"index", "energy_MHz"};
    for (size_t i = 0; i < levels.size(); ++i)
        table.rows.push_back({double(i), levels[i] / kTwoPi});
    emit(table, out, false);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity-QED quantum Rabi simulator"};
    app.require_subcommand(1);

    // params
    auto* params = app.add_subcommand("params", "effective parameters of a preset or design");
    std::string p_preset;
    std::optional<double> d_omega0, d_omega, d_geff;
    double p_gcav = 200.0, p_delta2 = -20000.0;
    params->add_option("--preset", p_preset, "preset name (Ia..IIIb, T3-*, T4-*)");
    params->add_option("--omega0", d_omega0, "design target omega0, MHz");
    params->add_option("--omega", d_omega, "design target omega, MHz");
    params->add_option("--geff", d_geff, "design target g_eff, MHz");
    params->add_option("--gcav", p_gcav, "cavity coupling, MHz");
    params->add_option("--delta2", p_delta2, "detuning Delta2, MHz");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "integrate a master equation");
    EvolveArgs ea;
    evolve_cmd->add_option("--config", ea.config_path, "key=value config file");
    evolve_cmd->add_option("--preset", ea.preset, "preset name");
    evolve_cmd->add_option("--model", ea.model, "full | effective");
    evolve_cmd->add_option("--kappa", ea.kappa, "cavity decay override, MHz");
    evolve_cmd->add_option("--gamma", ea.gamma, "spontaneous emission override, MHz");
    evolve_cmd->add_option("--t-max", ea.t_max, "horizon, us");
    evolve_cmd->add_option("--sample-dt", ea.sample_dt, "sampling step, us");
    evolve_cmd->add_option("--init", ea.init, "initial state: g0 | e0");
    evolve_cmd->add_option("--n-max", ea.n_max, "Fock cutoff");
    evolve_cmd->add_option("--observables", ea.observables,
                           "survival,n,sz,parity,logneg,g2")->delimiter(',');
    evolve_cmd->add_option("--out", ea.out, "CSV path (stdout if omitted)");
    evolve_cmd->add_flag("--svg", ea.svg, "also emit SVG line plots");
    evolve_cmd->add_flag("--no-fock-guard", ea.no_fock_guard, "disable the truncation guard");

    // steady
    auto* steady_cmd = app.add_subcommand("steady", "steady-state scan over U");
    EffFlags s_eff;
    s_eff.attach(steady_cmd);
    double u_from = -4.0, u_to = 4.0;
    int u_steps = 81, s_nmax = 60;
    std::string s_out;
    bool s_svg = false;
    steady_cmd->add_option("--u-from", u_from);
    steady_cmd->add_option("--u-to", u_to);
    steady_cmd->add_option("--u-steps", u_steps);
    steady_cmd->add_option("--n-max", s_nmax);
    steady_cmd->add_option("--out", s_out);
    steady_cmd->add_flag("--svg", s_svg);

    // wigner
    auto* wigner_cmd = app.add_subcommand("wigner", "Wigner map of a steady or evolved state");
    EffFlags w_eff;
    w_eff.attach(wigner_cmd);
    int w_nmax = 60, w_points = 121;
    double w_extent = 6.0;
    std::optional<double> w_time;
    std::string w_init = "g0", w_out;
    wigner_cmd->add_option("--n-max", w_nmax);
    wigner_cmd->add_option("--extent", w_extent, "grid half-width in x and y");
    wigner_cmd->add_option("--points", w_points, "grid points per axis");
    wigner_cmd->add_option("--t-at", w_time, "evolve to this time instead of the steady state");
    wigner_cmd->add_option("--init", w_init, "initial state for --t-at runs");
    wigner_cmd->add_option("--out", w_out);

    // semi
    auto* semi_cmd = app.add_subcommand("semi", "mean-field trajectory");
    double m_g = 2.0, m_omega = 1.0, m_omega0 = 1.0, m_kappa = 0.2, m_u = 0.0;
    double m_tmax = 100.0, m_dt = 0.01;
    double m_are = 0.01, m_aim = 0.0, m_bre = 0.0, m_bim = 0.0, m_w = -1.0;
    std::string m_out;
    bool m_svg = false;
    semi_cmd->add_option("--g", m_g);
    semi_cmd->add_option("--omega", m_omega);
    semi_cmd->add_option("--omega0", m_omega0);
    semi_cmd->add_option("--kappa", m_kappa);
    semi_cmd->add_option("--u", m_u);
    semi_cmd->add_option("--t-max", m_tmax);
    semi_cmd->add_option("--sample-dt", m_dt);
    semi_cmd->add_option("--alpha-re", m_are);
    semi_cmd->add_option("--alpha-im", m_aim);
    semi_cmd->add_option("--beta-re", m_bre);
    semi_cmd->add_option("--beta-im", m_bim);
    semi_cmd->add_option("--w", m_w);
    semi_cmd->add_option("--out", m_out);
    semi_cmd->add_flag("--svg", m_svg);

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "lowest eigenvalues of the Rabi Hamiltonian");
    EffFlags sp_eff;
    sp_eff.attach(spec_cmd);
    int sp_nmax = 24, sp_k = 10;
    std::string sp_out;
    spec_cmd->add_option("--n-max", sp_nmax);
    spec_cmd->add_option("-k,--levels", sp_k);
    spec_cmd->add_option("--out", sp_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (params->parsed())
            return cmd_params(p_preset, d_omega0, d_omega, d_geff, p_gcav, p_delta2);
        if (evolve_cmd->parsed()) return cmd_evolve(ea);
        if (steady_cmd->parsed())
            return cmd_steady(s_eff, u_from, u_to, u_steps, s_nmax, s_out, s_svg);
        if (wigner_cmd->parsed())
            return cmd_wigner(w_eff, w_nmax, w_extent, w_points, w_time, w_init, w_out);
        if (semi_cmd->parsed())
            return cmd_semi(m_g, m_omega, m_omega0, m_kappa, m_u, m_tmax, m_dt, m_are, m_aim,
                            m_bre, m_bim, m_w, m_out, m_svg);
        if (spec_cmd->parsed()) return cmd_spectrum(sp_eff, sp_nmax, sp_k, sp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
