// hwmc: finite Heisenberg-Weyl symbol calculus and coupled-oscillator mode
// conversion, exposed as file-oriented subcommands.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hwmc/expm.hpp"
#include "hwmc/gammafn.hpp"
#include "hwmc/hocorr.hpp"
#include "hwmc/io.hpp"
#include "hwmc/raytrace.hpp"
#include "hwmc/scattering.hpp"
#include "hwmc/starexp.hpp"

using json = nlohmann::json;
using namespace hwmc;

namespace {

struct GlobalOpts {
    std::string out_dir;
    std::string format = "csv";
    double tol = 1e-9;
};

std::filesystem::path resolve(const GlobalOpts& g, const std::string& path) {
    std::filesystem::path p(path);
    if (!g.out_dir.empty() && p.is_relative()) p = std::filesystem::path(g.out_dir) / p;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    return p;
}

std::ofstream open_out(const GlobalOpts& g, const std::string& path) {
    const auto p = resolve(g, path);
    std::ofstream os(p);
    if (!os) throw std::invalid_argument("cannot open output file " + p.string());
    return os;
}

json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open input file " + path);
    json j;
    is >> j;
    return j;
}

void require_odd_n(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
}

void emit_symbol(const GlobalOpts& g, const SymbolGrid& a, const std::string& out) {
    if (g.format == "json") {
        json j;
        j["n"] = a.n;
        j["values"] = json::array();
        for (int i = 0; i < a.values.size(); ++i) j["values"].push_back(complex_to_json(a.values(i)));
        open_out(g, out) << j.dump(2) << '\n';
    } else {
        auto os = open_out(g, out);
        write_symbol_csv(os, a);
    }
}

OscillatorConfig oscillator_from_json(const json& cfg) {
    OscillatorConfig c;
    auto profile = [](const json& j) {
        if (j.contains("table_t"))
            return FrequencyProfile::table_profile(j["table_t"].get<std::vector<double>>(),
                                                   j["table_w"].get<std::vector<double>>());
        return FrequencyProfile::tanh_profile(j.value("base", 20.0), j.value("delta", -5.0),
                                              j.value("T", 5.0));
    };
    if (cfg.contains("omega1")) c.omega1 = profile(cfg["omega1"]);
    if (cfg.contains("omega2")) c.omega2 = profile(cfg["omega2"]);
    c.eta = cfg.value("eta", 0.0);
    const std::string form = cfg.value("coupling", "direct");
    if (form == "direct") {
        c.coupling = CouplingForm::Direct;
    } else if (form == "difference") {
        c.coupling = CouplingForm::Difference;
    } else {
        throw std::invalid_argument("coupling must be 'direct' or 'difference'");
    }
    if (cfg.contains("x0")) {
        c.x1_0 = complex_from_json(cfg["x0"][0]);
        c.x2_0 = complex_from_json(cfg["x0"][1]);
    }
    if (cfg.contains("v0")) {
        c.v1_0 = complex_from_json(cfg["v0"][0]);
        c.v2_0 = complex_from_json(cfg["v0"][1]);
    }
    return c;
}

QuadraticDispersion hocorr_from_json(const json& cfg) {
    QuadraticDispersion qd;
    qd.a1 = cfg.value("a1", 0.0);
    qd.b1 = cfg.value("b1", 0.0);
    qd.c1 = cfg.value("c1", 0.0);
    qd.a2 = cfg.value("a2", 0.0);
    qd.b2 = cfg.value("b2", 0.0);
    qd.c2 = cfg.value("c2", 0.0);
    qd.epsilon = cfg.value("epsilon", 1.0);
    if (cfg.contains("eta")) qd.eta = complex_from_json(cfg["eta"]);
    return qd;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Heisenberg-Weyl symbol calculus and mode-conversion numerics"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--out-dir", g.out_dir, "directory prefix for relative output paths");
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol", g.tol, "tolerance for oracle checks");

    // ---- group ----
    auto* group_cmd = app.add_subcommand("group", "group arithmetic and tables");
    group_cmd->require_subcommand(1);
    auto* table_cmd = group_cmd->add_subcommand("table", "emit the multiplication table as CSV");
    int tbl_n = 3;
    bool tbl_header = false;
    std::string tbl_out = "table.csv";
    table_cmd->add_option("--n", tbl_n, "modulus (odd, >= 3)");
    table_cmd->add_flag("--header", tbl_header, "add row/column labels");
    table_cmd->add_option("--out", tbl_out, "output CSV path");
    table_cmd->callback([&] {
        require_odd_n(tbl_n);
        auto os = open_out(g, tbl_out);
        write_table_csv(os, multiplication_table(tbl_n), tbl_header);
    });

    // ---- repr ----
    auto* repr_cmd = app.add_subcommand("repr", "characters and representation matrices");
    int repr_n = 3;
    std::string repr_out = "repr.json";
    repr_cmd->add_option("--n", repr_n, "modulus (odd, >= 3)");
    repr_cmd->add_option("--out", repr_out, "output JSON path");
    repr_cmd->callback([&] {
        require_odd_n(repr_n);
        json j;
        j["n"] = repr_n;
        j["labels"] = json::array();
        const auto labels = all_irrep_labels(repr_n);
        const auto elems = all_elements(repr_n);
        for (const auto& label : labels) {
            json lj;
            if (label.is_one_dim()) {
                lj["type"] = "one_dim";
                lj["u"] = label.as_one_dim().u;
                lj["v"] = label.as_one_dim().v;
            } else {
                lj["type"] = "n_dim";
                lj["alpha"] = label.as_n_dim().alpha;
            }
            lj["characters"] = json::array();
            for (const auto& e : elems) lj["characters"].push_back(complex_to_json(character(label, e)));
            if (!label.is_one_dim()) {
                lj["matrices"] = json::array();
                for (const auto& e : elems) lj["matrices"].push_back(matrix_to_json(irrep_matrix(label, e)));
            }
            j["labels"].push_back(lj);
        }
        open_out(g, repr_out) << j.dump() << '\n';
    });

    // ---- symbol ----
    auto* sym_cmd = app.add_subcommand("symbol", "Zobin symbol of a matrix");
    int sym_n = 3, sym_alpha = 1;
    bool sym_invdim = false;
    std::string sym_matrix, sym_out = "symbol.csv";
    sym_cmd->add_option("--n", sym_n, "modulus");
    sym_cmd->add_option("--alpha", sym_alpha, "fiber index, 1..n-1");
    std::string sym_section_out;
    sym_cmd->add_option("--matrix", sym_matrix, "JSON file holding an n x n matrix")->required();
    sym_cmd->add_flag("--inverse-dim-weights", sym_invdim, "use the 1/dim Plancherel weight");
    sym_cmd->add_option("--out", sym_out, "output path");
    sym_cmd->add_option("--section-out", sym_section_out,
                        "also quantize the symbol back and write the section as JSON");
    sym_cmd->callback([&] {
        require_odd_n(sym_n);
        const Mat m = matrix_from_json(load_json(sym_matrix));
        const auto weight = sym_invdim ? PlancherelWeight::InverseDim : PlancherelWeight::Exact;
        const SymbolGrid grid = symbol_of_matrix(m, sym_alpha, sym_n, weight);
        emit_symbol(g, grid, sym_out);
        if (!sym_section_out.empty())
            open_out(g, sym_section_out) << section_to_json(quantize(grid)).dump() << '\n';
    });

    // ---- star ----
    auto* star_cmd = app.add_subcommand("star", "star products and kernel slices");
    star_cmd->require_subcommand(1);
    auto* ker_cmd = star_cmd->add_subcommand("kernel-slice", "CSV slice of the star kernel");
    int ker_n = 3, ker_u = 0, ker_v = 0, ker_w = 1;
    std::string ker_out = "kernel_slice.csv";
    ker_cmd->add_option("--n", ker_n, "modulus");
    ker_cmd->add_option("--u", ker_u, "output index u");
    ker_cmd->add_option("--v", ker_v, "output index v");
    ker_cmd->add_option("--w", ker_w, "output index w");
    ker_cmd->add_option("--out", ker_out, "output CSV path");
    ker_cmd->callback([&] {
        require_odd_n(ker_n);
        auto os = open_out(g, ker_out);
        write_kernel_slice_csv(os, star_kernel_slice(ker_n, ker_u, ker_v, ker_w));
    });
    auto* prod_cmd = star_cmd->add_subcommand("product", "symbol of A, of B, and A*B");
    int prod_n = 3, prod_alpha = 1;
    std::string prod_a, prod_b, prod_out = "star_product.csv";
    prod_cmd->add_option("--n", prod_n, "modulus");
    prod_cmd->add_option("--alpha", prod_alpha, "fiber index");
    prod_cmd->add_option("--matrix-a", prod_a, "JSON matrix A")->required();
    prod_cmd->add_option("--matrix-b", prod_b, "JSON matrix B")->required();
    prod_cmd->add_option("--out", prod_out, "output path");
    prod_cmd->callback([&] {
        require_odd_n(prod_n);
        const Mat a = matrix_from_json(load_json(prod_a));
        const Mat b = matrix_from_json(load_json(prod_b));
        const SymbolGrid sa = symbol_of_matrix(a, prod_alpha, prod_n);
        const SymbolGrid sb = symbol_of_matrix(b, prod_alpha, prod_n);
        emit_symbol(g, star(sa, sb), prod_out);
    });

    // ---- star-exp ----
    auto* sexp_cmd = app.add_subcommand("star-exp", "star exponential via the limit formula");
    int se_n = 3, se_alpha = 1, se_steps = 64;
    double se_t = 1.0;
    bool se_oracle = false;
    std::string se_matrix, se_out = "star_exp.json";
    sexp_cmd->add_option("--n", se_n, "modulus");
    sexp_cmd->add_option("--alpha", se_alpha, "fiber index");
    sexp_cmd->add_option("--matrix", se_matrix, "JSON file holding an n x n matrix")->required();
    sexp_cmd->add_option("--t", se_t, "time");
    sexp_cmd->add_option("--steps", se_steps, "number of limit-formula factors N");
    sexp_cmd->add_flag("--oracle", se_oracle, "also compare against the expm oracle");
    sexp_cmd->add_option("--out", se_out, "output JSON path");
    sexp_cmd->callback([&] {
        require_odd_n(se_n);
        const Mat m = matrix_from_json(load_json(se_matrix));
        const SymbolGrid a = symbol_of_matrix(m, se_alpha, se_n);
        const SymbolGrid se = star_exp(a, se_t, se_steps);
        json j;
        j["n"] = se_n;
        j["alpha"] = se_alpha;
        j["t"] = se_t;
        j["steps"] = se_steps;
        j["symbol"] = json::array();
        for (int i = 0; i < se.values.size(); ++i) j["symbol"].push_back(complex_to_json(se.values(i)));
        if (se_oracle) {
            const bool hermitian = (m - m.adjoint()).norm() < 1e-12 * std::max(1.0, m.norm());
            const Mat em = hermitian ? expm_hermitian_it(m, se_t)
                                     : expm_general(cxd(0.0, se_t) * m);
            const SymbolGrid ref = symbol_of_matrix(em, se_alpha, se_n);
            const double err = (se.values - ref.values).cwiseAbs().maxCoeff();
            j["oracle_symbol"] = json::array();
            for (int i = 0; i < ref.values.size(); ++i)
                j["oracle_symbol"].push_back(complex_to_json(ref.values(i)));
            j["oracle_error"] = err;
            if (!(err < std::max(g.tol, 20.0 / se_steps)))
                throw std::runtime_error("star-exp oracle error " + format_double(err) +
                                         " exceeds the documented O(1/N) bound");
        }
        open_out(g, se_out) << j.dump(2) << '\n';
    });

    // ---- modeconv ----
    auto* mc_cmd = app.add_subcommand("modeconv", "coupled-oscillator runs and scattering");
    mc_cmd->require_subcommand(1);
    auto* run_cmd = mc_cmd->add_subcommand("run", "integrate and emit the trajectory");
    std::string run_cfg, run_out = "traj.csv";
    run_cmd->add_option("--config", run_cfg, "JSON configuration")->required();
    run_cmd->add_option("--out", run_out, "output CSV path");
    run_cmd->callback([&] {
        const json cfg = load_json(run_cfg);
        OscillatorConfig c = oscillator_from_json(cfg);
        const double t0 = cfg.value("t0", -40.0), t1 = cfg.value("t1", 40.0);
        if (cfg.value("positive_frequency", !cfg.contains("x0")))
            set_positive_frequency_start(c, t0, c.x1_0 == cxd(0.0, 0.0) ? cxd(1.0, 0.0) : c.x1_0);
        OdeOptions opts;
        opts.rel_tol = cfg.value("rel_tol", 1e-9);
        opts.abs_tol = cfg.value("abs_tol", 1e-12);
        const Trajectory traj = integrate(c, t0, t1, opts, cfg.value("sample_dt", 0.0));
        auto os = open_out(g, run_out);
        write_trajectory_csv(os, traj);
    });
    auto* coeff_cmd = mc_cmd->add_subcommand("coeffs", "normal form and scattering data");
    std::string coeff_cfg, coeff_out = "scattering.json";
    bool coeff_measure = false;
    coeff_cmd->add_option("--config", coeff_cfg, "JSON configuration")->required();
    coeff_cmd->add_option("--out", coeff_out, "output JSON path");
    coeff_cmd->add_flag("--measure", coeff_measure, "also measure tau from an ODE run");
    coeff_cmd->callback([&] {
        const json cfg = load_json(coeff_cfg);
        OscillatorConfig c = oscillator_from_json(cfg);
        const NormalForm nf = normal_form(c);
        const ScatteringData sd = conversion_coefficients(nf);
        json j;
        j["t0"] = sd.t0;
        j["omega0"] = sd.omega0;
        j["bracket"] = sd.bracket;
        j["eta_tilde"] = sd.eta_tilde;
        j["tau"] = sd.tau;
        j["beta"] = complex_to_json(sd.beta);
        j["transform"] = {{nf.transform[0][0], nf.transform[0][1]},
                          {nf.transform[1][0], nf.transform[1][1]}};
        j["generating_function"] = {{"qq", nf.gen_qq}, {"tq", nf.gen_tq}, {"tt", nf.gen_tt}};
        if (coeff_measure) {
            const double t0 = cfg.value("t0", -40.0), t1 = cfg.value("t1", 40.0);
            set_positive_frequency_start(c, t0);
            const Trajectory traj = integrate(c, t0, t1);
            const MeasuredTransmission mt =
                measure_transmission(traj, c, sd, cfg.value("near_offset", 15.0),
                                     cfg.value("far_offset", 35.0));
            j["tau_hat"] = mt.tau_hat;
            j["beta_hat_mag"] = mt.beta_hat_mag;
        }
        open_out(g, coeff_out) << j.dump(2) << '\n';
    });
    auto* ray_cmd = mc_cmd->add_subcommand("rays", "trace a dispersion-surface ray");
    std::string ray_cfg, ray_out = "ray.csv";
    int ray_channel = 1;
    double ray_t0 = -30.0, ray_sigma = 2.0;
    ray_cmd->add_option("--config", ray_cfg, "JSON configuration")->required();
    ray_cmd->add_option("--channel", ray_channel, "uncoupled channel, 1 or 2");
    ray_cmd->add_option("--t-seed", ray_t0, "seed time");
    ray_cmd->add_option("--sigma", ray_sigma, "ray parameter span");
    ray_cmd->add_option("--out", ray_out, "output CSV path");
    ray_cmd->callback([&] {
        const json cfg = load_json(ray_cfg);
        const OscillatorConfig c = oscillator_from_json(cfg);
        if (ray_channel != 1 && ray_channel != 2)
            throw std::invalid_argument("rays: channel must be 1 or 2");
        DispersionFunction d;
        d.value = [c, ray_channel](double t, double w) {
            const double wn =
                ray_channel == 1 ? c.omega1.value(t) : c.omega2.value(t);
            return w * w - wn * wn;
        };
        d.d_domega = [](double, double w) { return 2.0 * w; };
        d.d_dt = [c, ray_channel](double t, double) {
            const double wn = ray_channel == 1 ? c.omega1.value(t) : c.omega2.value(t);
            const double wd =
                ray_channel == 1 ? c.omega1.derivative(t) : c.omega2.derivative(t);
            return -2.0 * wn * wd;
        };
        const double w0 =
            ray_channel == 1 ? c.omega1.value(ray_t0) : c.omega2.value(ray_t0);
        const Ray ray = ray_trace(d, ray_t0, w0, ray_sigma);
        auto os = open_out(g, ray_out);
        os << "sigma,t,omega,residual\n";
        for (size_t i = 0; i < ray.sigma.size(); ++i)
            os << format_double(ray.sigma[i]) << ',' << format_double(ray.t[i]) << ','
               << format_double(ray.omega[i]) << ',' << format_double(ray.residual[i]) << '\n';
    });

    // ---- hocorr ----
    auto* hc_cmd = app.add_subcommand("hocorr", "quadratic-order corrections");
    hc_cmd->require_subcommand(1);
    auto* hc_coeff = hc_cmd->add_subcommand("coefficients", "local series coefficients");
    std::string hcc_cfg, hcc_out = "hocorr_coefficients.json";
    hc_coeff->add_option("--config", hcc_cfg, "JSON configuration")->required();
    hc_coeff->add_option("--out", hcc_out, "output JSON path");
    hc_coeff->callback([&] {
        const QuadraticDispersion qd = hocorr_from_json(load_json(hcc_cfg));
        const LocalSeries ls = local_coefficients(qd);
        json j;
        j["residual"] = local_series_residual(ls, qd);
        for (int n : {-3, -1, 1, 3}) {
            const std::string k = std::to_string(n);
            j["s"][k] = complex_to_json(ls.s_at(n));
            j["s_tilde"][k] = complex_to_json(ls.s_tilde_at(n));
            j["sigma"][k] = complex_to_json(ls.sigma[LocalSeries::slot(n)]);
            j["sigma_tilde"][k] = complex_to_json(ls.sigma_tilde[LocalSeries::slot(n)]);
        }
        open_out(g, hcc_out) << j.dump(2) << '\n';
    });
    auto* hc_match = hc_cmd->add_subcommand("match", "channel matching coefficients");
    std::string hcm_cfg, hcm_out = "hocorr_match.json";
    double hcm_qs = -4.0, hcm_qss = 4.0, hcm_ps = 4.0;
    hc_match->add_option("--config", hcm_cfg, "JSON configuration")->required();
    hc_match->add_option("--qstar", hcm_qs, "matching point q* < 0");
    hc_match->add_option("--qstarstar", hcm_qss, "matching point q** > 0");
    hc_match->add_option("--pstar", hcm_ps, "matching point p* > 0");
    hc_match->add_option("--out", hcm_out, "output JSON path");
    hc_match->callback([&] {
        const QuadraticDispersion qd = hocorr_from_json(load_json(hcm_cfg));
        const ChannelMatch m = match_channels(qd, hcm_qs, hcm_qss, hcm_ps);
        json j;
        j["upper"] = complex_to_json(m.upper);
        j["lower"] = complex_to_json(m.lower);
        j["upper_coupled"] = complex_to_json(m.upper_coupled);
        open_out(g, hcm_out) << j.dump(2) << '\n';
    });
    auto* hc_trep = hc_cmd->add_subcommand("trep", "t-representation comparison curves");
    std::string hct_cfg, hct_out = "hocorr_trep.csv";
    double hct_tmax = 12.0, hct_dt = 0.1;
    hc_trep->add_option("--config", hct_cfg, "JSON configuration")->required();
    hc_trep->add_option("--tmax", hct_tmax, "half-width of the time window");
    hc_trep->add_option("--dt", hct_dt, "sample spacing");
    hc_trep->add_option("--out", hct_out, "output CSV path");
    hc_trep->callback([&] {
        const QuadraticDispersion qd = hocorr_from_json(load_json(hct_cfg));
        const TRepComparison cmp = t_rep_compare(qd, hct_tmax, hct_dt, 0.02, 0.05);
        auto os = open_out(g, hct_out);
        os << "t,ode1_re,ode1_im,ode2_re,ode2_im,closed1_re,closed1_im,closed2_re,closed2_im\n";
        for (size_t i = 0; i < cmp.t.size(); ++i) {
            const cxd c1 = t_rep_closed_form(1, qd, cmp.t[i]);
            const cxd c2 = t_rep_closed_form(2, qd, cmp.t[i]);
            os << format_double(cmp.t[i]) << ',' << format_double(cmp.ode1[i].real()) << ','
               << format_double(cmp.ode1[i].imag()) << ',' << format_double(cmp.ode2[i].real())
               << ',' << format_double(cmp.ode2[i].imag()) << ',' << format_double(c1.real())
               << ',' << format_double(c1.imag()) << ',' << format_double(c2.real()) << ','
               << format_double(c2.imag()) << '\n';
        }
        std::cerr << "window_corrected=" << cmp.window_corrected
                  << " window_flat=" << cmp.window_flat << " offset2=" << cmp.offset2 << '\n';
    });

    // ---- wigner ----
    auto* wg_cmd = app.add_subcommand("wigner", "Wigner transform of a sampled trajectory");
    std::string wg_traj, wg_out = "wigner.csv";
    double wg_st = 0.0, wg_sw = 0.0;
    int wg_nfreq = 0, wg_order = 21, wg_stride = 1;
    wg_cmd->add_option("--traj", wg_traj, "trajectory CSV from 'modeconv run'")->required();
    wg_cmd->add_option("--avg-sigma-t", wg_st, "Gaussian averaging width in t");
    wg_cmd->add_option("--avg-sigma-w", wg_sw, "Gaussian averaging width in omega");
    wg_cmd->add_option("--n-freq", wg_nfreq, "frequency bins (default: sample count)");
    wg_cmd->add_option("--quad-order", wg_order, "Gauss-Hermite order");
    wg_cmd->add_option("--stride", wg_stride, "use every k-th sample");
    wg_cmd->add_option("--out", wg_out, "output CSV path");
    wg_cmd->callback([&] {
        std::ifstream is(wg_traj);
        if (!is) throw std::invalid_argument("cannot open trajectory file " + wg_traj);
        std::string line;
        std::getline(is, line);  // header
        SampledSignal sig;
        std::vector<double> times;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            double t, r1, i1, r2, i2;
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &t, &r1, &i1, &r2, &i2) != 5)
                throw std::invalid_argument("malformed trajectory row: " + line);
            times.push_back(t);
            sig.ch1.push_back(cxd(r1, i1));
            sig.ch2.push_back(cxd(r2, i2));
        }
        if (wg_stride > 1) {
            std::vector<double> ts;
            std::vector<cxd> c1, c2;
            for (size_t i = 0; i < times.size(); i += wg_stride) {
                ts.push_back(times[i]);
                c1.push_back(sig.ch1[i]);
                c2.push_back(sig.ch2[i]);
            }
            times.swap(ts);
            sig.ch1.swap(c1);
            sig.ch2.swap(c2);
        }
        if (times.size() < 4) throw std::invalid_argument("trajectory too short");
        sig.t0 = times.front();
        sig.dt = times[1] - times[0];
        for (size_t i = 1; i < times.size(); ++i)
            if (std::abs(times[i] - times[i - 1] - sig.dt) > 1e-6 * sig.dt)
                throw std::invalid_argument(
                    "trajectory is not uniformly sampled; rerun 'modeconv run' with sample_dt");
        if (sig.ch1.size() % 2 != 0) {
            sig.ch1.pop_back();
            sig.ch2.pop_back();
        }
        WignerGrid grid = wigner_transform(sig, wg_nfreq);
        if (wg_st > 0.0 || wg_sw > 0.0) grid = mixed_average(grid, wg_st, wg_sw, wg_order);
        auto os = open_out(g, wg_out);
        write_wigner_csv(os, grid);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        json diag;
        diag["error"] = e.what();
        std::cerr << diag.dump() << '\n';
        return 1;
    }
    return 0;
}
