#include "entclone/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "entclone/angular.hpp"
#include "entclone/channel.hpp"
#include "entclone/cloner.hpp"
#include "entclone/measures.hpp"

namespace entclone::cli {

namespace {

constexpr double kRoot2Inv = 0.70710678118654752440;
constexpr double kAlphaStar = 0.3357106870197288;

std::string sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

cloner::ClonerParams isotropic_params() {
    cloner::ClonerParams p;
    p.a[6] = p.a[8] = p.a[14] = p.a[16] = 1.0;
    return p;
}

ComplexMatrix canonical_density(const cloner::EntanglementClass& cls) {
    const ComplexMatrix psi = cloner::canonical_state(cls);
    return psi * psi.adjoint();
}

ComplexMatrix random_density(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix g(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = {normal(rng), normal(rng)};
    ComplexMatrix rho = g * g.adjoint();
    rho *= cplx(1.0 / rho.trace().real());
    return rho;
}

SweepRecord sweep_point(double alpha) {
    const cloner::EntanglementClass cls(alpha);
    const cloner::ClonerParams p = cloner::optimal_params(cls);
    const measures::MeasureReport rep = measures::measure_report(cls);

    SweepRecord rec;
    rec.alpha = alpha;
    rec.f_max = rep.f_max;
    rec.a6 = p.a[6].real();
    rec.a16 = p.a[16].real();
    rec.a11 = p.a[11].real();
    rec.c_in = rep.c_in;
    rec.c12 = rep.c12;
    rec.c13 = rep.c13;
    rec.i_in = rep.i_in;
    rec.i12 = rep.i12;
    rec.i13 = rep.i13;
    rec.i_pair = rep.i_pair;
    rec.negativity = rep.negativity;
    rec.f1_prime = rep.f1_prime;
    return rec;
}

}  // namespace

std::string csv_header() {
    return "alpha,f_max,a6,a16,a11,c_in,c12,c13,i_in,i12,i13,i_pair,negativity,f1_prime";
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    if (config.steps < 2) throw std::invalid_argument("steps must be at least 2");
    if (!(config.alpha_min < config.alpha_max))
        throw std::invalid_argument("alpha range must satisfy alpha_min < alpha_max");
    if (config.alpha_min < 0.0 || config.alpha_max > kRoot2Inv + 1e-12)
        throw std::invalid_argument("alpha range must lie inside [0, 1/sqrt(2)]");

    const int n = config.steps;
    const double span = config.alpha_max - config.alpha_min;
    std::vector<SweepRecord> records(n);

    const unsigned hw = std::thread::hardware_concurrency();
    const int workers = std::min<int>(std::max(1u, hw), 16);
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (int i = w; i < n; i += workers) {
                const double alpha = config.alpha_min + span * i / (n - 1);
                records[i] = sweep_point(alpha);
            }
        }));
    }
    for (auto& job : jobs) job.get();
    return records;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << csv_header() << '\n';
    for (const SweepRecord& r : records) {
        const double fields[] = {r.alpha, r.f_max,  r.a6,  r.a16,    r.a11,
                                 r.c_in,  r.c12,    r.c13, r.i_in,   r.i12,
                                 r.i13,   r.i_pair, r.negativity,    r.f1_prime};
        for (std::size_t i = 0; i < std::size(fields); ++i) {
            if (i) out << ',';
            out << sig12(fields[i]);
        }
        out << '\n';
    }
}

namespace {

// check construction helpers: residuals pass below the shared tolerance,
// floors pass above their own pinned bound
CheckResult residual(std::string id, double value, double tol) {
    return {std::move(id), CheckKind::Residual, value, tol, value <= tol};
}

CheckResult floor_check(std::string id, double slack, double tol) {
    return {std::move(id), CheckKind::Floor, slack, tol, slack >= -tol};
}

}  // namespace

std::vector<CheckResult> run_verify(double tolerance, std::uint64_t seed) {
    using cloner::EntanglementClass;
    std::vector<CheckResult> checks;
    const double grid_end = kRoot2Inv;

    // peak-fidelity curve
    checks.push_back(residual("f-max/endpoint-zero",
                              std::abs(cloner::f_max_raw(0.0) - 4.0 / 9.0), tolerance));
    checks.push_back(residual("f-max/endpoint-sym",
                              std::abs(cloner::f_max_raw(kRoot2Inv) - 0.5), tolerance));
    checks.push_back(residual("f-max/minimum",
                              std::abs(cloner::f_max_raw(kAlphaStar) - 0.4), tolerance));
    {
        double slack = 1.0;
        double sym = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double alpha = grid_end * i / 99.0;
            const double f = cloner::f_max_raw(alpha);
            slack = std::min({slack, f - 0.4, 0.5 - f});
            const double mirror = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
            sym = std::max(sym, std::abs(f - cloner::f_max_raw(mirror)));
        }
        checks.push_back(floor_check("f-max/range", slack, 1e-12));
        checks.push_back(residual("f-max/symmetry", sym, tolerance));
    }

    // operator expansion of the canonical input
    {
        double dev = 0.0;
        for (double alpha : {0.0, 0.3, kRoot2Inv}) {
            const ComplexMatrix rho0 = cloner::input_state(EntanglementClass(alpha));
            dev = std::max(dev, (angular::synthesize(angular::tensor_coeffs(rho0)) - rho0).max_abs());
        }
        checks.push_back(residual("expansion/round-trip", dev, tolerance));
    }

    // the two independent state constructions and the fidelity functional,
    // probed on mixtures of the optimal and the isotropic parameter sets
    {
        double build_dev = 0.0, fid_dev = 0.0;
        for (double alpha : {0.0, 0.2, 0.45, kRoot2Inv}) {
            const EntanglementClass cls(alpha);
            const cloner::ClonerParams opt = cloner::optimal_params(cls);
            const cloner::ClonerParams iso = isotropic_params();
            for (double t : {0.0, 0.3, 0.7, 1.0}) {
                cloner::ClonerParams p;
                for (int i = 1; i <= 17; ++i) p.a[i] = t * opt.a[i] + (1.0 - t) * iso.a[i];
                const cloner::OutputState blocks = cloner::assemble_blocks(cls, p);
                const cloner::OutputState tensor = cloner::assemble_tensor(cls, p);
                build_dev = std::max(build_dev, (blocks.rho - tensor.rho).frobenius_norm());
                fid_dev = std::max(fid_dev, std::abs(cloner::fidelity_formula(cls, p) -
                                                     cloner::fidelity_direct(blocks)));
            }
        }
        checks.push_back(residual("assembly/blocks-vs-tensor", build_dev, tolerance));
        checks.push_back(residual("fidelity/formula-vs-direct", fid_dev, tolerance));
    }

    // per-copy fidelities of the symmetric class
    {
        const EntanglementClass cls(kRoot2Inv);
        const auto pair =
            cloner::single_pair_fidelities(cloner::assemble_blocks(cls, cloner::optimal_params(cls)));
        checks.push_back(residual("fidelity/pair-equality", std::abs(pair.first - pair.second),
                                  tolerance));
        checks.push_back(floor_check("fidelity/pair-band", 0.005 - std::abs(pair.first - 0.67), 0.0));
    }

    // positivity of the optimal output and the parameter inequalities
    {
        double min_eig = 1.0;
        std::array<double, 13> worst{};
        worst.fill(1e300);
        std::vector<std::string> ids;
        for (int i = 0; i <= 20; ++i) {
            const EntanglementClass cls(grid_end * i / 20.0);
            const cloner::ClonerParams p = cloner::optimal_params(cls);
            min_eig = std::min(min_eig,
                               herm_eig(cloner::assemble_blocks(cls, p).rho).values.back());
            const auto ineqs = cloner::check_inequalities(cls, p);
            if (ids.empty())
                for (const auto& q : ineqs) ids.push_back(q.id);
            for (std::size_t k = 0; k < ineqs.size(); ++k)
                worst[k] = std::min(worst[k], ineqs[k].margin);
        }
        checks.push_back(floor_check("positivity/output-spectrum", min_eig, 1e-12));
        for (std::size_t k = 0; k < ids.size(); ++k)
            checks.push_back(floor_check(ids[k], worst[k], 1e-12));
    }

    // channel realizations
    {
        double complete_dev = 0.0, rebuild_dev = 0.0, choi_floor = 1.0;
        for (double alpha : {0.0, 0.3, kRoot2Inv}) {
            const EntanglementClass cls(alpha);
            const channel::KrausSet ks = channel::kraus_set(cls);
            ComplexMatrix sum(4, 4);
            for (const ComplexMatrix& op : ks.operators) sum += op.adjoint() * op;
            ComplexMatrix one(4, 4);
            for (int i = 0; i < 4; ++i) one(i, i) = 1.0;
            complete_dev = std::max(complete_dev, (sum - one).max_abs());

            const ComplexMatrix direct =
                cloner::assemble_blocks(cls, cloner::optimal_params(cls)).rho;
            rebuild_dev = std::max(
                rebuild_dev,
                (channel::apply_channel(ks, canonical_density(cls)) - direct).frobenius_norm());
            choi_floor = std::min(choi_floor, herm_eig(channel::choi_matrix(ks)).values.back());
        }
        checks.push_back(residual("channel/completeness", complete_dev, tolerance));
        checks.push_back(residual("channel/kraus-vs-blocks", rebuild_dev, tolerance));
        checks.push_back(floor_check("channel/choi-psd", choi_floor, 1e-10));

        const EntanglementClass cls(0.3);
        const channel::Dilation dil = channel::dilation(cls);
        ComplexMatrix gram = dil.isometry.adjoint() * dil.isometry;
        for (int i = 0; i < 4; ++i) gram(i, i) -= 1.0;
        checks.push_back(residual("channel/dilation-isometry", gram.max_abs(), tolerance));

        const ComplexMatrix rho = canonical_density(cls);
        const ComplexMatrix via_kraus = channel::apply_channel(channel::kraus_set(cls), rho);
        checks.push_back(residual("channel/dilation-equivalence",
                                  (channel::apply_dilation(dil, rho) - via_kraus).frobenius_norm(),
                                  tolerance));

        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
        double defect = 0.0;
        for (double alpha : {0.0, 0.3, kRoot2Inv}) {
            const EntanglementClass c(alpha);
            for (int round = 0; round < 20; ++round)
                defect = std::max(defect, channel::covariance_defect(c, channel::haar_su2(rng),
                                                                     channel::haar_su2(rng)));
        }
        checks.push_back(residual("channel/covariance", defect, tolerance));
    }

    // correlation measures of the optimal output
    {
        double c12_dev = 0.0, c13_dev = 0.0, marg_dev = 0.0, c12_slack = 1.0;
        for (int i = 0; i <= 20; ++i) {
            const double alpha = grid_end * i / 20.0;
            const EntanglementClass cls(alpha);
            const auto curves = measures::closed_form_curves(cls, cloner::optimal_params(cls));
            const ComplexMatrix out =
                cloner::assemble_blocks(cls, cloner::optimal_params(cls)).rho;
            const ComplexMatrix r12 = partial_trace(out, {1, 2});
            const ComplexMatrix r34 = partial_trace(out, {3, 4});
            c12_dev = std::max(c12_dev,
                               std::abs(curves.c12_formula - measures::concurrence(r12)));
            c13_dev = std::max(c13_dev, std::abs(curves.c13_formula -
                                                 measures::concurrence(partial_trace(out, {1, 3}))));
            marg_dev = std::max(marg_dev, (r12 - r34).frobenius_norm());
            c12_slack = std::min(c12_slack, curves.c_in - curves.c12_formula);
        }
        checks.push_back(residual("measures/closed-form-c12", c12_dev, tolerance));
        checks.push_back(residual("measures/closed-form-c13", c13_dev, tolerance));
        checks.push_back(residual("measures/marginal-equality", marg_dev, tolerance));
        checks.push_back(floor_check("measures/c12-bound", c12_slack, 1e-12));

        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 2);
        double lu_dev = 0.0;
        for (int round = 0; round < 10; ++round) {
            const ComplexMatrix rho = random_density(4, rng);
            const ComplexMatrix u = kron(channel::haar_su2(rng), channel::haar_su2(rng));
            lu_dev = std::max(lu_dev, std::abs(measures::concurrence(rho) -
                                               measures::concurrence(u * rho * u.adjoint())));
        }
        checks.push_back(residual("measures/lu-invariance", lu_dev, tolerance));

        double ioc_floor = 1.0;
        for (int round = 0; round < 20; ++round) {
            const std::vector<std::vector<int>> splits = {{1}, {2}, {1, 2}, {1, 3}};
            ioc_floor = std::min(ioc_floor,
                                 measures::index_of_correlation(random_density(16, rng),
                                                                splits[round % splits.size()]));
        }
        checks.push_back(floor_check("measures/ioc-nonnegative", ioc_floor, 1e-10));
    }

    // feature locations of the measure curves
    {
        const auto c12_curve = [](double alpha) {
            const EntanglementClass cls(alpha);
            return measures::closed_form_curves(cls, cloner::optimal_params(cls)).c12_formula;
        };
        const auto c13_curve = [](double alpha) {
            const EntanglementClass cls(alpha);
            return measures::closed_form_curves(cls, cloner::optimal_params(cls)).c13_formula;
        };
        const auto output_at = [](double alpha) {
            const EntanglementClass cls(alpha);
            return cloner::assemble_blocks(cls, cloner::optimal_params(cls)).rho;
        };
        const auto i13_curve = [&](double alpha) {
            return measures::index_of_correlation(partial_trace(output_at(alpha), {1, 3}), {1});
        };
        const auto neg_curve = [&](double alpha) {
            return measures::negativity(output_at(alpha), {3, 4});
        };

        const double c12_onset =
            measures::find_threshold(c12_curve, measures::ThresholdKind::ZeroCrossing, 0.15, 0.3);
        checks.push_back(floor_check("thresholds/c12-onset",
                                     1e-3 - std::abs(c12_onset - 0.23060743703398429), 0.0));
        const double c13_vanish =
            measures::find_threshold(c13_curve, measures::ThresholdKind::ZeroCrossing, 0.15, 0.35);
        checks.push_back(floor_check("thresholds/c13-vanish",
                                     1e-3 - std::abs(c13_vanish - 0.23967684362946778), 0.0));
        const double i13_min =
            measures::find_threshold(i13_curve, measures::ThresholdKind::Minimum, 0.3, 0.55);
        checks.push_back(floor_check("thresholds/i13-minimum",
                                     1e-3 - std::abs(i13_min - 0.42028316696525364), 0.0));
        const double neg_min =
            measures::find_threshold(neg_curve, measures::ThresholdKind::Minimum, 0.2, 0.5);
        checks.push_back(floor_check("thresholds/negativity-minimum",
                                     1e-2 - std::abs(neg_min - kAlphaStar), 0.0));
        const double neg_peak =
            measures::find_threshold(neg_curve, measures::ThresholdKind::Maximum, 0.4, kRoot2Inv);
        checks.push_back(floor_check("thresholds/negativity-peak",
                                     1e-3 - std::abs(neg_peak - kRoot2Inv), 0.0));

        double neg_floor = 1.0;
        for (int i = 0; i <= 20; ++i) neg_floor = std::min(neg_floor, neg_curve(grid_end * i / 20.0));
        checks.push_back(floor_check("thresholds/negativity-positive", neg_floor, 0.0));
    }

    // the brute-force maximizer against the closed form
    {
        const EntanglementClass cls(0.2);
        const cloner::OracleResult best = cloner::oracle_optimize(cls, 60);
        const double f = cloner::f_max(cls);
        checks.push_back(floor_check("oracle/agreement", 1e-3 - std::abs(f - best.fidelity), 0.0));
        checks.push_back(floor_check("oracle/no-excess", f + 1e-9 - best.fidelity, 0.0));
    }

    return checks;
}

namespace {

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<SweepRecord> records = run_sweep(config);
    if (config.out_path.empty()) {
        write_csv(out, records);
        return 0;
    }
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << config.out_path << "' for writing\n";
        return 1;
    }
    write_csv(file, records);
    if (!file.good()) {
        err << "error: writing to '" << config.out_path << "' failed\n";
        return 1;
    }
    err << "wrote " << records.size() << " rows to " << config.out_path << "\n";
    return 0;
}

int cmd_verify(double tolerance, std::uint64_t seed, std::ostream& out) {
    const std::vector<CheckResult> checks = run_verify(tolerance, seed);
    int failed = 0;
    for (const CheckResult& c : checks) {
        if (!c.passed) ++failed;
        char line[160];
        std::snprintf(line, sizeof(line), "%s  %-32s %s=% .3e  %s=%.1e\n",
                      c.passed ? "PASS" : "FAIL", c.id.c_str(),
                      c.kind == CheckKind::Residual ? "residual" : "margin", c.margin,
                      c.kind == CheckKind::Residual ? "tol" : "floor",
                      c.kind == CheckKind::Residual ? c.tolerance : -c.tolerance);
        out << line;
    }
    out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_params(double alpha, std::ostream& out) {
    const cloner::EntanglementClass cls(alpha);
    const cloner::ClonerParams p = cloner::optimal_params(cls);

    out << "alpha   = " << sig12(cls.alpha()) << "\n";
    out << "x       = " << sig12(cls.x()) << "\n";
    out << "v       = " << sig12(cloner::v_parameter(cls.alpha())) << "\n";
    out << "f_max   = " << sig12(cloner::f_max(cls)) << "\n";
    for (int i = 1; i <= 17; ++i) {
        char line[64];
        std::snprintf(line, sizeof(line), "a%-2d     = %s\n", i, sig12(p.a[i].real()).c_str());
        out << line;
    }
    out << "inequality margins:\n";
    for (const auto& check : cloner::check_inequalities(cls, p)) {
        char line[96];
        std::snprintf(line, sizeof(line), "  %-12s % .6e  %s\n", check.id.c_str(), check.margin,
                      check.satisfied ? "satisfied" : "violated");
        out << line;
    }
    return 0;
}

int cmd_channel(double alpha, const std::string& check, std::uint64_t seed, std::ostream& out) {
    const cloner::EntanglementClass cls(alpha);
    bool ok = true;
    const auto report = [&](const char* name, double value, double bound) {
        const bool pass = value <= bound;
        ok = ok && pass;
        char line[120];
        std::snprintf(line, sizeof(line), "%s  %-24s %.3e  (bound %.1e)\n", pass ? "PASS" : "FAIL",
                      name, value, bound);
        out << line;
    };

    if (check == "kraus") {
        const channel::KrausSet ks = channel::kraus_set(cls);
        ComplexMatrix sum(4, 4);
        for (const ComplexMatrix& op : ks.operators) sum += op.adjoint() * op;
        for (int i = 0; i < 4; ++i) sum(i, i) -= 1.0;
        report("completeness", sum.max_abs(), 1e-12);
        const ComplexMatrix direct = cloner::assemble_blocks(cls, cloner::optimal_params(cls)).rho;
        report("rebuild", (channel::apply_channel(ks, canonical_density(cls)) - direct).frobenius_norm(),
               1e-12);
    } else if (check == "dilation") {
        const channel::Dilation dil = channel::dilation(cls);
        ComplexMatrix gram = dil.isometry.adjoint() * dil.isometry;
        for (int i = 0; i < 4; ++i) gram(i, i) -= 1.0;
        report("isometry", gram.max_abs(), 1e-10);
        const ComplexMatrix rho = canonical_density(cls);
        const ComplexMatrix via_kraus = channel::apply_channel(channel::kraus_set(cls), rho);
        report("equivalence", (channel::apply_dilation(dil, rho) - via_kraus).frobenius_norm(), 1e-10);
    } else if (check == "covariance") {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 3);
        double defect = 0.0;
        for (int round = 0; round < 100; ++round)
            defect = std::max(defect, channel::covariance_defect(cls, channel::haar_su2(rng),
                                                                 channel::haar_su2(rng)));
        report("covariance-defect", defect, 1e-10);
    } else {  // twirl: a covariant map is a fixed point sample by sample
        const channel::ChannelMap map = channel::optimal_channel(cls);
        const ComplexMatrix rho = canonical_density(cls);
        const ComplexMatrix averaged = channel::twirl(map, 100, rho, seed);
        report("twirl-fixed-point", (averaged - map(rho)).frobenius_norm(), 1e-10);
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"covariant two-qubit copying: sweeps, self checks, and reports", "entclone"};
    app.require_subcommand(1);

    SweepConfig config;
    CLI::App* sweep = app.add_subcommand("sweep", "write the alpha sweep as CSV");
    sweep->add_option("--alpha-min", config.alpha_min, "start of the alpha grid")
        ->capture_default_str();
    sweep->add_option("--alpha-max", config.alpha_max, "end of the alpha grid")
        ->capture_default_str();
    sweep->add_option("--steps", config.steps, "grid points, inclusive")->capture_default_str();
    sweep->add_option("--seed", config.seed, "sampling seed")->capture_default_str();
    sweep->add_option("--out", config.out_path, "output file (default: standard output)");

    double tolerance = 1e-10;
    std::uint64_t verify_seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the cross-module self-check catalog");
    verify->add_option("--tolerance", tolerance, "bound for residual-style checks")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "sampling seed")->capture_default_str();

    double alpha = 0.0;
    CLI::App* params = app.add_subcommand("params", "print the optimal parameter set for one class");
    params->add_option("--alpha", alpha, "degree of entanglement in [0, 1/sqrt(2)]")->required();

    double ch_alpha = 0.0;
    std::string ch_check;
    std::uint64_t ch_seed = 0;
    CLI::App* channel_cmd = app.add_subcommand("channel", "run one channel diagnostic");
    channel_cmd->add_option("--alpha", ch_alpha, "degree of entanglement in [0, 1/sqrt(2)]")
        ->required();
    channel_cmd->add_option("--check", ch_check, "one of: kraus, dilation, covariance, twirl")
        ->required()
        ->check(CLI::IsMember({"kraus", "dilation", "covariance", "twirl"}));
    channel_cmd->add_option("--seed", ch_seed, "sampling seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(config, out, err);
        if (verify->parsed()) return cmd_verify(tolerance, verify_seed, out);
        if (params->parsed()) return cmd_params(alpha, out);
        return cmd_channel(ch_alpha, ch_check, ch_seed, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("entclone");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace entclone::cli
