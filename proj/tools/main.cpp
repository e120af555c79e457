// Batch CLI for JC / anti-JC atom-field purity dynamics: time scans,
// parameter sweeps, one-shot quantification and self-verification.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jcpurity/io.hpp"
#include "jcpurity/scan.hpp"
#include "jcpurity/svg.hpp"
#include "jcpurity/verify.hpp"

namespace {

using namespace jcpurity;

struct CommonOpts {
    std::string model = "jc";
    ModelParams params;
    TimeGrid grid;
    double tail_bound = 1e-12;
    std::string out;
    std::string format = "csv";
    std::string plot;
    std::vector<std::string> series = kDefaultSeries;
};

void add_model_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--model", o.model, "Interaction model: jc or ajc")
        ->check(CLI::IsMember({"jc", "ajc"}));
    cmd->add_option("--alpha", o.params.alpha, "Coherent field amplitude")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--beta", o.params.beta, "Red-sideband detuning ratio delta/g")
        ->capture_default_str();
    cmd->add_option("--f", o.params.f, "Frequency ratio omega/g")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--g", o.params.g, "Coupling rate (1/time)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tail-bound", o.tail_bound,
                    "Maximum neglected Poisson tail mass")
        ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tau-max", o.grid.tau_max, "End of the scaled-time grid")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--steps", o.grid.steps, "Grid steps (steps+1 samples)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_output_options(CLI::App* cmd, CommonOpts& o, bool out_required) {
    auto* out = cmd->add_option("--out", o.out, "Output file path");
    if (out_required) out->required();
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--plot", o.plot, "Optional standalone SVG plot path");
    cmd->add_option("--series", o.series,
                    "Series plotted in the SVG (schema column names)")
        ->delimiter(',');
}

ModelParams resolve_params(const CommonOpts& o) {
    ModelParams p = o.params;
    p.model = o.model == "ajc" ? Model::AJC : Model::JC;
    return p;
}

OutputFormat resolve_format(const CommonOpts& o) {
    return o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

std::string sweep_path(const std::string& base, const std::string& param,
                       double value) {
    const std::filesystem::path p(base);
    std::filesystem::path out = p.parent_path() / p.stem();
    return out.string() + "_" + param + format_double(value) +
           p.extension().string();
}

nlohmann::ordered_json report_json(const BlochFourVector& bloch,
                                   const PurityReport& rep) {
    nlohmann::ordered_json obj;
    obj["r0"] = bloch.r0;
    obj["r1"] = bloch.r1;
    obj["r2"] = bloch.r2;
    obj["r3"] = bloch.r3;
    obj["r_norm"] = bloch.vec_norm();
    obj["mixed_measure"] = rep.mixed_measure;
    obj["purity"] = rep.purity;
    obj["concurrence"] = rep.concurrence;
    obj["tangle"] = rep.tangle;
    obj["tan_phi"] = rep.tan_phi;
    obj["phi"] = rep.phi;
    obj["eps_minus"] = rep.eps_minus;
    obj["eps_plus"] = rep.eps_plus;
    obj["lambda_minus"] = rep.lambda_minus;
    obj["lambda_plus"] = rep.lambda_plus;
    obj["amp_mag"] = rep.amp_mag;
    obj["amp_phase"] = rep.amp_phase;
    obj["entropy_vn"] = rep.entropy_vn;
    obj["entropy_binary"] = rep.entropy_binary;
    obj["excitation"] = rep.excitation;
    return obj;
}

int run_simulate(const CommonOpts& o) {
    const auto records = run_scan(resolve_params(o), o.grid, o.tail_bound);
    write_records(records, resolve_format(o), o.out);
    if (!o.plot.empty()) {
        render_svg(records, o.series, o.plot);
    }
    return 0;
}

int run_sweep_cmd(const CommonOpts& o, const std::vector<double>& alphas,
                  const std::vector<double>& betas,
                  const std::vector<double>& fs) {
    SweepParam param;
    std::string name;
    const std::vector<double>* values = nullptr;
    if (!alphas.empty()) {
        param = SweepParam::Alpha; name = "alpha"; values = &alphas;
    } else if (!betas.empty()) {
        param = SweepParam::Beta; name = "beta"; values = &betas;
    } else {
        param = SweepParam::F; name = "f"; values = &fs;
    }
    const auto results =
        run_sweep(resolve_params(o), param, *values, o.grid, o.tail_bound);
    for (const auto& [value, records] : results) {
        write_records(records, resolve_format(o), sweep_path(o.out, name, value));
        if (!o.plot.empty()) {
            render_svg(records, o.series, sweep_path(o.plot, name, value));
        }
    }
    return 0;
}

int run_quantify(const BlochFourVector& input, const std::string& out_path) {
    const BlochFourVector bloch = clamped(input);
    const auto obj = report_json(bloch, purity_report(bloch));
    if (out_path.empty()) {
        std::cout << obj.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot open output file: " + out_path);
        out << obj.dump(2) << "\n";
    }
    return 0;
}

int run_point(const CommonOpts& o, double tau) {
    const ModelParams params = resolve_params(o);
    const FockBasis basis = poisson_weights(params.alpha, o.tail_bound);
    const BlochFourVector bloch = bloch_at(params, tau, basis);
    const std::vector<ScanRecord> records = {{tau, bloch, purity_report(bloch)}};
    if (o.out.empty()) {
        std::cout << (resolve_format(o) == OutputFormat::Csv
                          ? records_to_csv(records)
                          : records_to_json(records));
    } else {
        write_records(records, resolve_format(o), o.out);
    }
    return 0;
}

int run_verify(const VerifyOptions& options) {
    const VerifyResult result = run_verification(options);
    std::cout << "checks: " << result.checks
              << "  failures: " << result.failures
              << "  max bloch diff: " << result.max_bloch_diff
              << "  max eigen diff: " << result.max_eigen_diff << "\n";
    for (const auto& line : result.failure_lines) {
        std::cout << "  " << line << "\n";
    }
    std::cout << (result.ok() ? "verification passed" : "verification FAILED")
              << "\n";
    return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form JC/aJC atom-field dynamics and purity "
                 "quantifiers"};
    app.require_subcommand(1);

    CommonOpts sim;
    auto* simulate = app.add_subcommand(
        "simulate", "Scan a time grid and write CSV/JSON (optionally SVG)");
    add_model_options(simulate, sim);
    add_grid_options(simulate, sim);
    add_output_options(simulate, sim, /*out_required=*/true);

    CommonOpts swp;
    std::vector<double> alpha_list, beta_list, f_list;
    auto* sweep = app.add_subcommand(
        "sweep", "Run one scan per value of a swept parameter");
    add_model_options(sweep, swp);
    add_grid_options(sweep, swp);
    add_output_options(sweep, swp, /*out_required=*/true);
    auto* oa = sweep->add_option("--alpha-list", alpha_list,
                                 "Sweep values for alpha")->delimiter(',');
    auto* ob = sweep->add_option("--beta-list", beta_list,
                                 "Sweep values for beta")->delimiter(',');
    auto* of = sweep->add_option("--f-list", f_list,
                                 "Sweep values for f")->delimiter(',');
    oa->excludes(ob)->excludes(of);
    ob->excludes(of);

    BlochFourVector qin;
    std::string quantify_out;
    auto* quantify = app.add_subcommand(
        "quantify", "Purity report for one Bloch four-vector");
    quantify->add_option("--r0", qin.r0, "Trace component")->required();
    quantify->add_option("--r1", qin.r1, "Pauli-1 expectation")->required();
    quantify->add_option("--r2", qin.r2, "Pauli-2 expectation")->required();
    quantify->add_option("--r3", qin.r3, "Pauli-3 expectation")->required();
    quantify->add_option("--out", quantify_out, "Output file (default stdout)");

    CommonOpts pt;
    double point_tau = 0.0;
    auto* point = app.add_subcommand(
        "point", "Evaluate the dynamics at a single scaled time");
    add_model_options(point, pt);
    point->add_option("--tau", point_tau, "Scaled time tau = g*t")
        ->check(CLI::NonNegativeNumber)
        ->required();
    point->add_option("--out", pt.out, "Output file (default stdout)");
    point->add_option("--format", pt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    VerifyOptions vopt;
    auto* verify = app.add_subcommand(
        "verify", "Closed form vs. partial-trace oracle equivalence");
    verify->add_option("--samples", vopt.samples, "Random configurations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", vopt.seed, "PRNG seed")
        ->capture_default_str();
    verify->add_option("--tolerance", vopt.tol_bloch,
                       "Per-component Bloch tolerance (eigen uses 1/10th)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (sweep->parsed()) {
            if (alpha_list.empty() && beta_list.empty() && f_list.empty()) {
                std::cerr << "sweep requires one of --alpha-list, --beta-list, "
                             "--f-list\n";
                return 2;
            }
            return run_sweep_cmd(swp, alpha_list, beta_list, f_list);
        }
        if (quantify->parsed()) return run_quantify(qin, quantify_out);
        if (point->parsed()) return run_point(pt, point_tau);
        if (verify->parsed()) {
            vopt.tol_eigen = vopt.tol_bloch / 10.0;
            return run_verify(vopt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
