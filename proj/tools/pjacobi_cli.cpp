#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pjacobi/errors.hpp"
#include "pjacobi/io.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kNumerical = 3 };

}  // namespace

int main(int argc, char** argv) {
    using namespace pjacobi;
    CLI::App app{"Spectral analysis of periodic Jacobi matrices"};
    app.require_subcommand(1);

    double tol_edge = 1e-14;
    double ymax = 12.0;
    bool skip_dirichlet = false;
    bool skip_herglotz = false;
    bool stamp = false;
    std::string input;
    std::string output;
    int n_points = 1001;
    int n_theta = 721;
    int order = 0;
    int p = 1;
    int q = 3;
    double theta = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "operator document (JSON)")->required();
        sub->add_option("--tol-edge", tol_edge, "relative band-edge bisection tolerance");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full analysis document");
    add_common(analyze);
    analyze->add_option("-o,--output", output, "output path (stdout if omitted)");
    analyze->add_option("--ymax", ymax, "truncation height of the Dirichlet integrals");
    analyze->add_flag("--skip-dirichlet", skip_dirichlet);
    analyze->add_flag("--skip-herglotz", skip_herglotz);
    analyze->add_flag("--stamp", stamp, "add a UTC timestamp");

    CLI::App* sample = app.add_subcommand("sample", "CSV of x, lambda, D, u, v on [0, pi]");
    add_common(sample);
    sample->add_option("-o,--output", output);
    sample->add_option("-n,--points", n_points)->check(CLI::Range(2, 100000000));

    CLI::App* bounds = app.add_subcommand("bounds", "inequality certificate only");
    add_common(bounds);
    bounds->add_option("-o,--output", output);

    CLI::App* harper_cmd = app.add_subcommand("harper", "write a Harper operator document");
    harper_cmd->add_option("p", p)->required();
    harper_cmd->add_option("q", q)->required();
    harper_cmd->add_option("--theta", theta);
    harper_cmd->add_option("-o,--output", output);

    CLI::App* oracle = app.add_subcommand("oracle-check", "compare band edges with the Bloch eigenvalue sweep");
    add_common(oracle);
    oracle->add_option("--n-theta", n_theta)->check(CLI::Range(3, 10000000));

    CLI::App* trace = app.add_subcommand("trace-check", "trace formula of order n");
    add_common(trace);
    trace->add_option("-n,--order", order)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        SpectrumOptions sopts;
        sopts.edge_tol = tol_edge;
        if (analyze->parsed()) {
            io::AnalyzeOptions opts;
            opts.spectrum = sopts;
            opts.dirichlet.ymax = ymax;
            opts.skip_dirichlet = skip_dirichlet;
            opts.skip_herglotz = skip_herglotz;
            opts.stamp = stamp;
            io::cmd_analyze(input, output, opts);
        } else if (sample->parsed()) {
            io::cmd_sample(input, output, n_points, sopts);
        } else if (bounds->parsed()) {
            io::cmd_bounds(input, output, sopts);
        } else if (harper_cmd->parsed()) {
            io::cmd_harper(p, q, theta, output);
        } else if (oracle->parsed()) {
            const io::OracleReport rep = io::cmd_oracle_check(input, n_theta, sopts);
            std::cout << io::dump(io::oracle_json(rep));
            return rep.within_tolerance ? kOk : kNumerical;
        } else if (trace->parsed()) {
            std::cout << io::dump(io::cmd_trace_check(input, order, sopts));
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
    return kOk;
}
