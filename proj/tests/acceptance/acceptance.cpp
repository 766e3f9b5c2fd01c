// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>

#include "../support/oracles.hpp"
#include "../support/random_ops.hpp"
#include "pjacobi/bounds.hpp"
#include "pjacobi/discriminant.hpp"
#include "pjacobi/io.hpp"
#include "pjacobi/quasimomentum.hpp"
#include "pjacobi/spectrum.hpp"

using namespace pjacobi;
using testsupport::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// |x - ref| relative to max(|ref|, 1)
double mixed_error(std::complex<double> x, std::complex<double> ref) {
    return std::abs(x - ref) / std::max(std::abs(ref), 1.0);
}

}  // namespace

int main() {
    criterion(1, "Harper bound", [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string d;
        const double lb = harper_lower_bound();
        ok = ok && lb > 2.41 && lb < 2.42;
        for (int q : {3, 5}) {
            const BoundsReport rep = certify(harper(1, q, 0.0));
            const double tr = rep.summary.input_trace_L2;
            ok = ok && std::abs(tr - 4.0 * q) <= 1e-12 * 4.0 * q;
            ok = ok && rep.summary.c > lb && rep.at("c_gt_2A").satisfied && rep.at("eq_c2").satisfied;
            d += "q=" + std::to_string(q) + " TrL2=" + fmt("%.15g", tr) + " c=" + fmt("%.6f", rep.summary.c) + "; ";
        }
        const double secs = elapsed_since(t0);
        ok = ok && secs < 1.0;
        return Outcome{ok, d + "lower bound " + fmt("%.9f", lb) + ", " + fmt("%.3f", secs) + " s"};
    });

    criterion(2, "q=2 closed form", [] {
        Rng rng(1002);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const double a1 = testsupport::uniform(rng, 0.5, 2), a2 = testsupport::uniform(rng, 0.5, 2);
            const double b1 = testsupport::uniform(rng, -2, 2), b2 = testsupport::uniform(rng, -2, 2);
            const PeriodicJacobi J = make_jacobi(2, {a1, a2}, {b1, b2});
            for (int i = 0; i < 20; ++i) {
                const double lam = testsupport::uniform(rng, -5, 5);
                worst = std::max(worst, mixed_error(discriminant_value(J, lam), testsupport::q2_discriminant(a1, a2, b1, b2, lam)));
            }
        }
        return Outcome{worst < 1e-12, "max relative error " + fmt("%.2e", worst) + " (tol 1e-12)"};
    });

    criterion(3, "recurrence vs LU determinant", [] {
        Rng rng(1003);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const PeriodicJacobi J = testsupport::random_operator(rng, testsupport::random_period(rng, 2, 8));
            const double lam = testsupport::uniform(rng, -5, 5);
            worst = std::max(worst, mixed_error(discriminant_value(J, lam), testsupport::det_discriminant(J, lam)));
        }
        return Outcome{worst < 1e-9, "max relative error " + fmt("%.2e", worst) + " (tol 1e-9)"};
    });

    criterion(4, "Wronskian identity", [] {
        Rng rng(1003);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const int q = testsupport::random_period(rng, 2, 8);
            const PeriodicJacobi J = testsupport::random_operator(rng, q);
            const double lam = testsupport::uniform(rng, -5, 5);
            const double r = std::abs(fundamental_pair(J, lam).wronskian() - 1.0);
            worst = std::max(worst, r / (1e-10 * (1.0 + std::pow(std::abs(lam), 2 * q))));
        }
        return Outcome{worst < 1.0, "max residual / (1e-10 (1+|lambda|^2q)) = " + fmt("%.2e", worst)};
    });

    criterion(5, "Bloch oracle equivalence", [] {
        Rng rng(1005);
        double worst = 0.0;
        double worst_exact = 0.0;
        for (int t = 0; t < 50; ++t) {
            const PeriodicJacobi J = testsupport::random_operator(rng, testsupport::random_period(rng, 2, 6));
            const BandStructure B = band_edges(J);
            const std::vector<Interval> oracle = bloch_oracle(J, 721);
            for (int m = 1; m <= J.period(); ++m)
                worst = std::max(worst, interval_distance(B.band(m), oracle[static_cast<std::size_t>(m - 1)]) / B.c);
            for (double theta : {0.0, kPi}) {
                for (double ev : testsupport::bloch_eigenvalues(J, theta)) {
                    double nearest = 1e300;
                    for (double e : B.edges) nearest = std::min(nearest, std::abs(e - ev));
                    worst_exact = std::max(worst_exact, nearest);
                }
            }
        }
        return Outcome{worst < 1e-4 && worst_exact < 1e-9,
                       "max distance/c " + fmt("%.2e", worst) + " (tol 1e-4), theta in {0,pi} " +
                           fmt("%.2e", worst_exact) + " (tol 1e-9)"};
    });

    criterion(6, "trace formulas", [] {
        const auto t0 = std::chrono::steady_clock::now();
        Rng rng(1006);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const QuasimomentumModel M =
                QuasimomentumModel::build(testsupport::random_operator(rng, testsupport::random_period(rng, 2, 5)));
            for (int n = 0; n <= std::min(4, 2 * M.period() - 1); ++n) worst = std::max(worst, trace_moment_check(M, n).residual);
        }
        const double secs = elapsed_since(t0);
        return Outcome{worst < 1e-8 && secs < 10.0,
                       "max residual " + fmt("%.2e", worst) + " (tol 1e-8), " + fmt("%.2f", secs) + " s (limit 10)"};
    });

    criterion(7, "Dirichlet integrals", [] {
        const auto t0 = std::chrono::steady_clock::now();
        Rng rng(1007);
        double worst1 = 0.0;
        double worst2 = 0.0;
        for (int t = 0; t < 10; ++t) {
            const QuasimomentumModel M =
                QuasimomentumModel::build(testsupport::random_operator(rng, testsupport::random_period(rng, 2, 3)));
            worst1 = std::max(worst1, dirichlet_integral_1(M).relative_residual);
            worst2 = std::max(worst2, dirichlet_integral_2(M).relative_residual);
        }
        const QuasimomentumModel C = QuasimomentumModel::build(testsupport::constant_operator(3));
        const bool zero = dirichlet_integral_1(C).integral == 0.0 && dirichlet_integral_2(C).integral == 0.0;
        const double secs = elapsed_since(t0);
        return Outcome{worst1 < 1e-2 && worst2 < 1e-2 && zero && secs < 60.0,
                       "max relative residual " + fmt("%.2e", worst1) + " / " + fmt("%.2e", worst2) +
                           " (tol 1e-2), constant operator " + (zero ? "0" : "nonzero") + ", " + fmt("%.1f", secs) +
                           " s (limit 60)"};
    });

    criterion(8, "vertical identity", [] {
        Rng rng(1008);
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const QuasimomentumModel M =
                QuasimomentumModel::build(testsupport::random_operator(rng, testsupport::random_period(rng, 2, 4)));
            worst = std::max(worst, vertical_identity_check(M).residual);
        }
        return Outcome{worst < 1e-6, "max residual " + fmt("%.2e", worst) + " (tol 1e-6)"};
    });

    criterion(9, "Herglotz cross-check", [] {
        Rng rng(1009);
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            const QuasimomentumModel M =
                QuasimomentumModel::build(testsupport::random_operator(rng, testsupport::random_period(rng, 2, 6)));
            for (int i = 0; i < 20; ++i) {
                const cplx z(testsupport::uniform(rng, 0.0, kPi), testsupport::uniform(rng, 0.01, 3.0));
                worst = std::max(worst, std::abs(herglotz_k(M, z) - M.k(z)));
            }
        }
        return Outcome{worst < 1e-5, "max |difference| " + fmt("%.2e", worst) + " (tol 1e-5)"};
    });

    // criteria 10 and 11 share one ensemble
    Rng ens_rng(1010);
    std::vector<PeriodicJacobi> ensemble;
    for (int t = 0; t < 200; ++t)
        ensemble.push_back(testsupport::random_operator(ens_rng, testsupport::random_period(ens_rng, 2, 6)));

    criterion(10, "inequality suite", [&] {
        int violations = 0;
        int evaluated = 0;
        std::string first;
        for (const PeriodicJacobi& J : ensemble) {
            for (const BoundRecord& r : certify(J).records) {
                if (r.degenerate) continue;
                ++evaluated;
                if (!r.satisfied) {
                    ++violations;
                    if (first.empty()) first = ", first: " + r.name;
                }
            }
        }
        return Outcome{violations == 0, std::to_string(evaluated) + " records, " + std::to_string(violations) +
                                            " violations" + first};
    });

    criterion(11, "gap shape properties", [&] {
        int gaps = 0;
        int bad = 0;
        double worst_h = 0.0;
        for (const PeriodicJacobi& J : ensemble) {
            const QuasimomentumModel M = QuasimomentumModel::build(J);
            for (int n = 1; n < M.period(); ++n) {
                if (!M.gap_open(n)) continue;
                ++gaps;
                const GapShapeReport r = gap_shape_checks(M, n, 1000);
                bad += r.semicircle_violations + r.concavity_violations;
                worst_h = std::max(worst_h, std::abs(sampled_gap_maximum(M, n) - M.slit_heights()[static_cast<std::size_t>(n - 1)]));
            }
        }
        return Outcome{bad == 0 && worst_h < 1e-8, std::to_string(gaps) + " open gaps x 1000 points, " +
                                                       std::to_string(bad) + " violations, max |h_n - max v| " +
                                                       fmt("%.2e", worst_h) + " (tol 1e-8)"};
    });

    criterion(12, "reconstruction round trip", [] {
        Rng rng(1012);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const int q = testsupport::random_period(rng, 2, 5);
            const PeriodicJacobi J = testsupport::random_operator(rng, q);
            const MonicPair mp = monic_pair(J);
            const PeriodicJacobi K = reconstruct_from_monic_pair(mp.phi_hat_q1, mp.phi_hat_q, mp.leading);
            for (int n = 0; n < q; ++n) {
                worst = std::max(worst, std::abs(K.a()[static_cast<std::size_t>(n)] - J.a()[static_cast<std::size_t>(n)]));
                worst = std::max(worst, std::abs(K.b()[static_cast<std::size_t>(n)] - J.b()[static_cast<std::size_t>(n)]));
            }
        }
        return Outcome{worst < 1e-8, "max coefficient error " + fmt("%.2e", worst) + " (tol 1e-8)"};
    });

    criterion(13, "deterministic analysis output", [] {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / ("pjacobi_accept_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const fs::path in = dir / "op.json";
        std::ofstream(in) << io::dump(io::operator_json(harper(1, 3, 0.0)));
        const fs::path o1 = dir / "run1.json";
        const fs::path o2 = dir / "run2.json";
        io::cmd_analyze(in.string(), o1.string(), {});
        io::cmd_analyze(in.string(), o2.string(), {});
        auto slurp = [](const fs::path& p) {
            std::ifstream f(p, std::ios::binary);
            std::stringstream ss;
            ss << f.rdbuf();
            return ss.str();
        };
        const std::string a = slurp(o1);
        const std::string b = slurp(o2);
        fs::remove_all(dir);
        return Outcome{!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures;
}
