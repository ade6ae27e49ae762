// Command-line front end: point evaluation, CSV profiles, second-derivative
// jump tables, companion-zero tables with decay fits, prime-counting
// comparisons, runtime-scaling benchmarks, and the full selftest.
//
// Exit codes: 0 success, 2 bad flags, 3 I/O error, 4 selftest failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fejerprime/arith.hpp"
#include "fejerprime/counting.hpp"
#include "fejerprime/cutoff.hpp"
#include "fejerprime/fejer_term.hpp"
#include "fejerprime/indicator.hpp"
#include "fejerprime/parallel.hpp"
#include "fejerprime/selftest.hpp"
#include "fejerprime/smooth.hpp"
#include "fejerprime/zeros.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlags = 2;
constexpr int kExitIo = 3;
constexpr int kExitSelftest = 4;

// Scientific notation with 17 significant digits round-trips doubles.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

fejer::EvalStrategy parse_strategy(const std::string& name, int rpf_terms) {
    fejer::EvalStrategy s;
    s.rpf_terms = rpf_terms;
    if (name == "auto") s.kind = fejer::EvalKind::automatic;
    else if (name == "poly") s.kind = fejer::EvalKind::cosine_poly;
    else if (name == "quotient") s.kind = fejer::EvalKind::sine_quotient;
    else if (name == "rpf") s.kind = fejer::EvalKind::rpf;
    else throw CLI::ValidationError("--strategy must be auto|poly|quotient|rpf");
    return s;
}

int grid_size(double from, double to, double step) {
    return static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
}

struct CsvFile {
    std::ofstream out;
    explicit CsvFile(const std::string& path) : out(path) {}
    bool ok() const { return out.good(); }
};

int cmd_eval(const std::string& fn, double x, const std::string& strategy,
             int rpf_k, double kappa, double eps) {
    if (fn == "P") {
        const auto strat = parse_strategy(strategy, rpf_k);
        if (strat.kind == fejer::EvalKind::rpf) {
            const auto cv = fejer::indicator_P_certified(x, rpf_k);
            std::printf("%s (abs error bound %s)\n", num(cv.value).c_str(),
                        num(cv.abs_error_bound).c_str());
        } else {
            std::printf("%s\n", num(fejer::indicator_P(x, strat).value).c_str());
        }
    } else if (fn == "ptau" || fn == "psigma") {
        const auto sv = fn == "ptau" ? fejer::p_tau(x, kappa, eps)
                                     : fejer::p_sigma(x, kappa, eps);
        std::printf("%s (tail bound %s, cut %lld)\n", num(sv.value).c_str(),
                    num(sv.tail_bound).c_str(), static_cast<long long>(sv.cut_used));
    } else {
        throw CLI::ValidationError("--fn must be P|ptau|psigma");
    }
    return kExitOk;
}

int cmd_profile(const std::string& fn, double from, double to, double step,
                const std::string& strategy, int rpf_k, double kappa,
                const std::vector<double>& kappas, double eps,
                const std::string& out_path) {
    CsvFile csv(out_path);
    if (!csv.ok()) {
        std::fprintf(stderr, "cannot open output path: %s\n", out_path.c_str());
        return kExitIo;
    }
    const int n = grid_size(from, to, step);

    if (fn == "phi") {
        const std::vector<double> ks = kappas.empty() ? std::vector<double>{kappa} : kappas;
        csv.out << "x,kappa,value\n";
        for (const double k : ks) {
            for (int j = 0; j < n; ++j) {
                const double u = from + j * step;
                csv.out << num(u) << ',' << num(k) << ',' << num(fejer::phi(u, k)) << '\n';
            }
        }
        return csv.out.good() ? kExitOk : kExitIo;
    }

    std::vector<double> values(n), tails(n);
    const bool smooth = fn == "ptau" || fn == "psigma";
    if (fn == "P") {
        const auto strat = parse_strategy(strategy, rpf_k);
        fejer::parallel_for_index(static_cast<std::size_t>(n), [&](std::size_t j) {
            values[j] = fejer::indicator_P(from + static_cast<double>(j) * step, strat).value;
        });
    } else if (smooth) {
        fejer::parallel_for_index(static_cast<std::size_t>(n), [&](std::size_t j) {
            const double x = from + static_cast<double>(j) * step;
            const auto sv =
                fn == "ptau" ? fejer::p_tau(x, kappa, eps) : fejer::p_sigma(x, kappa, eps);
            values[j] = sv.value;
            tails[j] = sv.tail_bound;
        });
    } else {
        throw CLI::ValidationError("--fn must be P|ptau|psigma|phi");
    }

    csv.out << (smooth ? "x,value,tail_bound\n" : "x,value\n");
    for (int j = 0; j < n; ++j) {
        csv.out << num(from + j * step) << ',' << num(values[j]);
        if (smooth) csv.out << ',' << num(tails[j]);
        csv.out << '\n';
    }
    return csv.out.good() ? kExitOk : kExitIo;
}

int cmd_jumps(int m_max, double h, const std::string& out_path) {
    CsvFile csv(out_path);
    if (!csv.ok()) {
        std::fprintf(stderr, "cannot open output path: %s\n", out_path.c_str());
        return kExitIo;
    }
    csv.out << "m,predicted,measured,rel_error,h\n";
    for (int m = 1; m <= m_max; ++m) {
        const auto r = fejer::jump_measured(static_cast<std::uint64_t>(m), h);
        csv.out << m << ',' << num(r.predicted) << ',' << num(r.measured) << ','
                << num(std::abs(r.measured - r.predicted) / r.predicted) << ','
                << num(h) << '\n';
    }
    return csv.out.good() ? kExitOk : kExitIo;
}

int cmd_zeros(const std::string& fn, const std::vector<std::uint64_t>& primes,
              const std::vector<double>& kappas, const std::string& out_path) {
    if (fn != "tau" && fn != "sigma")
        throw CLI::ValidationError("--fn must be tau|sigma");
    CsvFile csv(out_path);
    if (!csv.ok()) {
        std::fprintf(stderr, "cannot open output path: %s\n", out_path.c_str());
        return kExitIo;
    }
    csv.out << "fn,p,kappa,left,right,left_gap,right_gap,slope_left,slope_right\n";
    for (const std::uint64_t p : primes) {
        std::vector<fejer::ZeroPair> rows;
        std::vector<std::pair<double, double>> left_pts, right_pts;
        for (const double kappa : kappas) {
            const auto z = fn == "tau" ? fejer::companion_zeros_tau(p, kappa)
                                       : fejer::companion_zeros_sigma(p, kappa);
            rows.push_back(z);
            if (z.left && z.left_gap() > 0.0) left_pts.emplace_back(kappa, z.left_gap());
            if (z.right && z.right_gap() > 0.0) right_pts.emplace_back(kappa, z.right_gap());
        }
        std::string slope_left, slope_right;
        if (left_pts.size() >= 3) slope_left = num(fejer::decay_fit(left_pts).slope);
        if (right_pts.size() >= 3) slope_right = num(fejer::decay_fit(right_pts).slope);
        for (const auto& z : rows) {
            csv.out << fn << ',' << p << ',' << num(z.kappa) << ','
                    << (z.left ? num(*z.left) : "") << ','
                    << (z.right ? num(*z.right) : "") << ','
                    << (z.left ? num(z.left_gap()) : "") << ','
                    << (z.right ? num(z.right_gap()) : "") << ',' << slope_left << ','
                    << slope_right << '\n';
        }
    }
    return csv.out.good() ? kExitOk : kExitIo;
}

int cmd_count(double x_max, double c, double kappa, double alpha, double gamma,
              double lambda, const std::string& out_path) {
    CsvFile csv(out_path);
    if (!csv.ok()) {
        std::fprintf(stderr, "cannot open output path: %s\n", out_path.c_str());
        return kExitIo;
    }
    const double gamma_max = fejer::gamma_admissible_max(alpha, x_max, lambda);
    std::printf("admissibility: gamma=%g <= gamma_max=%.4f at alpha=%g, lambda=%g, X=%g: %s\n",
                gamma, gamma_max, alpha, lambda, x_max, gamma <= gamma_max ? "ok" : "VIOLATED");

    csv.out << "n,pi,pi_baseline,pi_h\n";
    const auto limit = static_cast<std::uint64_t>(x_max);
    const auto table = fejer::arith::prime_table(limit);
    double pi_exact = 0.0, baseline = 0.0, hsum = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        pi_exact += table[n] ? 1.0 : 0.0;
        const double g_fixed = std::abs(fejer::p_tau_integer(n, kappa));
        baseline += c / (g_fixed + c);
        const double kappa_n = alpha * (static_cast<double>(n) + 1.0);
        const double g = std::abs(fejer::p_tau_integer(n, kappa_n));
        const double eps_n = std::pow(static_cast<double>(n) + 1.0, -gamma);
        hsum += eps_n / (g + eps_n);
        csv.out << n << ',' << num(pi_exact) << ',' << num(baseline) << ',' << num(hsum)
                << '\n';
    }
    const auto ed = fejer::error_decomposition(x_max, {alpha, gamma, lambda, x_max});
    std::printf("H-variant error split at X=%g: composite leakage %.6e (bound %.6e), prime deficit %.6e\n",
                x_max, ed.composite_leakage, ed.leakage_bound, ed.prime_deficit);
    return csv.out.good() ? kExitOk : kExitIo;
}

double time_indicator_eval(double x, fejer::EvalStrategy strategy, int min_reps) {
    using clock_type = std::chrono::steady_clock;
    volatile double sink = 0.0;
    double best = 1e300;
    for (int pass = 0; pass < 2; ++pass) {
        int reps = 0;
        const auto t0 = clock_type::now();
        double elapsed = 0.0;
        do {
            sink = sink + fejer::indicator_P(x, strategy).value;
            ++reps;
            elapsed = std::chrono::duration<double>(clock_type::now() - t0).count();
        } while (elapsed < 0.03 || reps < min_reps);
        best = std::min(best, elapsed / reps);
    }
    (void)sink;
    return best;
}

int cmd_bench(const std::vector<double>& xs, int reps, const std::string& out_path) {
    struct Lane {
        const char* name;
        fejer::EvalStrategy strategy;
    };
    const std::vector<Lane> lanes = {
        {"cosine_poly", {fejer::EvalKind::cosine_poly}},
        {"sine_quotient", {fejer::EvalKind::sine_quotient}},
        {"rpf_k2", {fejer::EvalKind::rpf, 2}},
    };
    std::ofstream csv;
    if (!out_path.empty()) {
        csv.open(out_path);
        if (!csv.good()) {
            std::fprintf(stderr, "cannot open output path: %s\n", out_path.c_str());
            return kExitIo;
        }
        csv << "strategy,x,seconds_per_eval\n";
    }
    std::printf("%-14s %12s %16s\n", "strategy", "x", "sec/eval");
    std::vector<std::vector<double>> times(lanes.size());
    for (std::size_t l = 0; l < lanes.size(); ++l) {
        for (const double x : xs) {
            const double t = time_indicator_eval(x, lanes[l].strategy, reps);
            times[l].push_back(t);
            std::printf("%-14s %12.1f %16.3e\n", lanes[l].name, x, t);
            if (csv.is_open()) csv << lanes[l].name << ',' << num(x) << ',' << num(t) << '\n';
        }
    }
    std::printf("\nfitted log-log exponents:\n");
    for (std::size_t l = 0; l < lanes.size(); ++l) {
        double mx = 0.0, my = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            mx += std::log(xs[j]);
            my += std::log(times[l][j]);
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            sxx += (std::log(xs[j]) - mx) * (std::log(xs[j]) - mx);
            sxy += (std::log(xs[j]) - mx) * (std::log(times[l][j]) - my);
        }
        std::printf("  %-14s %.3f\n", lanes[l].name, sxy / sxx);
    }
    std::printf("rpf_k2 / sine_quotient time at x=%.0f: %.2f\n", xs.back(),
                times[2].back() / times[1].back());
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, bool skip_timing) {
    const auto results = fejer::run_selftest({seed, skip_timing});
    bool all = true;
    std::printf("%-36s %-6s %8s  detail\n", "check", "status", "time");
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%-36s %-6s %7.1fs  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.seconds, r.detail.c_str());
    }
    std::printf("%s\n", all ? "all checks passed" : "CHECK FAILURES PRESENT");
    return all ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fejer divisor-filter prime indicators: evaluation, profiles, and experiments"};
    app.require_subcommand(1);

    // eval
    std::string fn = "P", strategy = "auto";
    double x = 2.0, kappa = 1000.0, eps = 1e-12;
    int rpf_k = 2;
    auto* eval = app.add_subcommand("eval", "evaluate P, P_tau, or P_sigma at a point");
    eval->add_option("--fn", fn, "P|ptau|psigma")->capture_default_str();
    eval->add_option("--x", x, "evaluation point")->required();
    eval->add_option("--strategy", strategy, "auto|poly|quotient|rpf (P only)")
        ->capture_default_str();
    eval->add_option("--rpf-k", rpf_k, "pole pairs for rpf")->capture_default_str();
    eval->add_option("--kappa", kappa, "steepness (smooth fns)")->capture_default_str();
    eval->add_option("--eps", eps, "tail budget (smooth fns)")->capture_default_str();

    // profile
    double from = 2.0, to = 50.0, step = 0.01;
    std::string out_path = "profile.csv";
    std::vector<double> kappa_list;
    auto* profile = app.add_subcommand("profile", "CSV profile over a grid");
    profile->add_option("--fn", fn, "P|ptau|psigma|phi")->capture_default_str();
    profile->add_option("--from", from)->capture_default_str();
    profile->add_option("--to", to)->capture_default_str();
    profile->add_option("--step", step)->capture_default_str()->check(CLI::PositiveNumber);
    profile->add_option("--strategy", strategy)->capture_default_str();
    profile->add_option("--rpf-k", rpf_k)->capture_default_str();
    profile->add_option("--kappa", kappa)->capture_default_str();
    profile->add_option("--kappas", kappa_list, "comma list (phi profiles)")->delimiter(',');
    profile->add_option("--eps", eps)->capture_default_str();
    profile->add_option("--out", out_path)->capture_default_str();

    // jumps
    int m_max = 20;
    double h = 1e-4;
    auto* jumps = app.add_subcommand("jumps", "second-derivative jump table at squares");
    jumps->set_help_flag("--help", "print help");  // frees -h for the step size
    jumps->add_option("--m-max", m_max)->capture_default_str()->check(CLI::PositiveNumber);
    jumps->add_option("--h", h)->capture_default_str();
    jumps->add_option("--out", out_path)->capture_default_str();

    // zeros
    std::string zero_fn = "tau";
    std::vector<std::uint64_t> primes = {3, 5, 7};
    std::vector<double> zero_kappas = {20, 40, 80};
    auto* zeros = app.add_subcommand("zeros", "companion zeros near odd primes");
    zeros->add_option("--fn", zero_fn, "tau|sigma")->capture_default_str();
    zeros->add_option("--primes", primes)->delimiter(',');
    zeros->add_option("--kappas", zero_kappas)->delimiter(',');
    zeros->add_option("--out", out_path)->capture_default_str();

    // count
    double x_max = 50.0, c_thresh = 0.1, count_kappa = 1000.0;
    double alpha = 18.5, gamma = 5.0, lambda = 100.0;
    auto* count = app.add_subcommand("count", "prime-counting comparison table");
    count->add_option("--x-max", x_max)->capture_default_str();
    count->add_option("--c", c_thresh, "baseline threshold C")->capture_default_str();
    count->add_option("--kappa", count_kappa, "baseline steepness")->capture_default_str();
    count->add_option("--alpha", alpha)->capture_default_str();
    count->add_option("--gamma", gamma)->capture_default_str();
    count->add_option("--lambda", lambda)->capture_default_str();
    count->add_option("--out", out_path)->capture_default_str();

    // bench
    std::vector<double> bench_xs = {1e4 + 0.5, 1e5 + 0.5, 1e6 + 0.5, 1e7 + 0.5};
    int bench_reps = 3;
    auto* bench = app.add_subcommand("bench", "runtime scaling of the P strategies");
    bench->add_option("--x-list", bench_xs)->delimiter(',');
    bench->add_option("--reps", bench_reps)->capture_default_str();
    bench->add_option("--out", out_path, "optional CSV path")->default_val("");

    // selftest
    std::uint64_t seed = 1;
    bool skip_timing = false;
    auto* selftest = app.add_subcommand("selftest", "run the full property suite");
    selftest->add_option("--seed", seed)->capture_default_str();
    selftest->add_flag("--skip-timing", skip_timing, "skip the runtime-scaling check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitFlags;
    }

    try {
        if (eval->parsed()) return cmd_eval(fn, x, strategy, rpf_k, kappa, eps);
        if (profile->parsed())
            return cmd_profile(fn, from, to, step, strategy, rpf_k, kappa, kappa_list, eps,
                               out_path);
        if (jumps->parsed()) return cmd_jumps(m_max, h, out_path);
        if (zeros->parsed()) return cmd_zeros(zero_fn, primes, zero_kappas, out_path);
        if (count->parsed())
            return cmd_count(x_max, c_thresh, count_kappa, alpha, gamma, lambda, out_path);
        if (bench->parsed()) return cmd_bench(bench_xs, bench_reps, out_path);
        if (selftest->parsed()) return cmd_selftest(seed, skip_timing);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitFlags;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return kExitFlags;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitOk;
}
