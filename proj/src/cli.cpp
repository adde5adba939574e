#include "qmc/cli.hpp"

#include "qmc/compiler.hpp"
#include "qmc/experiment.hpp"
#include "qmc/manifest.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace qmc {

namespace {

std::string format_word(const GateWord& word) {
    if (word.letters.empty()) return "(identity)";
    std::string out;
    char buf[64];
    for (const Letter& l : word.letters) {
        if (!out.empty()) out += ' ';
        if (l.is_w) {
            out += 'W';
        } else {
            std::snprintf(buf, sizeof(buf), "P(%.10g)", l.theta);
            out += buf;
        }
    }
    return out;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
}

struct GlobalOpts {
    std::uint64_t seed = 12345;
    std::string out_path;
    long trials = 0;  // 0 = subcommand default
};

int cmd_qrng(const GlobalOpts& g, int qubits, long samples) {
    const QrngReport rep = run_qrng(qubits, samples, g.seed);
    std::printf("qrng: m=%d samples=%ld seed=%llu\n", rep.qubits, rep.samples,
                static_cast<unsigned long long>(g.seed));
    for (std::size_t i = 0; i < rep.counts.size(); ++i)
        std::printf("  outcome %3zu  count %8ld  frequency %.5f\n", i, rep.counts[i],
                    static_cast<double>(rep.counts[i]) / static_cast<double>(rep.samples));
    std::printf("chi-square %.4f (dof %zu)  p-value %.6f\n", rep.chi_square,
                rep.counts.size() - 1, rep.p_value);
    if (!g.out_path.empty()) {
        std::string csv = "outcome,count\n";
        for (std::size_t i = 0; i < rep.counts.size(); ++i)
            csv += std::to_string(i) + "," + std::to_string(rep.counts[i]) + "\n";
        write_or_print(g.out_path, csv);
    }
    return 0;
}

int cmd_grover(const GlobalOpts& g, int index_qubits, long marked) {
    if (index_qubits < 1 || index_qubits >= kMaxQubits)
        throw ConfigError("grover: --n-qubits must lie in [1, " +
                          std::to_string(kMaxQubits - 1) + ")");
    const long trials = g.trials > 0 ? g.trials : 1000;
    const std::int64_t n = std::int64_t{1} << index_qubits;
    if (marked < 0 || marked >= n)
        throw ConfigError("grover: marked index must lie in [0, 2^m1)");
    const BooleanOracle oracle = BooleanOracle::single_marked(n, marked);

    long hits = 0;
    for (long tr = 0; tr < trials; ++tr) {
        Rng rng(derive_seed(g.seed, static_cast<std::uint64_t>(tr)));
        if (grover_search(oracle, rng) == marked) ++hits;
    }
    const int k = grover_iterations(n);
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
    const double predicted = std::pow(std::sin((2.0 * k + 1.0) * theta), 2.0);
    const CostReport cost = tally_cost(grover_circuit(oracle));
    std::printf("grover: N=%lld marked=%ld iterations=%d trials=%ld\n",
                static_cast<long long>(n), marked, k, trials);
    std::printf("success frequency %.4f   analytic sin^2((2k+1)theta) = %.4f\n",
                static_cast<double>(hits) / static_cast<double>(trials), predicted);
    std::printf("cost: queries=%ld qubits=%ld gates=%ld total=%ld\n", cost.num_queries,
                cost.num_qubits, cost.num_elementary_gates, cost.total_cost);
    return 0;
}

int cmd_mean(const GlobalOpts& g, const std::string& values_file, int index_qubits,
             long boolean_ones, int phase_bits, int reps, bool bit_path) {
    EstimateConfig cfg;
    cfg.phase_bits = phase_bits;
    cfg.repetitions = reps;
    cfg.seed = g.seed;

    double truth, estimate;
    EstimateResult res;
    if (!values_file.empty()) {
        const SequenceOracle oracle = load_sequence_oracle_file(values_file);
        res = mean_real(oracle, cfg, bit_path);
        truth = oracle.values.mean();
        estimate = res.value;
        std::printf("mean (real-valued, %s path): N=%lld m2=%d t=%d reps=%d\n",
                    bit_path ? "bit" : "rotation", static_cast<long long>(oracle.length()),
                    oracle.value_qubits, cfg.phase_bits, cfg.repetitions);
    } else {
        if (index_qubits < 1 || index_qubits >= kMaxQubits)
            throw ConfigError("mean: --n-qubits must lie in [1, " +
                              std::to_string(kMaxQubits - 1) + ")");
        const std::int64_t n = std::int64_t{1} << index_qubits;
        const long ones = boolean_ones >= 0 ? boolean_ones : n / 2;
        if (ones < 0 || ones > n) throw ConfigError("mean: boolean ones outside [0, N]");
        std::vector<std::uint8_t> table(static_cast<std::size_t>(n), 0);
        for (long i = 0; i < ones; ++i) table[static_cast<std::size_t>(i)] = 1;
        const BooleanOracle oracle(std::move(table));
        res = mean_boolean(oracle, cfg);
        truth = static_cast<double>(ones) / static_cast<double>(n);
        estimate = res.value;
        std::printf("mean (boolean): N=%lld ones=%ld t=%d reps=%d\n",
                    static_cast<long long>(n), ones, cfg.phase_bits, cfg.repetitions);
    }
    std::printf("estimate %.10f   table mean %.10f   error %.3e\n", estimate, truth,
                std::abs(estimate - truth));
    std::printf("queries/repetition %ld   cost: queries=%ld qubits=%ld gates=%ld total=%ld\n",
                res.queries_per_repetition, res.cost.num_queries, res.cost.num_qubits,
                res.cost.num_elementary_gates, res.cost.total_cost);
    return 0;
}

int cmd_integrate(const GlobalOpts& g, const std::string& name, long n, int phase_bits,
                  int reps) {
    const ManifestEntry& entry = find_integrand(name);
    IntegrationTask task;
    task.f = entry.f;
    task.spec = entry.spec;
    task.n = n;
    task.config.phase_bits =
        phase_bits > 0 ? phase_bits
                       : floor_log2(static_cast<std::uint64_t>(std::max(n, 2L))) + 4;
    task.config.repetitions = reps;
    task.config.seed = g.seed;
    const IntegrationResult res = integrate_quantum(task);
    std::printf("integrate %s: d=%d r=%d rho=%.3f n=%ld t=%d reps=%d\n", entry.name.c_str(),
                entry.spec.dim, entry.spec.smoothness, entry.spec.hoelder, n,
                task.config.phase_bits, reps);
    std::printf("value %.10f   main part %.10f   residual estimate %.3e\n", res.value,
                res.main_part, res.residual.value);
    if (entry.analytic_integral)
        std::printf("analytic %.10f   error %.3e\n", *entry.analytic_integral,
                    std::abs(res.value - *entry.analytic_integral));
    std::printf("quantum cost: queries=%ld qubits=%ld gates=%ld total=%ld   classical evals=%ld\n",
                res.residual.cost.num_queries, res.residual.cost.num_qubits,
                res.residual.cost.num_elementary_gates, res.residual.cost.total_cost,
                res.classical_evals);
    return 0;
}

int cmd_compare(const GlobalOpts& g, const std::string& family,
                const std::vector<std::string>& methods, const std::vector<long>& n_grid,
                long sequence_length, int reps, int phase_offset) {
    ConvergenceStudyConfig cfg;
    cfg.family = family;
    cfg.methods = methods;
    cfg.n_grid = n_grid;
    cfg.trials = g.trials > 0 ? g.trials : 101;
    cfg.seed = g.seed;
    cfg.sequence_length = sequence_length;
    cfg.repetitions = reps;
    cfg.phase_offset = phase_offset;

    const StudyResult res = run_convergence(cfg);
    const std::string csv = to_csv(res.records);
    write_or_print(g.out_path, csv);
    std::ostream& slopes = g.out_path.empty() ? std::cerr : std::cout;
    for (const auto& mf : res.fits) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "slope %-14s %+.4f  (intercept %+.3f, rms %.3f, points %d)\n",
                      mf.method.c_str(), mf.fit.slope, mf.fit.intercept, mf.fit.rms_residual,
                      mf.fit.points_used);
        slopes << buf;
    }
    return 0;
}

int cmd_compile(const std::vector<double>& entries, int approx_len) {
    Eigen::Matrix2cd u;
    u << Complex(entries[0], entries[1]), Complex(entries[2], entries[3]),
        Complex(entries[4], entries[5]), Complex(entries[6], entries[7]);
    if (!is_unitary(u)) throw ConfigError("compile: the supplied matrix is not unitary");

    const GateWord word = compile_single_qubit(u);
    const double dist = phase_distance(word_matrix(word), u);
    std::printf("exact word (applied left to right): %s\n", format_word(word).c_str());
    std::printf("length %zu   phase distance %.3e\n", word.letters.size(), dist);
    if (approx_len > 0) {
        const ApproxResult ar = approx_search(u, approx_len);
        std::printf("approx word over {W, P(pi/4)} up to length %d: %s\n", approx_len,
                    format_word(ar.word).c_str());
        std::printf("length %zu   phase distance %.6e\n", ar.word.letters.size(), ar.distance);
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"quantum summation and integration testbed"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for every randomized step");
    app.add_option("--out", g.out_path, "output file for CSV results");
    app.add_option("--trials", g.trials, "trial count where applicable");

    auto* qrng = app.add_subcommand("qrng", "quantum random number generator demo");
    int qrng_qubits = 4;
    long qrng_samples = 100000;
    qrng->add_option("--n-qubits", qrng_qubits, "register size m");
    qrng->add_option("--samples", qrng_samples, "number of measurements");

    auto* grover = app.add_subcommand("grover", "search a uniquely marked index");
    int grover_qubits = 4;
    long grover_marked = 0;
    grover->add_option("--n-qubits", grover_qubits, "index register size m1 (N = 2^m1)");
    grover->add_option("--marked", grover_marked, "the marked index");

    auto* mean = app.add_subcommand("mean", "amplitude-estimated mean of a sequence");
    std::string mean_file;
    int mean_qubits = 6;
    long mean_ones = -1;
    int mean_phase_bits = 6;
    int mean_reps = 11;
    bool mean_bit_path = false;
    mean->add_option("--values-file", mean_file, "CSV of sequence values (header a,b,m2)");
    mean->add_option("--n-qubits", mean_qubits, "boolean table size m1 (N = 2^m1)");
    mean->add_option("--boolean-ones", mean_ones, "number of ones in the boolean table");
    mean->add_option("--phase-bits", mean_phase_bits, "phase register size t");
    mean->add_option("--reps", mean_reps, "median-boost repetitions (odd)");
    mean->add_flag("--bit-path", mean_bit_path, "mark through the value register");

    auto* integrate = app.add_subcommand("integrate", "control-variate quantum integration");
    std::string integrate_fn;
    long integrate_n = 16;
    int integrate_phase_bits = 0;
    int integrate_reps = 11;
    integrate->add_option("--function", integrate_fn, "manifest integrand name")->required();
    integrate->add_option("--n", integrate_n, "coarse budget n");
    integrate->add_option("--phase-bits", integrate_phase_bits, "phase register size (0 = auto)");
    integrate->add_option("--reps", integrate_reps, "median-boost repetitions (odd)");

    auto* compare = app.add_subcommand("compare", "convergence study across methods");
    std::string compare_family = "lipschitz";
    std::vector<std::string> compare_methods;
    std::vector<long> compare_grid;
    long compare_seq_len = 1024;
    int compare_reps = 11;
    int compare_offset = 6;
    compare->add_option("--family", compare_family, "lipschitz | boolean-mean");
    compare->add_option("--methods", compare_methods, "methods to run")->delimiter(',');
    compare->add_option("--n-grid", compare_grid, "budgets")->delimiter(',');
    compare->add_option("--sequence-length", compare_seq_len, "boolean family table length");
    compare->add_option("--reps", compare_reps, "quantum repetitions");
    compare->add_option("--phase-offset", compare_offset, "t = log2(n) + offset (lipschitz)");

    auto* compile = app.add_subcommand("compile", "single-qubit synthesis over {W, P_theta}");
    std::vector<double> compile_entries;
    int compile_approx = 0;
    compile
        ->add_option("--unitary", compile_entries,
                     "row-major re/im pairs: re00 im00 re01 im01 re10 im10 re11 im11")
        ->expected(8)
        ->required();
    compile->add_option("--approx", compile_approx,
                        "also search words over {W, P(pi/4)} up to this length");

    try {
        app.parse(argc, argv);
        if (qrng->parsed()) return cmd_qrng(g, qrng_qubits, qrng_samples);
        if (grover->parsed()) return cmd_grover(g, grover_qubits, grover_marked);
        if (mean->parsed())
            return cmd_mean(g, mean_file, mean_qubits, mean_ones, mean_phase_bits, mean_reps,
                            mean_bit_path);
        if (integrate->parsed())
            return cmd_integrate(g, integrate_fn, integrate_n, integrate_phase_bits,
                                 integrate_reps);
        if (compare->parsed())
            return cmd_compare(g, compare_family, compare_methods, compare_grid,
                               compare_seq_len, compare_reps, compare_offset);
        if (compile->parsed()) return cmd_compile(compile_entries, compile_approx);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("qmc");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace qmc
