#include "qmc/experiment.hpp"

#include "qmc/manifest.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace qmc {

QrngReport run_qrng(int qubits, long samples, std::uint64_t seed) {
    if (qubits < 1 || qubits > kMaxQubits)
        throw ConfigError("qrng: qubit count outside [1, " + std::to_string(kMaxQubits) + "]");
    if (samples < 1) throw ConfigError("qrng: need at least one sample");

    Circuit c(qubits);
    for (int q = 0; q < qubits; ++q) c.w(q);
    StateVector psi = init_classical(qubits, 0);
    apply_circuit(psi, c);

    QrngReport report;
    report.qubits = qubits;
    report.samples = samples;
    report.counts.assign(std::size_t{1} << qubits, 0);
    Rng rng(seed);
    for (long s = 0; s < samples; ++s) ++report.counts[measure(psi, rng)];

    const double expected =
        static_cast<double>(samples) / static_cast<double>(report.counts.size());
    for (long c_i : report.counts) {
        const double dev = static_cast<double>(c_i) - expected;
        report.chi_square += dev * dev / expected;
    }
    report.p_value =
        chi_square_pvalue(report.chi_square, static_cast<int>(report.counts.size()) - 1);
    return report;
}

namespace {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t method_idx, std::size_t n_idx,
                         long trial) {
    const std::uint64_t lane = derive_seed(seed, 1000003ULL * method_idx + n_idx);
    return derive_seed(lane, static_cast<std::uint64_t>(trial));
}

long interpolation_evals(const HoelderSpec& spec, long n) {
    const long k = integer_root(n, spec.dim);
    const long per_axis = k * std::max(spec.smoothness, 1) + 1;
    long count = 1;
    for (int a = 0; a < spec.dim; ++a) count *= per_axis;
    return count;
}

ConvergenceRecord make_record(const std::string& method, long n, long trials,
                              double median_error, std::uint64_t seed) {
    ConvergenceRecord rec;
    rec.method = method;
    rec.n = n;
    rec.trials = trials;
    rec.median_error = median_error;
    rec.seed = seed;
    return rec;
}

void run_boolean_family(const ConvergenceStudyConfig& cfg, std::size_t method_idx,
                        const std::string& method, StudyResult& out) {
    for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
        const long n = cfg.n_grid[ni];
        if (!is_power_of_two(static_cast<std::uint64_t>(n)))
            throw ConfigError("boolean-mean family: budgets must be powers of two");
        const int t = floor_log2(static_cast<std::uint64_t>(n));
        std::vector<double> errors;
        errors.reserve(static_cast<std::size_t>(cfg.trials));
        ConvergenceRecord rec = make_record(method, n, cfg.trials, 0.0, cfg.seed);
        for (long trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t s = trial_seed(cfg.seed, method_idx, ni, trial);
            const BooleanOracle oracle = sample_boolean_sequence(cfg.sequence_length, s);
            const double truth = static_cast<double>(oracle.count_marked()) /
                                 static_cast<double>(oracle.length());
            if (method == "quantum") {
                EstimateConfig ec;
                ec.phase_bits = t;
                ec.repetitions = cfg.repetitions;
                ec.seed = derive_seed(s, 0xe5717a7eULL);
                const EstimateResult est = mean_boolean(oracle, ec);
                errors.push_back(std::abs(est.value - truth));
                rec.queries = est.cost.num_queries;
                rec.gates = est.cost.num_elementary_gates;
                rec.qubits = est.cost.num_qubits;
                rec.total_cost = est.cost.total_cost;
            } else if (method == "monte-carlo") {
                Eigen::VectorXd values(oracle.length());
                for (Eigen::Index i = 0; i < values.size(); ++i)
                    values[i] = oracle.table[static_cast<std::size_t>(i)];
                Rng rng(derive_seed(s, 0x3c5ca7eULL));
                errors.push_back(std::abs(mc_mean_sequence(values, n, rng) - truth));
                rec.queries = n;
                rec.total_cost = n;
            } else {
                throw ConfigError("boolean-mean family supports methods: quantum, monte-carlo");
            }
        }
        rec.median_error = median_inplace(errors);
        out.records.push_back(std::move(rec));
    }
}

void run_lipschitz_family(const ConvergenceStudyConfig& cfg, std::size_t method_idx,
                          const std::string& method, StudyResult& out) {
    const HoelderSpec spec{0, 1.0, 1};
    for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
        const long n = cfg.n_grid[ni];
        std::vector<double> errors;
        errors.reserve(static_cast<std::size_t>(cfg.trials));
        ConvergenceRecord rec = make_record(method, n, cfg.trials, 0.0, cfg.seed);
        for (long trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t s = trial_seed(cfg.seed, method_idx, ni, trial);
            const LipschitzSample sample = sample_lipschitz_integrand(s);
            if (method == "deterministic") {
                errors.push_back(std::abs(det_quadrature(sample.f, spec, n) - sample.integral));
                rec.queries = interpolation_evals(spec, n);
                rec.total_cost = rec.queries;
            } else if (method == "monte-carlo") {
                Rng rng(derive_seed(s, 0x3c5ca7eULL));
                errors.push_back(
                    std::abs(mc_mean_integrand(sample.f, 1, n, rng) - sample.integral));
                rec.queries = n;
                rec.total_cost = n;
            } else if (method == "cv-monte-carlo") {
                Rng rng(derive_seed(s, 0x3c5ca7eULL));
                errors.push_back(
                    std::abs(cv_mc_integrate(sample.f, spec, n, rng) - sample.integral));
                rec.queries = n + interpolation_evals(spec, n);
                rec.total_cost = rec.queries;
            } else if (method == "quantum") {
                IntegrationTask task;
                task.f = sample.f;
                task.spec = spec;
                task.n = n;
                task.config.phase_bits =
                    floor_log2(static_cast<std::uint64_t>(n)) + cfg.phase_offset;
                task.config.repetitions = cfg.repetitions;
                task.config.seed = derive_seed(s, 0xe5717a7eULL);
                const IntegrationResult res = integrate_quantum(task);
                errors.push_back(std::abs(res.value - sample.integral));
                rec.queries = res.residual.cost.num_queries;
                rec.gates = res.residual.cost.num_elementary_gates;
                rec.qubits = res.residual.cost.num_qubits;
                rec.total_cost = res.residual.cost.total_cost;
            } else {
                throw ConfigError(
                    "lipschitz family supports methods: deterministic, monte-carlo, "
                    "cv-monte-carlo, quantum");
            }
        }
        rec.median_error = median_inplace(errors);
        out.records.push_back(std::move(rec));
    }
}

} // namespace

StudyResult run_convergence(const ConvergenceStudyConfig& cfg_in) {
    ConvergenceStudyConfig cfg = cfg_in;
    if (cfg.trials < 1) throw ConfigError("convergence study: need at least one trial");
    if (cfg.family != "lipschitz" && cfg.family != "boolean-mean")
        throw ConfigError("unknown family '" + cfg.family +
                          "'; available: lipschitz, boolean-mean");
    if (cfg.methods.empty()) {
        cfg.methods = cfg.family == "lipschitz"
                          ? std::vector<std::string>{"deterministic", "cv-monte-carlo", "quantum"}
                          : std::vector<std::string>{"monte-carlo", "quantum"};
    }
    if (cfg.n_grid.empty()) {
        cfg.n_grid = cfg.family == "lipschitz" ? std::vector<long>{4, 8, 16, 32}
                                               : std::vector<long>{16, 32, 64, 128, 256, 512};
    }

    StudyResult out;
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        const std::string& method = cfg.methods[mi];
        if (cfg.family == "boolean-mean")
            run_boolean_family(cfg, mi, method, out);
        else
            run_lipschitz_family(cfg, mi, method, out);
    }

    std::sort(out.records.begin(), out.records.end(),
              [](const ConvergenceRecord& a, const ConvergenceRecord& b) {
                  return std::tie(a.method, a.n) < std::tie(b.method, b.n);
              });

    for (const std::string& method : cfg.methods) {
        std::vector<ConvergenceRecord> rows;
        for (const auto& rec : out.records)
            if (rec.method == method) rows.push_back(rec);
        out.fits.push_back({method, fit_rate(rows)});
    }
    return out;
}

const std::string& convergence_csv_header() {
    static const std::string header =
        "method,n,trials,median_error,queries,gates,qubits,total_cost,seed";
    return header;
}

std::string to_csv(const std::vector<ConvergenceRecord>& records) {
    std::string out = convergence_csv_header() + "\n";
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%s,%ld,%ld,%.17g,%ld,%ld,%ld,%ld,%" PRIu64 "\n",
                      r.method.c_str(), r.n, r.trials, r.median_error, r.queries, r.gates,
                      r.qubits, r.total_cost, r.seed);
        out += buf;
    }
    return out;
}

} // namespace qmc
